#pragma once

// Fock representation of the complex Clifford algebra CCl(2n),
// {gamma_j, gamma_k} = -2 delta_jk.
//
// P1 sends e_{2j-1} to e_j, P2 sends e_{2j} to e_j, and
//   gamma(v) = c^dagger(P1 v) - c(conj(P1 v)) - i (c^dagger(P2 v) + c(conj(P2 v))).
// On basis vectors this gives gamma_{2k-1} = c_k^dagger - c_k and
// gamma_{2k} = -i (c_k^dagger + c_k).

#include "spinfock/fock.hpp"

#include <span>
#include <vector>

namespace spinfock {

/// Symmetric bilinear form <v, w> = sum v_j w_j (no conjugation).
inline Complex bilinear(std::span<const Complex> v, std::span<const Complex> w) {
  if (v.size() != w.size()) throw SizeError("bilinear form: length mismatch");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

/// Hermitian product (v, w) = <conj(v), w>.
inline Complex hermitian(std::span<const Complex> v, std::span<const Complex> w) {
  if (v.size() != w.size()) throw SizeError("hermitian product: length mismatch");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * w[i];
  return s;
}

/// c^dagger(w) = sum_k w_k c_k^dagger; complex-linear in w.
inline Matrix creation_of(std::span<const Complex> w, int n) {
  if (w.size() != static_cast<std::size_t>(n)) throw SizeError("creation_of: length mismatch");
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  Matrix m = Matrix::Zero(dim, dim);
  for (int k = 1; k <= n; ++k)
    if (w[k - 1] != Complex{}) m += w[k - 1] * creation_matrix(k, n);
  return m;
}

/// c(w) = sum_k conj(w_k) c_k; conjugate-linear in w.
inline Matrix annihilation_of(std::span<const Complex> w, int n) {
  if (w.size() != static_cast<std::size_t>(n)) throw SizeError("annihilation_of: length mismatch");
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  Matrix m = Matrix::Zero(dim, dim);
  for (int k = 1; k <= n; ++k)
    if (w[k - 1] != Complex{}) m += std::conj(w[k - 1]) * annihilation_matrix(k, n);
  return m;
}

inline Matrix gamma_of_vector(std::span<const Complex> v, int n) {
  check_modes(n);
  if (v.size() != static_cast<std::size_t>(2 * n)) {
    throw SizeError("gamma_of_vector: expected " + std::to_string(2 * n) + " components");
  }
  std::vector<Complex> p1(n), p2(n), p1_bar(n), p2_bar(n);
  for (int j = 1; j <= n; ++j) {
    p1[j - 1] = v[2 * j - 2];
    p2[j - 1] = v[2 * j - 1];
    p1_bar[j - 1] = std::conj(p1[j - 1]);
    p2_bar[j - 1] = std::conj(p2[j - 1]);
  }
  return creation_of(p1, n) - annihilation_of(p1_bar, n) -
         kI * (creation_of(p2, n) + annihilation_of(p2_bar, n));
}

inline Matrix gamma(int j, int n) {
  check_modes(n);
  if (j < 1 || j > 2 * n) {
    throw IndexError("gamma index " + std::to_string(j) + " outside 1.." + std::to_string(2 * n));
  }
  const int k = (j + 1) / 2;
  if (j % 2 == 1) return creation_matrix(k, n) - annihilation_matrix(k, n);
  return -kI * (creation_matrix(k, n) + annihilation_matrix(k, n));
}

struct CliffordGenerators {
  int n;
  std::vector<Matrix> gammas;  // gammas[j-1] = gamma_j

  explicit CliffordGenerators(int modes) : n(modes) {
    check_modes(modes);
    gammas.reserve(2 * modes);
    for (int j = 1; j <= 2 * modes; ++j) gammas.push_back(gamma(j, modes));
  }

  const Matrix& operator()(int j) const {
    if (j < 1 || j > 2 * n) throw IndexError("gamma index out of range");
    return gammas[j - 1];
  }
};

}  // namespace spinfock
