#pragma once

// Fermionic Fock space over n modes in the occupation-number basis.
//
// Basis vectors are indexed by a bitmask S: bit (j-1) set means mode j is
// occupied, and e_S = e_{i1} ^ ... ^ e_{ik} with i1 < ... < ik. Creation
// follows the wedge-from-the-left rule
//
//   c_j^dagger e_S = (-1)^{#{i in S : i < j}} e_{S u {j}}   (0 if j in S)
//
// and annihilation is its adjoint.

#include "spinfock/types.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace spinfock {

inline constexpr int kMaxModes = 12;

inline void check_modes(int n) {
  if (n < 1 || n > kMaxModes) {
    throw SizeError("mode count must be in [1, " + std::to_string(kMaxModes) +
                    "], got " + std::to_string(n));
  }
}

inline std::size_t fock_dimension(int n) { return std::size_t{1} << n; }

class FockVector {
 public:
  explicit FockVector(int n) : n_(n) {
    check_modes(n);
    amplitudes_ = Vector::Zero(static_cast<Eigen::Index>(fock_dimension(n)));
  }

  FockVector(int n, Vector amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    check_modes(n);
    if (static_cast<std::size_t>(amplitudes_.size()) != fock_dimension(n)) {
      throw SizeError("Fock vector for n=" + std::to_string(n) + " needs " +
                      std::to_string(fock_dimension(n)) + " amplitudes");
    }
  }

  static FockVector basis(int n, std::uint32_t mask) {
    FockVector v(n);
    if (mask >= fock_dimension(n)) throw IndexError("occupation mask out of range");
    v.amplitudes_[mask] = 1.0;
    return v;
  }

  static FockVector vacuum(int n) { return basis(n, 0); }

  /// e_{j1} ^ ... ^ e_{jk} for modes given in any order; the sign of the
  /// permutation to ascending order is applied. Repeated modes give zero.
  static FockVector wedge(int n, std::initializer_list<int> modes) {
    return wedge(n, std::vector<int>(modes));
  }

  static FockVector wedge(int n, std::vector<int> modes) {
    FockVector v(n);
    std::uint32_t mask = 0;
    for (int m : modes) {
      if (m < 1 || m > n) throw IndexError("mode index out of range");
      if (mask & (1u << (m - 1))) return v;
      mask |= 1u << (m - 1);
    }
    int inversions = 0;
    for (std::size_t a = 0; a < modes.size(); ++a)
      for (std::size_t b = a + 1; b < modes.size(); ++b)
        if (modes[a] > modes[b]) ++inversions;
    v.amplitudes_[mask] = (inversions % 2 == 0) ? 1.0 : -1.0;
    return v;
  }

  /// All modes occupied: e_1 ^ ... ^ e_n.
  static FockVector filled(int n) {
    check_modes(n);
    return basis(n, static_cast<std::uint32_t>(fock_dimension(n) - 1));
  }

  int modes() const { return n_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::uint32_t mask) const { return amplitudes_[mask]; }

  double norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  int n_;
  Vector amplitudes_;
};

inline Complex fock_inner(const FockVector& v, const FockVector& w) {
  if (v.modes() != w.modes()) throw SizeError("Fock inner product: mode counts differ");
  return v.amplitudes().dot(w.amplitudes());  // conjugate-linear in v
}

inline FockVector apply_operator(const Matrix& op, const FockVector& v) {
  if (static_cast<std::size_t>(op.cols()) != v.dimension() || op.rows() != op.cols()) {
    throw SizeError("operator size does not match Fock dimension");
  }
  return FockVector(v.modes(), op * v.amplitudes());
}

struct FockBasis {
  int n;
  std::vector<FockVector> vectors;

  std::size_t dimension() const { return vectors.size(); }
  const FockVector& vacuum() const { return vectors.front(); }
};

inline FockBasis make_fock_space(int n) {
  check_modes(n);
  FockBasis basis{n, {}};
  basis.vectors.reserve(fock_dimension(n));
  for (std::uint32_t s = 0; s < fock_dimension(n); ++s) basis.vectors.push_back(FockVector::basis(n, s));
  return basis;
}

enum class LadderKind { Creation, Annihilation };

struct LadderOperator {
  int mode;
  LadderKind kind;
  Matrix matrix;
};

namespace detail {

inline void check_mode_index(int j, int n) {
  check_modes(n);
  if (j < 1 || j > n) {
    throw IndexError("mode " + std::to_string(j) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace detail

inline Matrix creation_matrix(int j, int n) {
  detail::check_mode_index(j, n);
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  Matrix m = Matrix::Zero(dim, dim);
  const std::uint32_t bit = 1u << (j - 1);
  for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(dim); ++s) {
    if (s & bit) continue;
    const int below = std::popcount(s & (bit - 1));
    m(s | bit, s) = (below % 2 == 0) ? 1.0 : -1.0;
  }
  return m;
}

inline Matrix annihilation_matrix(int j, int n) { return creation_matrix(j, n).adjoint(); }

inline LadderOperator ladder(int j, LadderKind kind, int n) {
  return {j, kind, kind == LadderKind::Creation ? creation_matrix(j, n) : annihilation_matrix(j, n)};
}

/// c_j^dagger c_j, diagonal with 1 where mode j is occupied.
inline Matrix number_matrix(int j, int n) {
  detail::check_mode_index(j, n);
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s)
    if (s & (Eigen::Index{1} << (j - 1))) m(s, s) = 1.0;
  return m;
}

/// Free fermion Hamiltonian sum_k E_k c_k^dagger c_k.
inline Matrix free_hamiltonian(const std::vector<double>& energies) {
  const int n = static_cast<int>(energies.size());
  check_modes(n);
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  Matrix h = Matrix::Zero(dim, dim);
  for (int k = 1; k <= n; ++k) h += energies[k - 1] * number_matrix(k, n);
  return h;
}

}  // namespace spinfock
