#pragma once

// so(2n+1, C) in the basis X_jk = e_j ^ e_k (1 <= j < k <= 2n+1) with
//
//   [X_ri, X_sj] = d_is X_rj + d_rj X_is - d_ij X_rs - d_rs X_ij,
//
// X_kj = -X_jk and X_jj = 0. The spin representation on Fock space sends
//
//   X_{l,2n+1} -> 1/2 gamma_l,     X_jl -> -1/2 gamma_j gamma_l  (j < l <= 2n).
//
// The minus sign on the bivector part is what makes the map a Lie algebra
// homomorphism for this bracket while keeping E_j -> c_j^dagger.

#include "spinfock/clifford.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spinfock {

struct BasisIndex {
  int j;
  int k;

  auto operator<=>(const BasisIndex&) const = default;
};

inline std::string to_string(BasisIndex b) {
  return "X" + std::to_string(b.j) + "," + std::to_string(b.k);
}

inline int algebra_rank(int n) { return 2 * n + 1; }

inline void check_basis_index(BasisIndex b, int n) {
  if (b.j < 1 || b.j >= b.k || b.k > algebra_rank(n)) {
    throw IndexError("basis index (" + std::to_string(b.j) + "," + std::to_string(b.k) +
                     ") invalid for so(" + std::to_string(algebra_rank(n)) + ")");
  }
}

/// All basis symbols in lexicographic order.
inline std::vector<BasisIndex> basis_indices(int n) {
  std::vector<BasisIndex> out;
  const int rank = algebra_rank(n);
  for (int j = 1; j <= rank; ++j)
    for (int k = j + 1; k <= rank; ++k) out.push_back({j, k});
  return out;
}

/// A term c * X_{a,b} where (a,b) may come in either order.
struct SignedSymbol {
  BasisIndex index;
  int coefficient;
};

/// Integer structure constants: [X_a, X_b] as a list of basis terms.
using StructureConstants = std::function<std::vector<SignedSymbol>(BasisIndex, BasisIndex)>;

inline std::vector<SignedSymbol> standard_basis_bracket(BasisIndex a, BasisIndex b) {
  const int r = a.j, i = a.k, s = b.j, j = b.k;
  std::map<BasisIndex, int> acc;
  auto add = [&acc](int p, int q, int c) {
    if (p == q || c == 0) return;
    if (p > q) {
      std::swap(p, q);
      c = -c;
    }
    acc[{p, q}] += c;
  };
  if (i == s) add(r, j, 1);
  if (r == j) add(i, s, 1);
  if (i == j) add(r, s, -1);
  if (r == s) add(i, j, -1);
  std::vector<SignedSymbol> out;
  for (auto [idx, c] : acc)
    if (c != 0) out.push_back({idx, c});
  return out;
}

inline const StructureConstants& standard_structure_constants() {
  static const StructureConstants table = standard_basis_bracket;
  return table;
}

class AlgebraElement {
 public:
  explicit AlgebraElement(int n) : n_(n) { check_modes(n); }

  static AlgebraElement basis(int j, int k, int n) {
    AlgebraElement a(n);
    a.add(j, k, 1.0);
    return a;
  }

  /// Adds c * X_jk; a reversed pair adds -c * X_kj.
  AlgebraElement& add(int j, int k, Complex c) {
    if (j > k) {
      std::swap(j, k);
      c = -c;
    }
    check_basis_index({j, k}, n_);
    auto it = coefficients_.find({j, k});
    if (it == coefficients_.end()) {
      if (c != Complex{}) coefficients_.emplace(BasisIndex{j, k}, c);
      return *this;
    }
    it->second += c;
    if (it->second == Complex{}) coefficients_.erase(it);
    return *this;
  }

  int modes() const { return n_; }
  const std::map<BasisIndex, Complex>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }

  Complex coefficient(int j, int k) const {
    auto it = coefficients_.find({j, k});
    return it == coefficients_.end() ? Complex{} : it->second;
  }

  bool has_real_coefficients() const {
    for (const auto& [idx, c] : coefficients_)
      if (c.imag() != 0.0) return false;
    return true;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_same(o);
    for (const auto& [idx, c] : o.coefficients_) add(idx.j, idx.k, c);
    return *this;
  }

  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_same(o);
    for (const auto& [idx, c] : o.coefficients_) add(idx.j, idx.k, -c);
    return *this;
  }

  AlgebraElement& operator*=(Complex s) {
    if (s == Complex{}) {
      coefficients_.clear();
      return *this;
    }
    for (auto& [idx, c] : coefficients_) c *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(AlgebraElement a, Complex s) { return a *= s; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.coefficients_ == b.coefficients_;
  }

  void check_same(const AlgebraElement& o) const {
    if (o.n_ != n_) throw SizeError("algebra elements belong to different so(2n+1)");
  }

 private:
  int n_;
  std::map<BasisIndex, Complex> coefficients_;
};

inline AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b,
                              const StructureConstants& table = standard_structure_constants()) {
  a.check_same(b);
  AlgebraElement out(a.modes());
  for (const auto& [ia, ca] : a.coefficients())
    for (const auto& [ib, cb] : b.coefficients())
      for (const auto& term : table(ia, ib))
        out.add(term.index.j, term.index.k, ca * cb * static_cast<double>(term.coefficient));
  return out;
}

inline RealMatrix basis_matrix_defining(int j, int k, int n) {
  check_modes(n);
  check_basis_index({j, k}, n);
  const int rank = algebra_rank(n);
  RealMatrix m = RealMatrix::Zero(rank, rank);
  m(j - 1, k - 1) = 1.0;
  m(k - 1, j - 1) = -1.0;
  return m;
}

/// A linear representation of so(2n+1, C) given by its basis images.
class Representation {
 public:
  static Representation spin(int n) {
    const CliffordGenerators g(n);
    Representation rep(RepTag::Spin, n);
    const int top = algebra_rank(n);
    for (BasisIndex b : basis_indices(n)) {
      if (b.k == top) {
        rep.images_.emplace(b, 0.5 * g(b.j));
      } else {
        rep.images_.emplace(b, -0.5 * (g(b.j) * g(b.k)));
      }
    }
    return rep;
  }

  static Representation defining(int n) {
    Representation rep(RepTag::Defining, n);
    for (BasisIndex b : basis_indices(n))
      rep.images_.emplace(b, basis_matrix_defining(b.j, b.k, n).cast<Complex>());
    return rep;
  }

  static Representation of(RepTag tag, int n) {
    return tag == RepTag::Spin ? spin(n) : defining(n);
  }

  RepTag tag() const { return tag_; }
  int modes() const { return n_; }
  Eigen::Index dimension() const {
    return tag_ == RepTag::Spin ? static_cast<Eigen::Index>(fock_dimension(n_)) : algebra_rank(n_);
  }

  const Matrix& image(BasisIndex b) const {
    auto it = images_.find(b);
    if (it == images_.end()) throw IndexError("no basis element " + to_string(b));
    return it->second;
  }

  const Matrix& image(int j, int k) const { return image(BasisIndex{j, k}); }

  Matrix apply(const AlgebraElement& a) const {
    if (a.modes() != n_) throw SizeError("representation and element disagree on n");
    Matrix m = Matrix::Zero(dimension(), dimension());
    for (const auto& [idx, c] : a.coefficients()) m += c * image(idx);
    return m;
  }

  Matrix operator()(const AlgebraElement& a) const { return apply(a); }

 private:
  Representation(RepTag tag, int n) : tag_(tag), n_(n) { check_modes(n); }

  RepTag tag_;
  int n_;
  std::map<BasisIndex, Matrix> images_;
};

inline Matrix spin_rep(const AlgebraElement& a) { return Representation::spin(a.modes()).apply(a); }

inline Matrix defining_rep(const AlgebraElement& a) {
  return Representation::defining(a.modes()).apply(a);
}

/// E_j = X_{2j-1,2n+1} + i X_{2j,2n+1};  E_{-j} = -X_{2j-1,2n+1} + i X_{2j,2n+1}.
inline AlgebraElement ladder_element(int signed_mode, int n) {
  const int m = signed_mode < 0 ? -signed_mode : signed_mode;
  detail::check_mode_index(m, n);
  const int top = algebra_rank(n);
  AlgebraElement e(n);
  e.add(2 * m - 1, top, signed_mode > 0 ? 1.0 : -1.0);
  e.add(2 * m, top, kI);
  return e;
}

/// H_j = 1/2 [E_j, E_{-j}] = -i X_{2j-1,2j}.
inline AlgebraElement cartan_element(int j, int n) {
  detail::check_mode_index(j, n);
  AlgebraElement h(n);
  h.add(2 * j - 1, 2 * j, -kI);
  return h;
}

/// Eigenvalues of spin_rep(H_1..H_n) on a simultaneous eigenvector.
inline std::vector<double> weight_of(const FockVector& v, double tol = 1e-10) {
  const int n = v.modes();
  const double norm2 = v.norm_squared();
  if (norm2 == 0.0) throw NotWeightVectorError("zero vector has no weight");
  const Representation rep = Representation::spin(n);
  std::vector<double> weight(n);
  for (int j = 1; j <= n; ++j) {
    const Vector hv = rep.apply(cartan_element(j, n)) * v.amplitudes();
    const Complex lambda = v.amplitudes().dot(hv) / norm2;
    const double residual = (hv - lambda * v.amplitudes()).norm();
    if (residual > tol * std::sqrt(norm2) || std::abs(lambda.imag()) > tol) {
      throw NotWeightVectorError("vector is not an eigenvector of H_" + std::to_string(j));
    }
    weight[j - 1] = lambda.real();
  }
  return weight;
}

/// Homomorphism residual max |rep([X,Y]) - [rep X, rep Y]| over all basis pairs.
inline double homomorphism_residual(const Representation& rep,
                                    const StructureConstants& table = standard_structure_constants()) {
  const int n = rep.modes();
  double worst = 0.0;
  for (BasisIndex a : basis_indices(n)) {
    for (BasisIndex b : basis_indices(n)) {
      const auto lhs = rep.apply(bracket(AlgebraElement::basis(a.j, a.k, n),
                                         AlgebraElement::basis(b.j, b.k, n), table));
      worst = std::max(worst, max_abs(lhs - commutator(rep.image(a), rep.image(b))));
    }
  }
  return worst;
}

/// Dimension of the associative algebra generated by the spin images of the
/// basis (closure of the identity under right multiplication).
inline int generated_algebra_dimension(int n, double tol = 1e-9) {
  const Representation rep = Representation::spin(n);
  const auto dim = rep.dimension();
  const Eigen::Index flat = dim * dim;
  std::vector<Vector> orthonormal;  // Gram-Schmidt basis of the span, flattened
  std::vector<Matrix> frontier;
  auto try_add = [&](const Matrix& m) {
    Vector v = Eigen::Map<const Vector>(m.data(), flat);
    for (const auto& q : orthonormal) v -= q.dot(v) * q;
    for (const auto& q : orthonormal) v -= q.dot(v) * q;
    const double norm = v.norm();
    if (norm <= tol) return false;
    orthonormal.push_back(v / norm);
    return true;
  };
  const Matrix identity = Matrix::Identity(dim, dim);
  try_add(identity);
  frontier.push_back(identity);
  const auto gens = basis_indices(n);
  while (!frontier.empty() && static_cast<Eigen::Index>(orthonormal.size()) < flat) {
    std::vector<Matrix> next;
    for (const auto& word : frontier)
      for (BasisIndex g : gens) {
        Matrix m = word * rep.image(g);
        if (try_add(m)) next.push_back(std::move(m));
      }
    frontier = std::move(next);
  }
  return static_cast<int>(orthonormal.size());
}

}  // namespace spinfock
