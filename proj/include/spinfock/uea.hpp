#pragma once

// Universal enveloping algebra of so(2n+1, C) with exact Gaussian-rational
// coefficients, and a PBW normal-ordering rewriter.
//
// Words are sequences of basis symbols X_jk. Normal form keeps every word
// non-decreasing in the lexicographic order on (j, k); a descent a > b is
// rewritten as  a b -> b a + [a, b].

#include "spinfock/so_algebra.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace spinfock {

using Rational = boost::rational<std::int64_t>;

struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(std::int64_t r) : re(r) {}  // NOLINT: integer promotion is intended
  GaussianRational(Rational r) : re(r) {}      // NOLINT
  GaussianRational(Rational r, Rational i) : re(r), im(i) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.numerator() == 0 && im.numerator() == 0; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  Complex to_complex() const {
    return {boost::rational_cast<double>(re), boost::rational_cast<double>(im)};
  }
};

inline std::string to_string(const GaussianRational& c) {
  auto r = [](const Rational& q) {
    return q.denominator() == 1 ? std::to_string(q.numerator())
                                : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
  };
  if (c.im.numerator() == 0) return r(c.re);
  if (c.re.numerator() == 0) return r(c.im) + "i";
  return "(" + r(c.re) + (c.im < 0 ? "" : "+") + r(c.im) + "i)";
}

using Word = std::vector<BasisIndex>;

class UEAPolynomial {
 public:
  explicit UEAPolynomial(int n) : n_(n) { check_modes(n); }

  static UEAPolynomial constant(int n, GaussianRational c) {
    UEAPolynomial p(n);
    p.add_term({}, c);
    return p;
  }

  static UEAPolynomial one(int n) { return constant(n, 1); }

  static UEAPolynomial symbol(int j, int k, int n) {
    UEAPolynomial p(n);
    GaussianRational c = 1;
    if (j > k) {
      std::swap(j, k);
      c = -1;
    }
    check_basis_index({j, k}, n);
    p.add_term({BasisIndex{j, k}}, c);
    return p;
  }

  static UEAPolynomial word(const Word& w, int n, GaussianRational c = 1) {
    UEAPolynomial p(n);
    for (auto b : w) check_basis_index(b, n);
    p.add_term(w, c);
    return p;
  }

  int modes() const { return n_; }
  const std::map<Word, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
  }

  void add_term(const Word& w, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  UEAPolynomial& operator+=(const UEAPolynomial& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  UEAPolynomial& operator-=(const UEAPolynomial& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  UEAPolynomial& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c = c * s;
    return *this;
  }

  friend UEAPolynomial operator+(UEAPolynomial a, const UEAPolynomial& b) { return a += b; }
  friend UEAPolynomial operator-(UEAPolynomial a, const UEAPolynomial& b) { return a -= b; }
  friend UEAPolynomial operator*(const GaussianRational& s, UEAPolynomial a) { return a *= s; }
  friend bool operator==(const UEAPolynomial& a, const UEAPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  bool is_normal_ordered() const {
    for (const auto& [w, c] : terms_)
      if (!std::is_sorted(w.begin(), w.end())) return false;
    return true;
  }

  void check_same(const UEAPolynomial& o) const {
    if (o.n_ != n_) throw SizeError("polynomials belong to different enveloping algebras");
  }

 private:
  int n_;
  std::map<Word, GaussianRational> terms_;
};

/// Free-algebra product: concatenation of words.
inline UEAPolynomial uea_multiply(const UEAPolynomial& p, const UEAPolynomial& q) {
  p.check_same(q);
  UEAPolynomial out(p.modes());
  for (const auto& [wp, cp] : p.terms()) {
    for (const auto& [wq, cq] : q.terms()) {
      Word w = wp;
      w.insert(w.end(), wq.begin(), wq.end());
      out.add_term(w, cp * cq);
    }
  }
  return out;
}

inline UEAPolynomial operator*(const UEAPolynomial& p, const UEAPolynomial& q) {
  return uea_multiply(p, q);
}

inline UEAPolynomial uea_commutator(const UEAPolynomial& p, const UEAPolynomial& q) {
  return p * q - q * p;
}

namespace detail {

// Rewrites until every word is sorted. choose(word) returns the descent
// position to rewrite; correction words are one letter shorter, so this
// terminates for any choice.
template <typename Choose>
UEAPolynomial pbw_rewrite(const UEAPolynomial& p, const StructureConstants& table, Choose&& choose) {
  UEAPolynomial done(p.modes());
  std::map<Word, GaussianRational> pending = p.terms();
  auto push = [&pending](Word w, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) pending.erase(it);
  };
  while (!pending.empty()) {
    // longest words first so that corrections merge before they are expanded
    auto it = std::prev(pending.end());
    for (auto jt = pending.begin(); jt != pending.end(); ++jt)
      if (jt->first.size() > it->first.size()) it = jt;
    Word w = it->first;
    const GaussianRational c = it->second;
    pending.erase(it);

    std::vector<std::size_t> descents;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i + 1] < w[i]) descents.push_back(i);
    if (descents.empty()) {
      done.add_term(w, c);
      continue;
    }
    const std::size_t i = descents[choose(descents)];
    const BasisIndex a = w[i];
    const BasisIndex b = w[i + 1];
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    push(std::move(swapped), c);
    for (const auto& term : table(a, b)) {
      Word shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      shorter.push_back(term.index);
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
      push(std::move(shorter), c * GaussianRational(term.coefficient));
    }
  }
  return done;
}

}  // namespace detail

/// PBW normal form, rewriting the leftmost descent first.
inline UEAPolynomial pbw_normalize(const UEAPolynomial& p,
                                   const StructureConstants& table = standard_structure_constants()) {
  return detail::pbw_rewrite(p, table, [](const std::vector<std::size_t>&) { return std::size_t{0}; });
}

/// PBW normal form with the rewrite position drawn at random at each step.
template <typename Rng>
UEAPolynomial pbw_normalize_randomized(const UEAPolynomial& p, Rng& rng,
                                       const StructureConstants& table = standard_structure_constants()) {
  return detail::pbw_rewrite(p, table, [&rng](const std::vector<std::size_t>& d) {
    std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
    return pick(rng);
  });
}

/// L^U_l = X_{2l-1,2n+1}^2 + X_{2l,2n+1}^2.
inline UEAPolynomial casimir_pair(int l, int n) {
  detail::check_mode_index(l, n);
  const int top = algebra_rank(n);
  const auto a = UEAPolynomial::symbol(2 * l - 1, top, n);
  const auto b = UEAPolynomial::symbol(2 * l, top, n);
  return a * a + b * b;
}

/// Normal form of [L^U_l, X_{2k-1,2k}]; identically zero.
inline UEAPolynomial commutator_LU(int l, int k, int n,
                                   const StructureConstants& table = standard_structure_constants()) {
  detail::check_mode_index(k, n);
  return pbw_normalize(uea_commutator(casimir_pair(l, n), UEAPolynomial::symbol(2 * k - 1, 2 * k, n)),
                       table);
}

inline bool uea_commuting_pair_check(const UEAPolynomial& x, const UEAPolynomial& y,
                                     const StructureConstants& table = standard_structure_constants()) {
  return pbw_normalize(uea_commutator(x, y), table).is_zero();
}

/// P0^U = -sum E_k L^U_k and B0^U = sum E_k [X_{2k-1,2n+1}, X_{2k,2n+1}] for
/// rational energies.
struct UEAHamiltonianParts {
  UEAPolynomial p0;
  UEAPolynomial b0;
};

inline UEAHamiltonianParts uea_hamiltonian_parts(const std::vector<Rational>& energies) {
  const int n = static_cast<int>(energies.size());
  check_modes(n);
  const int top = algebra_rank(n);
  UEAHamiltonianParts parts{UEAPolynomial(n), UEAPolynomial(n)};
  for (int k = 1; k <= n; ++k) {
    const GaussianRational e(energies[k - 1]);
    parts.p0 -= e * casimir_pair(k, n);
    parts.b0 += e * uea_commutator(UEAPolynomial::symbol(2 * k - 1, top, n),
                                   UEAPolynomial::symbol(2 * k, top, n));
  }
  return parts;
}

/// Multiplicative extension of a representation to words.
inline Matrix represent(const UEAPolynomial& p, const Representation& rep) {
  if (p.modes() != rep.modes()) throw SizeError("polynomial and representation disagree on n");
  const auto dim = rep.dimension();
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [w, c] : p.terms()) {
    Matrix m = Matrix::Identity(dim, dim);
    for (auto b : w) m = m * rep.image(b);
    out += c.to_complex() * m;
  }
  return out;
}

}  // namespace spinfock
