#include "spinfock/so_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace spinfock;

namespace {

// Oracle for the bracket: commutator of the explicit antisymmetric matrices,
// read back in the X_jk basis through the (j,k) entry.
AlgebraElement bracket_by_matrices(BasisIndex a, BasisIndex b, int n) {
  const RealMatrix c = basis_matrix_defining(a.j, a.k, n) * basis_matrix_defining(b.j, b.k, n) -
                       basis_matrix_defining(b.j, b.k, n) * basis_matrix_defining(a.j, a.k, n);
  AlgebraElement out(n);
  for (int j = 1; j <= algebra_rank(n); ++j)
    for (int k = j + 1; k <= algebra_rank(n); ++k)
      if (c(j - 1, k - 1) != 0.0) out.add(j, k, c(j - 1, k - 1));
  return out;
}

AlgebraElement random_element(int n, std::mt19937_64& rng, bool real) {
  std::normal_distribution<double> normal;
  AlgebraElement a(n);
  for (auto b : basis_indices(n)) a.add(b.j, b.k, Complex(normal(rng), real ? 0.0 : normal(rng)));
  return a;
}

}  // namespace

TEST(SoAlgebra, DefiningBasisMatrices) {
  const RealMatrix x12 = basis_matrix_defining(1, 2, 1);
  RealMatrix expected = RealMatrix::Zero(3, 3);
  expected(0, 1) = 1.0;
  expected(1, 0) = -1.0;
  EXPECT_EQ(x12, expected);
  for (int n = 1; n <= 3; ++n)
    for (auto b : basis_indices(n)) {
      const RealMatrix x = basis_matrix_defining(b.j, b.k, n);
      EXPECT_EQ(x.transpose(), -x);
      EXPECT_EQ(x.cwiseAbs().sum(), 2.0);
    }
  EXPECT_THROW(basis_matrix_defining(2, 1, 1), IndexError);
  EXPECT_THROW(basis_matrix_defining(1, 4, 1), IndexError);
}

TEST(SoAlgebra, TraceNormalization) {
  for (int n = 1; n <= 3; ++n) {
    const int top = algebra_rank(n);
    for (int a = 1; a <= 2 * n; ++a)
      for (int b = 1; b <= 2 * n; ++b)
        EXPECT_EQ((basis_matrix_defining(a, top, n) * basis_matrix_defining(b, top, n)).trace(), a == b ? -2.0 : 0.0);
  }
}

TEST(SoAlgebra, BracketExamples) {
  const int n = 2;
  const auto x12 = AlgebraElement::basis(1, 2, n), x23 = AlgebraElement::basis(2, 3, n);
  EXPECT_EQ(bracket(x12, x23), AlgebraElement::basis(1, 3, n));
  EXPECT_TRUE(bracket(x12, AlgebraElement::basis(3, 4, n)).is_zero());
  std::mt19937_64 rng(3);
  const auto a = random_element(n, rng, false);
  EXPECT_TRUE(bracket(a, a).is_zero() || max_abs(defining_rep(bracket(a, a))) < 1e-12);
  EXPECT_THROW(bracket(x12, AlgebraElement::basis(1, 2, 1)), SizeError);
}

TEST(SoAlgebra, BracketMatchesMatrixCommutatorOnAllBasisPairs) {
  for (int n = 1; n <= 3; ++n)
    for (auto a : basis_indices(n))
      for (auto b : basis_indices(n))
        EXPECT_EQ(bracket(AlgebraElement::basis(a.j, a.k, n), AlgebraElement::basis(b.j, b.k, n)),
                  bracket_by_matrices(a, b, n))
            << to_string(a) << " " << to_string(b);
}

TEST(SoAlgebra, ReversedIndicesNormalize) {
  AlgebraElement a(1);
  a.add(3, 1, 2.0);
  EXPECT_EQ(a.coefficient(1, 3), Complex(-2.0));
  a.add(1, 3, 2.0);
  EXPECT_TRUE(a.is_zero());
  EXPECT_THROW(a.add(2, 2, 1.0), IndexError);
}

TEST(SoAlgebra, SpinRepOneModeExamples) {
  const int n = 1;
  Matrix half_g1(2, 2);
  half_g1 << 0, -0.5, 0.5, 0;
  EXPECT_EQ(spin_rep(AlgebraElement::basis(1, 3, n)), half_g1);
  // -1/2 gamma_1 gamma_2 with the homomorphic sign
  Matrix x12(2, 2);
  x12 << Complex(0, -0.5), 0, 0, Complex(0, 0.5);
  EXPECT_LT(max_abs(spin_rep(AlgebraElement::basis(1, 2, n)) - x12), 1e-15);
  Matrix h1(2, 2);
  h1 << -0.5, 0, 0, 0.5;
  EXPECT_LT(max_abs(spin_rep(cartan_element(1, n)) - h1), 1e-15);
}

TEST(SoAlgebra, RepresentationsAreHomomorphisms) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_LT(homomorphism_residual(Representation::spin(n)), 1e-12) << n;
    EXPECT_LT(homomorphism_residual(Representation::defining(n)), 1e-12) << n;
  }
}

TEST(SoAlgebra, CorruptedStructureConstantsBreakHomomorphism) {
  const StructureConstants corrupted = [](BasisIndex a, BasisIndex b) {
    auto terms = standard_basis_bracket(a, b);
    if (a == BasisIndex{1, 2} && b == BasisIndex{2, 3})
      for (auto& t : terms) t.coefficient = -t.coefficient;
    return terms;
  };
  EXPECT_GT(homomorphism_residual(Representation::defining(1), corrupted), 0.5);
}

TEST(SoAlgebra, RepresentationsAreLinear) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 2; ++n)
    for (auto tag : {RepTag::Spin, RepTag::Defining}) {
      const auto rep = Representation::of(tag, n);
      const auto x = random_element(n, rng, false), y = random_element(n, rng, false);
      const Complex a(1.5, -0.5), b(0.25, 2.0);
      EXPECT_LT(max_abs(rep(a * x + b * y) - (a * rep(x) + b * rep(y))), 1e-12);
    }
}

TEST(SoAlgebra, LadderElementsMapToCreationAnnihilation) {
  for (int n = 1; n <= 3; ++n)
    for (int j = 1; j <= n; ++j) {
      EXPECT_LT(max_abs(spin_rep(ladder_element(j, n)) - creation_matrix(j, n)), 1e-15);
      EXPECT_LT(max_abs(spin_rep(ladder_element(-j, n)) - annihilation_matrix(j, n)), 1e-15);
      AlgebraElement twice(n);
      twice.add(2 * j, algebra_rank(n), 2.0 * kI);
      EXPECT_EQ(ladder_element(j, n) + ladder_element(-j, n), twice);
    }
  EXPECT_THROW(ladder_element(0, 2), IndexError);
  EXPECT_THROW(ladder_element(-3, 2), IndexError);
}

TEST(SoAlgebra, CartanIsHalfBracketOfLadders) {
  for (int n = 1; n <= 3; ++n)
    for (int j = 1; j <= n; ++j)
      EXPECT_EQ(Complex(0.5) * bracket(ladder_element(j, n), ladder_element(-j, n)), cartan_element(j, n));
}

TEST(SoAlgebra, RealElementsMapToAntiHermitian) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 3; ++n) {
    const Matrix m = spin_rep(random_element(n, rng, true));
    EXPECT_LT(max_abs(m + m.adjoint()), 1e-14);
  }
}

TEST(SoAlgebra, Weights) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(weight_of(FockVector::vacuum(n)), std::vector<double>(n, -0.5));
    EXPECT_EQ(weight_of(FockVector::filled(n)), std::vector<double>(n, 0.5));
  }
  const auto w = weight_of(FockVector::wedge(3, {2}));
  EXPECT_EQ(w, (std::vector<double>{-0.5, 0.5, -0.5}));
  Vector mixed = Vector::Zero(4);
  mixed[0] = 1.0;
  mixed[1] = 1.0;
  EXPECT_THROW(weight_of(FockVector(2, mixed)), NotWeightVectorError);
}

TEST(SoAlgebra, SpinImagesGenerateFullMatrixAlgebra) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(generated_algebra_dimension(n), 1 << (2 * n)) << n;
}
