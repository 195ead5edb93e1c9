#include <gtest/gtest.h>

#include "wba/exactlin.hpp"
#include "wba/tensor.hpp"

using namespace wba;

namespace {

Matrix m(int cols, std::vector<Vector> rows) { return Matrix::fromRows(cols, rows); }

}  // namespace

TEST(Scalar, ParsesFractionsAndRejectsGarbage) {
  EXPECT_EQ(parseScalar("3/6"), Scalar(1, 2));
  EXPECT_EQ(parseScalar("-4"), Scalar(-4));
  EXPECT_EQ(toString(parseScalar("-2/4")), "-1/2");
  EXPECT_THROW(parseScalar("1/0"), std::invalid_argument);
  EXPECT_THROW(parseScalar("x"), std::invalid_argument);
  EXPECT_THROW(parseScalar("0.5"), std::invalid_argument);
}

TEST(Rref, ReducesAndDropsZeroRows) {
  std::vector<int> piv;
  Matrix r = rref(m(3, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}), &piv);
  EXPECT_EQ(r, m(3, {{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(piv, (std::vector<int>{0, 1}));
  EXPECT_EQ(rank(m(2, {{0, 0}, {0, 0}})), 0);
}

TEST(Inverse, ExactRationalInverse) {
  Matrix a = m(2, {{2, 1}, {1, 1}});
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, m(2, {{1, -1}, {-1, 2}}));
  EXPECT_FALSE(inverse(m(2, {{1, 2}, {2, 4}})));
  auto h = inverse(m(2, {{1, Scalar(1, 2)}, {Scalar(1, 2), Scalar(1, 3)}}));
  ASSERT_TRUE(h);
  EXPECT_EQ(*h, m(2, {{4, -6}, {-6, 12}}));
}

TEST(SolveAffine, ParticularPlusKernel) {
  Matrix a = m(3, {{1, 1, 0}, {0, 0, 1}});
  auto sol = solveAffine(a, {2, 3});
  ASSERT_TRUE(sol);
  EXPECT_EQ(a * sol->particular, (Vector{2, 3}));
  EXPECT_EQ(sol->kernel.dim(), 1);
  EXPECT_TRUE(isZero(a * sol->kernel.vector(0)));
  EXPECT_FALSE(solveAffine(m(1, {{0}, {0}}), {0, 1}));
}

TEST(FormInverse, InvertsTheGramMatrix) {
  Matrix q = m(2, {{1, 1}, {0, 1}});
  auto p = formInverse(q);
  ASSERT_TRUE(p);
  EXPECT_TRUE((q * *p).isIdentity());
  EXPECT_TRUE((*p * q).isIdentity());
  EXPECT_FALSE(formInverse(m(2, {{1, 1}, {1, 1}})));
}

TEST(Kron, IndexConvention) {
  Matrix a = m(2, {{1, 2}, {3, 4}});
  Matrix b = m(2, {{0, 1}, {1, 0}});
  Matrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 4);
  EXPECT_EQ(k(0, 1), Scalar(1));
  EXPECT_EQ(k(1, 2), Scalar(2));
  EXPECT_EQ(k(3, 2), Scalar(4));
  EXPECT_EQ(k(2, 2), Scalar(0));
  EXPECT_EQ(kron(Matrix::identity(2), Matrix::identity(3)), Matrix::identity(6));
}

TEST(Subspace, IntersectSumAnnihilator) {
  Subspace x = Subspace::spanVectors(3, {{1, 0, 0}, {0, 1, 0}});
  Subspace y = Subspace::spanVectors(3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(x.intersect(y).dim(), 1);
  EXPECT_TRUE(x.intersect(y).contains(Vector{0, 5, 0}));
  EXPECT_EQ(x.sum(y).dim(), 3);
  Subspace ann = x.annihilator();
  EXPECT_EQ(ann.dim(), 1);
  EXPECT_TRUE(ann.contains(Vector{0, 0, 1}));
  auto c = x.coordinates({3, 4, 0});
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (Vector{3, 4}));
  EXPECT_FALSE(x.coordinates({0, 0, 1}));
  EXPECT_EQ(Subspace::kernel(m(2, {{1, -1}})).dim(), 1);
}

TEST(Tensor, LegOperations) {
  Tensor t(2);
  t.add({0, 1}, 2);
  t.add({1, 0}, 3);
  Tensor p = t.permute({1, 0});
  EXPECT_EQ(p.terms().at({1, 0}), Scalar(2));
  Tensor c = t.contractLeg(0, {1, 0});
  EXPECT_EQ(c.toVector(2), (Vector{0, 2}));
  Tensor f = t.applyLeg(1, m(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(f.toMatrix(2, 2), m(2, {{2, 0}, {0, 3}}));
  EXPECT_EQ(Tensor::fromMatrix(t.toMatrix(2, 2)), t);
}
