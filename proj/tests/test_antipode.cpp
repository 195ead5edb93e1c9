#include <gtest/gtest.h>

#include "wba/antipode.hpp"
#include "wba/catalog.hpp"
#include "wba/constructions.hpp"

using namespace wba;

TEST(Antipode, Example1HasNone) {
  AntipodeStatus st = solveAntipode(example1());
  EXPECT_EQ(st.kind, AntipodeStatus::Kind::None);
  EXPECT_FALSE(st.map);
  EXPECT_FALSE(classifyWeakHopf(example1()).weakHopf);
}

TEST(Antipode, GroupAlgebraInvertsElements) {
  GroupPresentation g = GroupPresentation::symmetric3();
  WeakBialgebra a = groupAlgebra(g);
  AntipodeStatus st = solveAntipode(a);
  ASSERT_EQ(st.kind, AntipodeStatus::Kind::HopfAntipode);
  for (int x = 0; x < g.order(); ++x) EXPECT_EQ(*st.map * a.basis(x), a.basis(g.inverse(x)));
  EXPECT_TRUE(st.uniquenessVerified);
  EXPECT_TRUE(classifyWeakHopf(a).ordinaryHopf);
}

TEST(Antipode, Z2IsSelfInverse) {
  WeakBialgebra a = catalog("group:Z2").algebra;
  AntipodeStatus st = solveAntipode(a);
  ASSERT_TRUE(st.map);
  EXPECT_TRUE(st.map->isIdentity());
}

TEST(Antipode, BszDualMatchesReconstruction) {
  for (int n : {2, 3, 4}) {
    Algebra k = Algebra::diagonal(n);
    WeakHopfConstruction c = minimalWeakHopf(k, k, Vector(static_cast<size_t>(n), Scalar(1)), Matrix::identity(n));
    AntipodeStatus st = solveAntipode(c.algebra);
    ASSERT_TRUE(st.map) << n;
    EXPECT_EQ(*st.map, c.antipode) << n;
    EXPECT_EQ(st.kind, AntipodeStatus::Kind::Antipode) << n;
    EXPECT_FALSE(isHopfAntipode(c.algebra, *st.map)) << n;
    EXPECT_TRUE(isBialgebraAntiAutomorphism(c.algebra, *st.map)) << n;
  }
}

TEST(Antipode, PodeIsInverseOfAntipode) {
  for (const auto& nm : {"bsz-dual:3", "adcross:Z2,Z2", "crossed", "dualgroup:S3"}) {
    WeakBialgebra a = catalog(nm).algebra;
    AntipodeStatus st = solveAntipode(a);
    auto pode = solvePode(a);
    ASSERT_TRUE(st.map && pode) << nm;
    EXPECT_TRUE((*st.map * *pode).isIdentity()) << nm;
    EXPECT_TRUE(st.podeInverse) << nm;
  }
}

TEST(Convolution, UnitIsNeutral) {
  WeakBialgebra a = catalog("group:Z3").algebra;
  Matrix u = convolutionUnit(a), id = Matrix::identity(a.dim());
  EXPECT_EQ(convolve(a, u, id), id);
  EXPECT_EQ(convolve(a, id, u), id);
}

TEST(PreAntipode, SystemAgreesWithPredicate) {
  WeakBialgebra a = catalog("bsz-dual:2").algebra;
  auto sol = solvePreAntipodes(a);
  ASSERT_TRUE(sol);
  const int n = a.dim();
  EXPECT_TRUE(isPreAntipode(a, Matrix::reshape(sol->particular, n, n)));
  EXPECT_FALSE(isPreAntipode(a, Matrix(n, n)));
}

TEST(AntipodeSuite, NoViolationsOnCatalog) {
  for (const auto& nm : catalogNames()) {
    TheoremReport r = antipodeTheoremSuite(catalog(nm).algebra);
    EXPECT_TRUE(r.ok()) << nm << ": " << (r.ok() ? "" : r.violations().front().name);
  }
}
