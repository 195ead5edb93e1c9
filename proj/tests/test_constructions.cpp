#include <gtest/gtest.h>

#include "wba/antipode.hpp"
#include "wba/catalog.hpp"
#include "wba/constructions.hpp"

using namespace wba;

TEST(AdCrossed, Z2OverZ2) {
  GroupPresentation g = GroupPresentation::cyclic(2).withSubgroup("Z2");
  WeakHopfConstruction c = adCrossedProduct(g);
  EXPECT_EQ(c.algebra.dim(), 4);
  EXPECT_TRUE(validate(c.algebra).ok);
  EXPECT_TRUE(adCrossedProductChecks(g, c).ok());
  EXPECT_EQ(*solveAntipode(c.algebra).map, c.antipode);
}

TEST(AdCrossed, S3OverA3) {
  GroupPresentation g = GroupPresentation::symmetric3().withSubgroup("A3");
  WeakHopfConstruction c = adCrossedProduct(g);
  EXPECT_EQ(c.algebra.dim(), 18);
  EXPECT_TRUE(validate(c.algebra).ok);
  EXPECT_TRUE(classifyWeakHopf(c.algebra).weakHopf);
  EXPECT_FALSE(classifyWeakHopf(c.algebra).ordinaryHopf);
  EXPECT_TRUE(adCrossedProductChecks(g, c).ok());
}

TEST(AdCrossed, TrivialSubgroupIsTheGroupAlgebra) {
  WeakHopfConstruction c = adCrossedProduct(GroupPresentation::cyclic(3).withSubgroup("1"));
  EXPECT_EQ(c.algebra.dim(), 3);
  EXPECT_TRUE(classifyWeakHopf(c.algebra).ordinaryHopf);
}

TEST(AdCrossed, RejectsNonNormalSubgroup) {
  GroupPresentation g = GroupPresentation::symmetric3();
  int t = -1;
  for (int x = 0; x < g.order(); ++x)
    if (x != g.identity() && g.table[x][x] == g.identity()) t = x;
  ASSERT_GE(t, 0);
  g.subgroup = {std::min(g.identity(), t), std::max(g.identity(), t)};
  EXPECT_FALSE(g.subgroupIsNormal());
  try {
    adCrossedProduct(g);
    FAIL() << "accepted a non-normal subgroup";
  } catch (const ConstructionError& e) {
    EXPECT_FALSE(e.witness.law.empty());
  }
}

TEST(Crossed, CatalogInstanceIsEightDimensionalWeakHopf) {
  CatalogEntry e = catalog("crossed");
  EXPECT_EQ(e.algebra.dim(), 8);
  EXPECT_TRUE(validate(e.algebra).ok);
  ASSERT_TRUE(e.antipode);
  AntipodeStatus st = solveAntipode(e.algebra);
  ASSERT_TRUE(st.map);
  EXPECT_EQ(*st.map, *e.antipode);
}

TEST(Hopf, RejectsWrongAntipode) {
  HopfAlgebra h = groupHopf(GroupPresentation::cyclic(3));
  EXPECT_NO_THROW(checkHopf(h));
  h.antipode = Matrix::identity(3);
  EXPECT_THROW(checkHopf(h), ConstructionError);
}

TEST(Minimal, RejectsNonIdempotent) {
  Algebra k = Algebra::diagonal(2);
  Matrix p = Matrix::identity(2);
  p(0, 0) = 2;
  EXPECT_THROW(minimalFromIdempotent(k, k, p), ConstructionError);
}

TEST(Minimal, RejectsOmegaWithWrongIndex) {
  Algebra k = Algebra::diagonal(2);
  EXPECT_THROW(minimalWeakHopf(k, k, {2, 2}, Matrix::identity(2)), ConstructionError);
}

TEST(Minimal, RoundTrips) {
  EXPECT_TRUE(roundTripIdempotent(example1(), Algebra::diagonal(3), Algebra::upperTriangular2()));
  for (int n : {1, 2, 3}) {
    Algebra k = Algebra::diagonal(n);
    WeakHopfConstruction c = minimalWeakHopf(k, k, Vector(static_cast<size_t>(n), Scalar(1)), Matrix::identity(n));
    EXPECT_EQ(c.algebra.dim(), n * n);
    EXPECT_TRUE(roundTripWeakHopf(c, k, k)) << n;
  }
}

TEST(Groups, PresentationsAreGroups) {
  for (const auto& nm : {"Z1", "Z4", "S3", "V4"}) EXPECT_FALSE(GroupPresentation::byName(nm).checkGroup()) << nm;
  EXPECT_THROW(GroupPresentation::byName("Q8"), std::invalid_argument);
}

TEST(Cominimal, ChecksPassOnCatalog) {
  for (const auto& nm : catalogNames()) EXPECT_TRUE(cominimalChecks(catalog(nm).algebra).ok()) << nm;
}
