#include <gtest/gtest.h>

#include <memory>

#include "wba/catalog.hpp"
#include "wba/repcat.hpp"

using namespace wba;

namespace {

std::shared_ptr<const WeakBialgebra> shared(const std::string& name) {
  return std::make_shared<const WeakBialgebra>(catalog(name).algebra);
}

}  // namespace

TEST(Regular, IsAModule) {
  for (const auto& nm : {"example1", "bsz-dual:2", "group:S3"}) EXPECT_FALSE(checkModule(regularModule(shared(nm)))) << nm;
}

TEST(Truncation, IdentityForOrdinaryBialgebra) {
  ModuleRep v = regularModule(shared("group:Z3"));
  EXPECT_TRUE(truncation(v, v).isIdentity());
  EXPECT_EQ(tensorModule(v, v).module.dim, 9);
}

TEST(Truncation, IdempotentWithProperImage) {
  ModuleRep v = regularModule(shared("bsz-dual:2"));
  Matrix t = truncation(v, v);
  EXPECT_EQ(t * t, t);
  const int r = rank(t);
  EXPECT_LT(r, 16);
  EXPECT_EQ(tensorModule(v, v).module.dim, r);
  EXPECT_FALSE(checkModule(tensorModule(v, v).module));
}

TEST(TensorModule, Associative) {
  ModuleRep v = regularModule(shared("bsz-dual:2"));
  EXPECT_TRUE(tensorAssociative(v, v, v));
}

TEST(TensorModule, RejectsDifferentAlgebras) {
  EXPECT_THROW(tensorModule(regularModule(shared("group:Z2")), regularModule(shared("group:Z3"))), std::invalid_argument);
}

TEST(UnitModule, DimensionIsTheWedge) {
  for (const auto& nm : {"group:S3", "bsz-dual:3", "adcross:Z2,Z2"}) {
    auto a = shared(nm);
    UnitModule u = unitModule(a);
    EXPECT_EQ(u.module.dim, distinguishedSubspaces(*a).AR.dim()) << nm;
    EXPECT_FALSE(checkModule(u.module)) << nm;
    EXPECT_TRUE(u.checks.ok()) << nm;
  }
}

TEST(EndOfUnit, MatchesCenterAndWedgeIntersections) {
  for (const auto& nm : {"group:S3", "bsz-dual:2", "bsz-dual:3", "adcross:V4,Z2", "example1", "example1-dual"}) {
    auto a = shared(nm);
    AxiomReport ax = decideAxioms(*a);
    Distinguished d = distinguishedSubspaces(*a);
    EndOfUnit e = endOfUnit(a);
    // End_A E ≅ Z(A)∩A_L and End^A A_R ≅ A_L∩A_R
    if (ax.monoidal) EXPECT_EQ(static_cast<int>(e.ends.basis.size()), a->algebra().center().intersect(d.AL).dim()) << nm;
    if (ax.comonoidal) EXPECT_EQ(static_cast<int>(e.comoduleEnds.basis.size()), d.AL.intersect(d.AR).dim()) << nm;
    EXPECT_TRUE(e.checks.ok()) << nm;
  }
  EXPECT_EQ(endOfUnit(shared("group:S3")).ends.basis.size(), 1u);
  EXPECT_EQ(endOfUnit(shared("bsz-dual:3")).ends.basis.size(), 3u);
}

TEST(Intertwiners, RegularModuleEndsAreRightMultiplications) {
  auto a = shared("group:S3");
  ModuleRep v = regularModule(a);
  EXPECT_EQ(intertwiners(v, v).basis.size(), 6u);
}

TEST(Coherence, UnitorsAreLinearOnWeakHopfInstances) {
  for (const auto& nm : {"bsz-dual:2", "adcross:Z2,Z2"}) {
    CoherenceMaps c = coherenceMaps(regularModule(shared(nm)));
    EXPECT_TRUE(c.leftLinear) << nm;
    EXPECT_TRUE(c.rightLinear) << nm;
    EXPECT_TRUE(c.checks.ok()) << nm;
  }
}

TEST(Comodules, RegularAndUnitComodules) {
  auto a = shared("bsz-dual:2");
  EXPECT_FALSE(checkComodule(regularComodule(a)));
  Comodule u = unitComodule(a);
  EXPECT_FALSE(checkComodule(u));
  EXPECT_EQ(u.dim, 2);
  EXPECT_TRUE(unitComoduleIsomorphism(regularComodule(a)).ok());
}

TEST(Comodules, TensorRequiresBimonoidal) {
  auto a = shared("example1");
  Comodule c = regularComodule(a);
  EXPECT_THROW(comoduleTensor(c, c), std::invalid_argument);
  auto b = shared("bsz-dual:2");
  ComoduleTensor t = comoduleTensor(regularComodule(b), regularComodule(b));
  EXPECT_TRUE(t.checks.ok());
  EXPECT_TRUE((t.iso * t.inverse).isIdentity());
}

TEST(RepcatSuite, NoViolationsOnSmallCatalog) {
  for (const auto& nm : {"trivial", "example1", "example1-dual", "bsz-dual:2", "group:S3", "crossed"}) {
    TheoremReport r = repcatTheoremSuite(shared(nm));
    EXPECT_TRUE(r.ok()) << nm << ": " << (r.ok() ? "" : r.violations().front().name);
  }
}
