#include <gtest/gtest.h>

#include "wba/antipode.hpp"
#include "wba/catalog.hpp"
#include "wba/rigidity.hpp"

using namespace wba;

namespace {

RigidityStructure normalFromAntipode(const WeakBialgebra& a) {
  AntipodeStatus st = solveAntipode(a);
  return {*st.map, a.one(), a.one()};
}

}  // namespace

TEST(Rigidity, AntipodeGivesNormalStructure) {
  for (const auto& nm : {"group:Z3", "bsz-dual:2", "adcross:Z2,Z2"}) {
    WeakBialgebra a = catalog(nm).algebra;
    RigidityVerdict v = verifyRigidity(a, normalFromAntipode(a));
    EXPECT_TRUE(v.normal) << nm;
    EXPECT_EQ(v.status(), "normal") << nm;
  }
}

TEST(Rigidity, Example2IsRigidButNotNormalizable) {
  CatalogEntry e = catalog("example2-rigidity");
  ASSERT_TRUE(e.rigidity);
  EXPECT_EQ(e.rigidity->alpha, (Vector{1, 0, 0, 0, 0, 0, 0, 0, 1}));
  RigidityVerdict v = verifyRigidity(e.algebra, *e.rigidity);
  EXPECT_TRUE(v.preconditions);
  EXPECT_TRUE(v.rigid);
  EXPECT_FALSE(v.normalizable);
  EXPECT_EQ(v.status(), "rigid");
  EXPECT_EQ(solveAntipode(e.algebra).kind, AntipodeStatus::Kind::None);
}

TEST(Rigidity, IdentityMapIsNotRigidOnZ3) {
  WeakBialgebra a = catalog("group:Z3").algebra;
  RigidityVerdict v = verifyRigidity(a, {Matrix::identity(3), a.one(), a.one()});
  EXPECT_FALSE(v.preRigid);
  EXPECT_FALSE(v.witnesses.empty());
}

TEST(Twist, InvertibleElementRoundTrips) {
  WeakBialgebra a = catalog("group:Z3").algebra;
  RigidityStructure r = normalFromAntipode(a);
  // (1 + a)(1 - a + a²)/2 = 1 in K[Z3]
  TwistPair t{{1, 1, 0}, {Scalar(1, 2), Scalar(-1, 2), Scalar(1, 2)}};
  RigidityStructure r2 = twist(a, r, t);
  EXPECT_EQ(r2.alpha, t.u);
  EXPECT_EQ(r2.beta, t.ubar);
  RigidityVerdict v = verifyRigidity(a, r2);
  EXPECT_TRUE(v.normalizable);
  EXPECT_FALSE(v.normal);
  RigidityStructure back = twist(a, r2, {t.ubar, t.u});
  EXPECT_EQ(back.S, r.S);
  EXPECT_EQ(back.alpha, r.alpha);
  EXPECT_EQ(back.beta, r.beta);
}

TEST(Twist, RejectsNonInvertiblePair) {
  WeakBialgebra a = catalog("group:Z3").algebra;
  RigidityStructure r = normalFromAntipode(a);
  EXPECT_THROW(twist(a, r, {{1, 0, 0}, {0, 1, 0}}), std::invalid_argument);
}

TEST(Intertwiners, RecoverTheTwist) {
  WeakBialgebra a = catalog("group:Z3").algebra;
  RigidityStructure r = normalFromAntipode(a);
  TwistPair t{{1, 1, 0}, {Scalar(1, 2), Scalar(-1, 2), Scalar(1, 2)}};
  RigidityStructure r2 = twist(a, r, t);
  Intertwiners in = uniquenessIntertwiners(a, r, r2);
  EXPECT_TRUE(in.table.ok());
  EXPECT_EQ(in.pair.u, t.u);
  EXPECT_EQ(in.pair.ubar, t.ubar);
}

TEST(Conjugation, IdentitiesHoldForNormalAndExample2) {
  WeakBialgebra a = catalog("bsz-dual:2").algebra;
  EXPECT_TRUE(conjugationData(a, normalFromAntipode(a)).checks.ok());
  CatalogEntry e = catalog("example2-rigidity");
  ConjugationData cd = conjugationData(e.algebra, *e.rigidity);
  EXPECT_TRUE(cd.checks.ok()) << (cd.checks.ok() ? "" : cd.checks.violations().front().name);
}

TEST(Sqcap, ImagesAreTheWedgesForAnAntipode) {
  WeakBialgebra a = catalog("bsz-dual:3").algebra;
  SqcapMaps m = sqcapMaps(a, *solveAntipode(a).map);
  Distinguished d = distinguishedSubspaces(a);
  EXPECT_EQ(m.imageL, d.AL);
  EXPECT_EQ(m.imageR, d.AR);
}

TEST(RigiditySuite, NoViolationsOnCatalog) {
  for (const auto& nm : catalogNames()) {
    TheoremReport r = rigidityTheoremSuite(catalog(nm).algebra);
    EXPECT_TRUE(r.ok()) << nm << ": " << (r.ok() ? "" : r.violations().front().name);
  }
}
