#include <gtest/gtest.h>

#include "wba/catalog.hpp"
#include "wba/theorems.hpp"
#include "wba/weak_bialgebra.hpp"

using namespace wba;

TEST(Validate, CatalogInstancesAreWeakBialgebras) {
  for (const auto& nm : catalogNames()) {
    ValidationReport r = validate(catalog(nm).algebra);
    EXPECT_TRUE(r.ok) << nm << ": " << (r.ok ? "" : r.violations.front().law);
  }
}

TEST(Validate, BrokenCounitIsReported) {
  WeakBialgebra a = catalog("group:Z2").algebra;
  std::vector<Matrix> cop;
  for (int k = 0; k < a.dim(); ++k) cop.push_back(a.coproduct(k));
  WeakBialgebra broken(a.algebra(), cop, {1, 0});
  ValidationReport r = validate(broken);
  ASSERT_FALSE(r.ok);
  EXPECT_FALSE(r.violations.front().law.empty());
}

TEST(Dual, IsAnInvolution) {
  for (const auto& nm : {"example1", "bsz-dual:2", "group:S3", "crossed"}) {
    WeakBialgebra a = catalog(nm).algebra;
    EXPECT_TRUE(validate(dual(a)).ok) << nm;
    EXPECT_EQ(dual(dual(a)), a) << nm;
  }
}

TEST(Example1, CounitAndAxiomFlags) {
  WeakBialgebra a = example1();
  EXPECT_EQ(a.dim(), 9);
  EXPECT_EQ(a.counit(), (Vector{1, -1, 0, 0, 1, 0, 0, 0, 1}));
  AxiomReport ax = decideAxioms(a);
  EXPECT_TRUE(ax.weakBialgebra);
  EXPECT_TRUE(ax.comonoidal);
  EXPECT_FALSE(ax.leftMonoidal);
  EXPECT_FALSE(ax.rightMonoidal);
  EXPECT_TRUE(ax.minimal);
}

TEST(Example1, EpsLRProjectsE1B1) {
  WeakBialgebra a = example1();
  EXPECT_EQ(epsProjectors(a)(L, R) * a.basis(0), (Vector{1, 0, 1, 1, 0, 1, 0, 0, 0}));
}

TEST(Example1, DualIsMonoidalNotComonoidal) {
  AxiomReport ax = decideAxioms(dual(example1()));
  EXPECT_TRUE(ax.monoidal);
  EXPECT_FALSE(ax.comonoidal);
}

TEST(GroupAlgebra, IsOrdinaryBialgebra) {
  WeakBialgebra a = catalog("group:S3").algebra;
  AxiomReport ax = decideAxioms(a);
  EXPECT_TRUE(ax.bimonoidal);
  EXPECT_EQ(ax.dimAL, 1);
  EXPECT_EQ(ax.dimAR, 1);
  EXPECT_TRUE(isGroupLike(a.deltaOne(), a.one()));
}

TEST(Wedges, BszDualDimensions) {
  for (int n : {2, 3}) {
    WeakBialgebra a = catalog("bsz-dual:" + std::to_string(n)).algebra;
    Distinguished d = distinguishedSubspaces(a);
    EXPECT_EQ(d.AL.dim(), n);
    EXPECT_EQ(d.AR.dim(), n);
    EXPECT_TRUE(subspaceCommute(a, d.AL, d.AR));
    EXPECT_FALSE(isGroupLike(a.deltaOne(), a.one()));
  }
}

TEST(Projectors, AreIdempotentWithImagesTheWedges) {
  for (const auto& nm : {"bsz-dual:2", "adcross:Z2,Z2", "example1"}) {
    WeakBialgebra a = catalog(nm).algebra;
    Projectors p = epsProjectors(a);
    Distinguished d = distinguishedSubspaces(a);
    for (Side s : {L, R})
      for (Side t : {L, R}) {
        EXPECT_EQ(p(s, t) * p(s, t), p(s, t)) << nm;
        EXPECT_EQ(Subspace::image(p(s, t)), d.Ass[s][t]) << nm;
      }
  }
}

TEST(FixedPoints, NLLIsASubalgebraOnBimonoidalInstances) {
  WeakBialgebra a = catalog("adcross:Z2,Z2").algebra;
  FixedPoints f = fixedPointSubalgebras(a);
  EXPECT_TRUE(a.algebra().isUnitalSubalgebra(f(L, L)));
  EXPECT_GT(f(L, L).dim(), 0);
}

TEST(ChangeBasis, PreservesValidityAndFlags) {
  WeakBialgebra a = catalog("crossed").algebra;
  Matrix t = Matrix::identity(a.dim());
  t(0, 1) = 2;
  t(3, 3) = Scalar(1, 2);
  WeakBialgebra b = a.changeBasis(t);
  EXPECT_TRUE(validate(b).ok);
  AxiomReport x = decideAxioms(a), y = decideAxioms(b);
  EXPECT_EQ(x.bimonoidal, y.bimonoidal);
  EXPECT_EQ(x.dimAL, y.dimAL);
  EXPECT_EQ(x.dimsN, y.dimsN);
}

TEST(StructuralSuite, NoViolationsOnCatalog) {
  for (const auto& nm : catalogNames()) {
    TheoremReport r = structuralTheoremSuite(catalog(nm).algebra);
    EXPECT_TRUE(r.ok()) << nm << ": " << (r.ok() ? "" : r.violations().front().name);
  }
}
