// Acceptance run: one PASS/FAIL line per criterion, with the failing facts underneath.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "wba/io.hpp"

using namespace wba;
using wba::testing::Instance;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string show(const Vector& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + toString(v[i]);
  return s + "]";
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o = body();
  const double t = seconds(t0);
  if (budget > 0) o.require(t < budget, "runtime " + std::to_string(t) + " s exceeds " + std::to_string(budget) + " s");
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title << " (" << t << " s)\n";
  for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  std::cout.flush();
  if (!o.pass) ++failures;
}

Outcome example1Reproduction() {
  Outcome o;
  WeakBialgebra a = example1();
  o.require(validate(a).ok, "example1 does not validate");
  const Vector eps{1, -1, 0, 0, 1, 0, 0, 0, 1};  // e¹⊗(b¹−b²) + e²⊗b² + e³⊗b³
  o.require(a.counit() == eps, "counit " + show(a.counit()) + " differs from " + show(eps));
  AxiomReport ax = decideAxioms(a);
  o.require(ax.comonoidal, "not comonoidal");
  o.require(!ax.leftMonoidal && !ax.rightMonoidal, "unexpectedly left or right monoidal");
  o.require(solveAntipode(a).kind == AntipodeStatus::Kind::None, "an antipode was found");
  const Vector e1PlusE2{1, 0, 1, 1, 0, 1, 0, 0, 0};  // (e1 + e2)⊗1
  Vector lr = epsProjectors(a)(L, R) * a.basis(0);
  o.require(lr == e1PlusE2, "eps_LR(e1b1) = " + show(lr));
  return o;
}

Outcome example2Reproduction() {
  Outcome o;
  WeakBialgebra b = example1();
  RigidityStructure r = buildExample2Rigidity(b, example2SR());
  const Vector alpha{1, 0, 0, 0, 0, 0, 0, 0, 1};  // e¹⊗b¹ + e³⊗b³
  o.require(r.alpha == alpha, "alpha = " + show(r.alpha) + ", expected " + show(alpha));
  if (r.beta != b.counit()) {
    std::ostringstream s;
    s << "beta = " << show(r.beta) << " differs from eps = " << show(b.counit());
    for (int i = 0; i < b.dim(); ++i)
      if (r.beta[i] != b.counit()[i]) {
        s << " (first at " << b.labels()[i] << ": " << r.beta[i] << " vs " << b.counit()[i] << ")";
        break;
      }
    o.require(false, s.str());
  }
  RigidityVerdict v = verifyRigidity(dual(b), r);
  o.require(v.rigid, "verifier does not report rigid (status " + v.status() + ")");
  o.require(!v.normalizable, "verifier reports normalizable");
  return o;
}

Outcome adCrossedAtDeskScale() {
  Outcome o;
  GroupPresentation g = GroupPresentation::symmetric3().withSubgroup("A3");
  WeakHopfConstruction c = adCrossedProduct(g);
  const WeakBialgebra& a = c.algebra;
  o.require(a.dim() == 18, "dim " + std::to_string(a.dim()));
  o.require(validate(a).ok, "does not validate");
  o.require(decideAxioms(a).bimonoidal, "not bimonoidal");
  AntipodeStatus st = solveAntipode(a);
  o.require(st.kind == AntipodeStatus::Kind::Antipode || st.kind == AntipodeStatus::Kind::HopfAntipode,
            "antipode solver: " + kindName(st.kind));
  o.require(st.map && *st.map == c.antipode, "solved antipode differs from the closed form");
  WeakHopfReport wh = classifyWeakHopf(a);
  o.require(wh.weakHopf, "not classified weak Hopf");
  TheoremReport closed = adCrossedProductChecks(g, c);
  for (const auto& v : closed.violations()) o.require(false, "closed form fails: " + v.name);
  Distinguished d = distinguishedSubspaces(a);
  o.require(d.AL.dim() == 3 && d.AR.dim() == 3, "wedge dims " + std::to_string(d.AL.dim()) + "/" + std::to_string(d.AR.dim()));
  return o;
}

Outcome bszDualReproduction() {
  Outcome o;
  for (int n : {2, 3}) {
    Algebra k = Algebra::diagonal(n);
    WeakBialgebra a = minimalFromIdempotent(k, k, Matrix::identity(n));
    WeakHopfConstruction rebuilt = minimalWeakHopf(k, k, Vector(static_cast<size_t>(n), Scalar(1)), Matrix::identity(n));
    const std::string tag = "N=" + std::to_string(n) + ": ";
    o.require(a == rebuilt.algebra, tag + "idempotent and reconstruction structures differ");
    AntipodeStatus st = solveAntipode(a);
    o.require(st.map.has_value(), tag + "no antipode solved");
    if (st.map) o.require(*st.map == rebuilt.antipode, tag + "solved antipode differs from the reconstruction");
    o.require(classifyWeakHopf(a).weakHopf, tag + "not weak Hopf");
  }
  return o;
}

std::vector<Instance> suiteInstances() {
  std::vector<Instance> all;
  for (const auto& nm : catalogNames()) all.push_back({nm, catalog(nm).algebra});
  for (auto& r : wba::testing::randomInstances(110, 20261018u)) all.push_back(std::move(r));
  return all;
}

Outcome theoremSuite(const std::vector<Instance>& instances) {
  Outcome o;
  long checks = 0, applicable = 0;
  for (const auto& inst : instances) {
    ValidationReport v = validate(inst.algebra);
    if (!v.ok) {
      o.require(false, inst.name + ": does not validate (" + v.violations.front().law + ")");
      continue;
    }
    TheoremReport r = wba::testing::fullSuite(inst.algebra);
    checks += static_cast<long>(r.checks().size());
    applicable += r.applicable();
    for (const auto& c : r.violations()) o.require(false, inst.name + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
  o.notes.insert(o.notes.begin(), std::to_string(instances.size()) + " instances, " + std::to_string(checks) +
                                      " checks, " + std::to_string(applicable) + " with hypotheses met");
  return o;
}

Outcome dualityInvolution(const std::vector<Instance>& instances) {
  Outcome o;
  for (const auto& inst : instances) {
    SpecFile s{inst.algebra, Json::object()};
    const std::string once = emitSpec(s);
    o.require(emitSpec(dualSpec(dualSpec(s))) == once, inst.name + ": file differs after two duals");
    o.require(dual(dual(inst.algebra)) == inst.algebra, inst.name + ": structure differs after two duals");
  }
  return o;
}

Outcome antipodeUniqueness(const std::vector<Instance>& instances) {
  Outcome o;
  int weakHopf = 0;
  for (const auto& inst : instances) {
    const WeakBialgebra& a = inst.algebra;
    if (!decideAxioms(a).bimonoidal) continue;
    auto pre = solvePreAntipodes(a);
    if (!pre) continue;
    ++weakHopf;
    const int n = a.dim();
    Vector second = pre->particular;
    for (const auto& k : pre->kernel.vectors()) second = add(second, k);
    auto normalized = [&](const Vector& flat) {
      Matrix sp = Matrix::reshape(flat, n, n);
      return convolve(a, convolve(a, sp, Matrix::identity(n)), sp);
    };
    Matrix s1 = normalized(pre->particular), s2 = normalized(second);
    o.require(s1 == s2, inst.name + ": two particular solutions normalize differently");
    o.require(isAntipode(a, s1), inst.name + ": normalized map is not an antipode");
    o.require(isBialgebraAntiAutomorphism(a, s1), inst.name + ": antipode is not a bialgebra anti-automorphism");
    auto inv = inverse(s1);
    o.require(inv && isPode(a, *inv), inst.name + ": inverse antipode is not a pode");
  }
  o.notes.insert(o.notes.begin(), std::to_string(weakHopf) + " weak Hopf instances");
  return o;
}

Outcome roundTrips() {
  Outcome o;
  o.require(roundTripIdempotent(example1(), Algebra::diagonal(3), Algebra::upperTriangular2()), "example1 idempotent round-trip");
  for (int n : {1, 2, 3, 4}) {
    Algebra k = Algebra::diagonal(n);
    WeakHopfConstruction c = minimalWeakHopf(k, k, Vector(static_cast<size_t>(n), Scalar(1)), Matrix::identity(n));
    o.require(roundTripIdempotent(c.algebra, k, k), "bsz-dual:" + std::to_string(n) + " idempotent round-trip");
    o.require(roundTripWeakHopf(c, k, k), "bsz-dual:" + std::to_string(n) + " weak Hopf round-trip");
  }
  for (int n : {1, 2}) {
    Algebra m = Algebra::matrixAlgebra(n);
    CatalogEntry e = catalog("matrix-hopf:" + std::to_string(n));
    WeakHopfConstruction c{e.algebra, *e.antipode};
    o.require(roundTripIdempotent(c.algebra, m, m), e.name + " idempotent round-trip");
    o.require(roundTripWeakHopf(c, m, m), e.name + " weak Hopf round-trip");
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "example1 reproduction", 1.0, example1Reproduction);
  criterion(2, "example2 rigidity reproduction", 1.0, example2Reproduction);
  criterion(3, "ad-crossed product S3 over A3", 30.0, adCrossedAtDeskScale);
  criterion(4, "BSz-dual antipode against reconstruction", 5.0, bszDualReproduction);
  std::vector<Instance> instances;
  criterion(5, "theorem suites on catalog and random instances", 300.0, [&] {
    instances = suiteInstances();
    return theoremSuite(instances);
  });
  criterion(6, "duality involution", 0, [&] { return dualityInvolution(instances); });
  criterion(7, "antipode uniqueness and pode", 0, [&] { return antipodeUniqueness(instances); });
  criterion(8, "minimal round-trips", 0, roundTrips);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion failing") << "\n";
  return failures == 0 ? 0 : 1;
}
