#include "wba/catalog.hpp"

#include <stdexcept>

#include "wba/constructions.hpp"

namespace wba {

namespace {

int parseCount(const std::string& s, int lo, int hi) {
  size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || n < lo || n > hi) throw std::invalid_argument("bad size parameter: " + s);
  return n;
}

CatalogEntry bszDual(int n) {
  Algebra k = Algebra::diagonal(n);
  Vector omega(static_cast<size_t>(n), Scalar(1));
  WeakHopfConstruction c = minimalWeakHopf(k, k, omega, Matrix::identity(n));
  return {"bsz-dual:" + std::to_string(n), c.algebra, c.antipode, std::nullopt,
          "minimal weak Hopf algebra K^N ⊗ K^N with Δ(1) = Σ e_i⊗e_i"};
}

CatalogEntry matrixHopf(int n) {
  Algebra m = Algebra::matrixAlgebra(n);
  Vector omega = zeroVector(n * n);
  for (int i = 0; i < n; ++i) omega[i * n + i] = n;
  Matrix transpose(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) transpose(j * n + i, i * n + j) = 1;
  WeakHopfConstruction c = minimalWeakHopf(m, m, omega, transpose);
  return {"matrix-hopf:" + std::to_string(n), c.algebra, c.antipode, std::nullopt,
          "minimal weak Hopf algebra Mat_N ⊗ Mat_N from ω = N·tr and the transpose"};
}

CatalogEntry crossed() {
  Algebra k2 = Algebra::diagonal(2);
  GroupPresentation z2 = GroupPresentation::cyclic(2);
  CrossedProductData d;
  d.aL = k2;
  d.aR = k2;
  d.g = groupHopf(z2);
  Matrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1;
  d.act = {Matrix::identity(2), swap};
  d.omega = Vector{1, 1};
  d.sR = Matrix::identity(2);
  WeakHopfConstruction c = twoSidedCrossedProduct(d);
  return {"crossed", c.algebra, c.antipode, std::nullopt, "K^2 ⋊ KZ2 ⋉ K^2 with Z2 swapping the idempotents"};
}

}  // namespace

WeakBialgebra example1() {
  Matrix p(3, 3);
  p(0, 0) = p(0, 1) = 1;  // b1⊗(e1 + e2)
  p(1, 1) = 1;            // b2⊗e2
  p(2, 2) = 1;            // b3⊗e3
  return minimalFromIdempotent(Algebra::diagonal(3), Algebra::upperTriangular2(), p);
}

Matrix example2SR() {
  // b1 ↦ e1 + e2, b2 ↦ e2, b3 ↦ e3
  return Matrix::fromRows(3, {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}});
}

CatalogEntry catalog(const std::string& name) {
  auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (name == "trivial") {
    HopfAlgebra h = groupHopf(GroupPresentation::cyclic(1));
    return {name, h.bialgebra, h.antipode, std::nullopt, "the ground field"};
  }
  if (name == "example1") return {name, example1(), std::nullopt, std::nullopt, "comonoidal minimal K^3 ⊗ T_2"};
  if (name == "example1-dual") return {name, dual(example1()), std::nullopt, std::nullopt, "dual of example1"};
  if (name == "example2-rigidity") {
    WeakBialgebra b = example1();
    return {name, dual(b), std::nullopt, buildExample2Rigidity(b, example2SR()),
            "dual of example1 with the rigidity structure from S_R"};
  }
  if (head == "bsz-dual" && colon != std::string::npos) return bszDual(parseCount(arg, 1, 6));
  if (head == "matrix-hopf" && colon != std::string::npos) return matrixHopf(parseCount(arg, 1, 3));
  if (head == "group" && colon != std::string::npos) {
    HopfAlgebra h = groupHopf(GroupPresentation::byName(arg));
    return {name, h.bialgebra, h.antipode, std::nullopt, "group algebra"};
  }
  if (head == "dualgroup" && colon != std::string::npos) {
    HopfAlgebra h = groupHopf(GroupPresentation::byName(arg));
    return {name, dual(h.bialgebra), h.antipode.transpose(), std::nullopt, "dual of a group algebra"};
  }
  if (head == "adcross" && colon != std::string::npos) {
    auto comma = arg.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("adcross needs <G>,<H>");
    GroupPresentation g = GroupPresentation::byName(arg.substr(0, comma)).withSubgroup(arg.substr(comma + 1));
    WeakHopfConstruction c = adCrossedProduct(g);
    return {name, c.algebra, c.antipode, std::nullopt, "Ad-crossed product H ⋊ G"};
  }
  if (name == "crossed") return crossed();
  throw std::invalid_argument("unknown catalog instance: " + name);
}

std::vector<std::string> catalogNames() {
  return {"trivial",      "example1",     "example1-dual", "example2-rigidity", "bsz-dual:2",
          "bsz-dual:3",   "matrix-hopf:2", "group:Z2",     "group:Z3",          "group:S3",
          "group:V4",     "dualgroup:Z3", "dualgroup:S3",  "adcross:Z2,Z2",     "adcross:Z3,1",
          "adcross:V4,Z2", "adcross:S3,A3", "crossed"};
}

}  // namespace wba
