#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "wba/antipode.hpp"
#include "wba/catalog.hpp"
#include "wba/constructions.hpp"
#include "wba/repcat.hpp"
#include "wba/rigidity.hpp"
#include "wba/separability.hpp"

namespace wba::testing {

struct Instance {
  std::string name;
  WeakBialgebra algebra;
};

// Every theorem suite the library has, on one instance.
inline TheoremReport fullSuite(const WeakBialgebra& a) {
  TheoremReport all;
  all.append(structuralTheoremSuite(a));
  all.append(classifyWeakHopf(a).checks);
  all.append(antipodeTheoremSuite(a));
  all.append(sigmaMapSuite(a));
  all.append(separabilitySuite(a).checks);
  all.append(rigidityTheoremSuite(a));
  all.append(cominimalChecks(a));
  all.append(repcatTheoremSuite(std::make_shared<const WeakBialgebra>(a)));
  return all;
}

// Sparse invertible change of basis: a permutation, a few unit shears and a diagonal rescaling.
inline Matrix randomBasisChange(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix t(n, n);
  const Scalar scales[] = {1, 2, -1, Scalar(1, 2), 3};
  std::uniform_int_distribution<int> pickScale(0, 4);
  for (int i = 0; i < n; ++i) t(perm[i], i) = scales[pickScale(rng)];
  if (n > 1) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    const int shears = 1 + n / 3;
    for (int s = 0; s < shears; ++s) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      Scalar c = coeff(rng);
      if (c == 0) c = 1;
      // column j += c · column i keeps t invertible
      for (int r = 0; r < n; ++r) t(r, j) += c * t(r, i);
    }
  }
  return t;
}

inline std::vector<std::string> perturbationSeeds() {
  return {"trivial",  "group:Z2",      "group:Z3",     "group:V4",      "dualgroup:Z3", "bsz-dual:2",
          "bsz-dual:3", "adcross:Z2,Z2", "adcross:Z3,1", "example1",      "example1-dual", "crossed"};
}

// Random perturbations and duals of small catalog instances, each ending with a change of basis.
inline std::vector<Instance> randomInstances(int count, unsigned seed, int maxDim = 9) {
  std::mt19937 rng(seed);
  std::vector<Instance> seeds;
  for (const auto& nm : perturbationSeeds()) seeds.push_back({nm, catalog(nm).algebra});
  const std::vector<Instance> summands = {{"trivial", catalog("trivial").algebra},
                                          {"group:Z2", catalog("group:Z2").algebra},
                                          {"bsz-dual:2", catalog("bsz-dual:2").algebra}};
  std::uniform_int_distribution<size_t> pickSeed(0, seeds.size() - 1);
  std::uniform_int_distribution<size_t> pickSummand(0, summands.size() - 1);
  std::uniform_int_distribution<int> pickOp(0, 4);
  std::uniform_int_distribution<int> pickSteps(1, 3);
  std::vector<Instance> out;
  while (static_cast<int>(out.size()) < count) {
    Instance cur = seeds[pickSeed(rng)];
    const int steps = pickSteps(rng);
    for (int s = 0; s < steps; ++s) {
      switch (pickOp(rng)) {
        case 0:
          cur = {"dual(" + cur.name + ")", dual(cur.algebra)};
          break;
        case 1:
          cur = {"op(" + cur.name + ")", cur.algebra.opposite()};
          break;
        case 2:
          cur = {"cop(" + cur.name + ")", cur.algebra.coopposite()};
          break;
        case 3: {
          const Instance& b = summands[pickSummand(rng)];
          if (cur.algebra.dim() + b.algebra.dim() <= maxDim)
            cur = {cur.name + "+" + b.name, directSum(cur.algebra, b.algebra)};
          break;
        }
        default:
          cur = {"basis(" + cur.name + ")", cur.algebra.changeBasis(randomBasisChange(cur.algebra.dim(), rng))};
      }
    }
    cur = {"basis(" + cur.name + ")", cur.algebra.changeBasis(randomBasisChange(cur.algebra.dim(), rng))};
    cur.name = "random" + std::to_string(out.size()) + ":" + cur.name;
    out.push_back(std::move(cur));
  }
  return out;
}

}  // namespace wba::testing
