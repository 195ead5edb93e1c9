#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wba/theorems.hpp"
#include "wba/weak_bialgebra.hpp"

namespace wba {

/// Raised when a builder's precondition fails; carries the offending witness.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, Witness w) : std::runtime_error(what), witness(std::move(w)) {}
  Witness witness;
};

/// Ordinary Hopf algebra: Δ(1) = 1⊗1, multiplicative ε, S with S(a⁽¹⁾)a⁽²⁾ = ε(a)1 = a⁽¹⁾S(a⁽²⁾).
struct HopfAlgebra {
  WeakBialgebra bialgebra;
  Matrix antipode;
};
/// Throws ConstructionError when the data is not an ordinary Hopf algebra with bijective S.
void checkHopf(const HopfAlgebra& h);

struct GroupPresentation {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;  // table[g][h] = gh
  std::vector<int> subgroup;            // designated subgroup, sorted

  int order() const { return static_cast<int>(elements.size()); }
  int identity() const;
  int inverse(int g) const;
  std::optional<Witness> checkGroup() const;
  bool subgroupIsNormal() const;

  static GroupPresentation cyclic(int n);
  static GroupPresentation symmetric3();
  static GroupPresentation klein4();
  /// "Z<n>", "S3", "V4".
  static GroupPresentation byName(const std::string& name);
  /// Sets the designated subgroup by name: "1", the group's own name, "A3" (in S3),
  /// "Z<d>" (the order-d subgroup of a cyclic group, or {e, a} in V4 for d = 2).
  GroupPresentation withSubgroup(const std::string& name) const;
};

WeakBialgebra groupAlgebra(const GroupPresentation& g);
HopfAlgebra groupHopf(const GroupPresentation& g);

/// Data for a minimal weak bialgebra A = A1⊗A2 (or A1⊗_Z A2).
struct Amalgamation {
  /// Pairs (z in A1 coordinates, the same z in A2 coordinates) spanning A1∩A2.
  std::vector<std::pair<Vector, Vector>> generators;
};

/// Minimal weak bialgebra adapted to (a1, a2) with Δ(1) = P. p(s,t) is the coefficient of
/// f_s⊗e_t in P ∈ A2⊗A1. Basis of the result: e_i f_j, index i·dim a2 + j (amalgamated case:
/// the non-pivot coordinates of that basis modulo the amalgamation relations).
WeakBialgebra minimalFromIdempotent(const Algebra& a1, const Algebra& a2, const Matrix& p,
                                    const std::optional<Amalgamation>& amalgamation = std::nullopt);

struct WeakHopfConstruction {
  WeakBialgebra algebra;
  Matrix antipode;
};

/// Minimal weak Hopf algebra from ω on A1 (Ind ω = 1) and an anti-isomorphism sR : A2 → A1.
/// sR is a dim a1 × dim a2 matrix.
WeakHopfConstruction minimalWeakHopf(const Algebra& a1, const Algebra& a2, const Vector& omega, const Matrix& sR,
                                     const std::optional<Amalgamation>& amalgamation = std::nullopt);

/// Extracts (P, ε) from a minimal instance built on a1⊗a2 and rebuilds it; the two must agree.
bool roundTripIdempotent(const WeakBialgebra& a, const Algebra& a1, const Algebra& a2);
/// Extracts ω = ε|_{A_L}, S_R = ε_LR|_{A_R} and rebuilds the weak Hopf structure.
bool roundTripWeakHopf(const WeakHopfConstruction& c, const Algebra& a1, const Algebra& a2);

/// Two-sided crossed product A_L ⋊ G ⋉ A_R over the minimal weak Hopf algebra B built from (ω, sR).
struct CrossedProductData {
  Algebra aL, aR;
  HopfAlgebra g;
  /// act[k] is the matrix of a ↦ g_k ▹ a on A_L.
  std::vector<Matrix> act;
  Vector omega;
  Matrix sR;
};
WeakHopfConstruction twoSidedCrossedProduct(const CrossedProductData& data);

/// Ad-crossed product H ⋊_Ad G for a finite group with normal subgroup H; basis h|g.
WeakHopfConstruction adCrossedProduct(const GroupPresentation& gp);

/// The identities stated for the Ad-crossed product: closed forms of the four counit
/// projectors, the wedge descriptions, the normalized-integral identities and the antipode.
TheoremReport adCrossedProductChecks(const GroupPresentation& gp, const WeakHopfConstruction& c);

/// Kernel of the unit representation of Â and faithfulness criteria for the dual pair.
TheoremReport cominimalChecks(const WeakBialgebra& a);

}  // namespace wba
