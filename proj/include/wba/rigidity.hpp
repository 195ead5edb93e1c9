#pragma once

#include <string>
#include <vector>

#include "wba/theorems.hpp"
#include "wba/weak_bialgebra.hpp"

namespace wba {

/// Left rigidity data (S, α, β); 𝔸 and 𝔹 are recovered from α and β.
struct RigidityStructure {
  Matrix S;
  Vector alpha, beta;
};

struct RigidityVerdict {
  bool preconditions = false;  // monoidal and S anti-multiplicative
  bool normalized = false;     // α ⟜ 1 = α and 1 ⟞ β = β
  bool preRigid = false;
  bool rigid = false;
  bool normalizable = false;   // α invertible with β = α⁻¹
  bool normal = false;         // α = β = 1
  std::vector<Witness> witnesses;
  /// Strongest status reached: "none", "preRigid", "rigid", "normalizable" or "normal".
  std::string status() const;
};

RigidityVerdict verifyRigidity(const WeakBialgebra& a, const RigidityStructure& r);

/// 𝔸 = S(1⁽¹⁾)α1⁽²⁾⊗1⁽³⁾ and 𝔹 = 1⁽¹⁾⊗1⁽²⁾βS(1⁽³⁾).
struct RigidityElements {
  Matrix A, B;
};
RigidityElements rigidityElements(const WeakBialgebra& a, const RigidityStructure& r);

struct TwistPair {
  Vector u, ubar;
};
/// S′ = uSū, α′ = uα, β′ = βū. Throws std::invalid_argument unless ūu = S(1), uūu = u, ūuū = ū.
RigidityStructure twist(const WeakBialgebra& a, const RigidityStructure& r, const TwistPair& t);

struct Intertwiners {
  TwistPair pair;
  /// The identity table relating the two structures through (u, ū).
  TheoremReport table;
};
Intertwiners uniquenessIntertwiners(const WeakBialgebra& a, const RigidityStructure& r1, const RigidityStructure& r2);

struct ConjugationData {
  Matrix F, Fbar;
  TheoremReport checks;
};
/// F, F̄ with their intertwining identities, plus the pre-rigid and rigid identity families.
ConjugationData conjugationData(const WeakBialgebra& a, const RigidityStructure& r);

struct SqcapMaps {
  Matrix sqcapL, sqcapR;  // a⁽¹⁾S(a⁽²⁾), S(a⁽¹⁾)a⁽²⁾
  Subspace imageL, imageR;
};
SqcapMaps sqcapMaps(const WeakBialgebra& a, const Matrix& s);
/// Image identities, composition identities and module isomorphisms for a normal pre-rigidity map.
TheoremReport sqcapSuite(const WeakBialgebra& a, const Matrix& s);

/// The rigidity identities of the category realized on the regular module V = A and its conjugate.
TheoremReport regularModuleRigidityIdentities(const WeakBialgebra& a, const RigidityStructure& r);

/// From a comonoidal minimal b = A_L A_R and a bijection sR : A_R → A_L (dim A_L × dim A_R matrix in
/// the bases of distinguishedSubspaces(b)), builds (S_B, α, β) on b and returns its transpose,
/// a rigidity structure on dual(b). Throws std::invalid_argument when a precondition fails.
RigidityStructure buildExample2Rigidity(const WeakBialgebra& b, const Matrix& sR);

/// Statements tying rigidity to antipodes, bijectivity and normal maps, evaluated on one instance.
TheoremReport rigidityTheoremSuite(const WeakBialgebra& a);

}  // namespace wba
