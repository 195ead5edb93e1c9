#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "wba/theorems.hpp"
#include "wba/weak_bialgebra.hpp"

namespace wba {

/// Unital representation π : A → End V, given on the basis of A.
struct ModuleRep {
  std::shared_ptr<const WeakBialgebra> algebra;
  int dim = 0;
  std::vector<Matrix> action;  // action[k] = π(e_k)

  Matrix act(const Vector& x) const;
};

ModuleRep regularModule(std::shared_ptr<const WeakBialgebra> a);
/// First violation of π(e_i e_j) = π(e_i)π(e_j) or π(1) = 1.
std::optional<Witness> checkModule(const ModuleRep& m);

/// 1_{V×W} = (π_V⊗π_W)(Δ(1)) acting on V⊗W.
Matrix truncation(const ModuleRep& v, const ModuleRep& w);
/// (π_V⊗π_W)(Δ(a)) on V⊗W.
Matrix tensorAction(const ModuleRep& v, const ModuleRep& w, const Vector& a);

struct TensorModule {
  ModuleRep module;
  Matrix embedding;  // columns: RREF basis of V×W inside V⊗W
};
/// Throws std::invalid_argument when the two modules live over different algebras.
TensorModule tensorModule(const ModuleRep& v, const ModuleRep& w);
/// (U×V)×W and U×(V×W) coincide inside U⊗V⊗W with equal actions.
bool tensorAssociative(const ModuleRep& u, const ModuleRep& v, const ModuleRep& w);

struct UnitModule {
  ModuleRep module;
  Matrix embedding;  // columns: basis of E = Â_R inside Â
  TheoremReport checks;
};
/// E = Â_R with a ⇀ φ; for monoidal A also the realizations on A_LR and A_RR.
UnitModule unitModule(std::shared_ptr<const WeakBialgebra> a);

struct IntertwinerSpace {
  std::vector<Matrix> basis;  // T with Tπ_V(a) = π_W(a)T
};
IntertwinerSpace intertwiners(const ModuleRep& v, const ModuleRep& w);

struct CoherenceMaps {
  // L : V → Â⊗V, R : V → V⊗Â, Lbar : Â⊗V → V, Rbar : V⊗Â → V (E enters through Â coordinates)
  Matrix L, R, Lbar, Rbar;
  bool leftLinear = false, rightLinear = false;
  TheoremReport checks;
};
CoherenceMaps coherenceMaps(const ModuleRep& v);

struct EndOfUnit {
  IntertwinerSpace ends;            // End_A E (monoidal), in coordinates of E
  IntertwinerSpace comoduleEnds;    // End^A A_R (comonoidal), in coordinates of A_R
  TheoremReport checks;
};
EndOfUnit endOfUnit(std::shared_ptr<const WeakBialgebra> a);

/// Right comodule ρ(f_v) = Σ rho[v](w,k) f_w⊗e_k.
struct Comodule {
  std::shared_ptr<const WeakBialgebra> algebra;
  int dim = 0;
  std::vector<Matrix> rho;
};
Comodule regularComodule(std::shared_ptr<const WeakBialgebra> a);
/// A_R with ρ = Δ|_{A_R}; requires Δ(A_R) ⊂ A_R⊗A.
Comodule unitComodule(std::shared_ptr<const WeakBialgebra> a);
std::optional<Witness> checkComodule(const Comodule& c);
/// φ ⇀ v = v⁽⁰⁾⟨φ|v⁽¹⁾⟩ as a module over the given dual.
ModuleRep comoduleAsModule(const Comodule& c, std::shared_ptr<const WeakBialgebra> dualAlgebra);

struct ComoduleTensor {
  Comodule amalgamated;  // VW = V ⊗_{A_R} W
  Comodule truncated;    // V×W
  Matrix quotient;       // P_VW : V⊗W → VW
  Matrix iso, inverse;   // P_VW|_{V×W} and its inverse
  TheoremReport checks;
};
/// Throws std::invalid_argument unless the algebra is bimonoidal.
ComoduleTensor comoduleTensor(const Comodule& v, const Comodule& w);
/// A_R·V ≅ V through a⊗v ↦ a·v.
TheoremReport unitComoduleIsomorphism(const Comodule& v);

/// Cross-checks between representations and the axiom flags, evaluated on one instance.
TheoremReport repcatTheoremSuite(std::shared_ptr<const WeakBialgebra> a);

}  // namespace wba
