#pragma once

#include <optional>

#include "wba/theorems.hpp"
#include "wba/weak_bialgebra.hpp"

namespace wba {

/// S_L = ε̂_R∘ε_L, S_R = ε̂_L∘ε_R, S̄_L = ε̂_R∘ε_R, S̄_R = ε̂_L∘ε_L as n×n matrices.
/// Only their restrictions to A_L (S_L, S̄_L) and A_R (S_R, S̄_R) carry meaning.
struct SigmaMaps {
  Matrix SL, SR, SbarL, SbarR;
};
SigmaMaps sigmaMaps(const WeakBialgebra& a);

/// Form-inverse data of a functional ω restricted to a unital subalgebra M ⊂ A.
/// Ambient coordinates throughout: quasiBasis(k,l) is the coefficient of e_k⊗e_l.
struct NondegenerateFunctional {
  Subspace space;
  Vector omega;
  Matrix quasiBasis;
  Vector index;
  /// θ_ω on M, extended by zero along the non-pivot coordinates.
  Matrix modular;
};

/// Solves ω(m x_i)y_i = m = x_i ω(y_i m) on `on`. nullopt if the Gram form is singular.
std::optional<NondegenerateFunctional> quasiBasis(const Algebra& alg, const Vector& omega, const Subspace& on);

/// Checks m x_i⊗y_i = x_i⊗y_i m, centrality of the index, and that θ_ω is an algebra
/// automorphism of M with ω(xy) = ω(yθ(x)).
TheoremReport quasiBasisChecks(const Algebra& alg, const NondegenerateFunctional& f);

/// Matrix selecting pivot coordinates: maps x ∈ s to its coordinates in s's basis.
Matrix coordinateMap(const Subspace& s);
/// n×d matrix whose columns are the basis vectors of s.
Matrix basisColumns(const Subspace& s);

struct SeparabilityReport {
  bool bimonoidal = false;
  TheoremReport checks;
  /// Quasi-bases of ε on A_L and A_R when they exist.
  std::optional<NondegenerateFunctional> onAL, onAR;
};

/// Separability of A_L and A_R through ε (counit restricted to the wedges).
SeparabilityReport separabilitySuite(const WeakBialgebra& a);

/// Raw properties of the restricted σ-maps, independent of any axiom flags.
struct SigmaMapProperties {
  bool antiMultiplicative = false;  // all four reverse products on their domains
  bool bijective = false;           // S_L, S̄_L onto A_R and S_R, S̄_R onto A_L
  bool barredInverse = false;       // S̄_{L/R} = S_{R/L}⁻¹
};
SigmaMapProperties sigmaMapProperties(const WeakBialgebra& a);

/// The σ-map statements: ε(a_L b_L) = ε(S_L(a_L)b_L) = ε(a_L S̄_L(b_L)) and the A_R analogues on
/// (co)monoidal instances, and the anti-isomorphism property with S̄ = S⁻¹ on bimonoidal ones.
TheoremReport sigmaMapSuite(const WeakBialgebra& a);

}  // namespace wba
