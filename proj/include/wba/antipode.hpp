#pragma once

#include <optional>
#include <string>

#include "wba/theorems.hpp"
#include "wba/weak_bialgebra.hpp"

namespace wba {

/// (f*g)(a) = f(a⁽¹⁾)g(a⁽²⁾), maps given as n×n matrices.
Matrix convolve(const WeakBialgebra& a, const Matrix& f, const Matrix& g);
/// a ↦ ε(a)1, the unit of the convolution algebra.
Matrix convolutionUnit(const WeakBialgebra& a);

/// Linear system in the n² entries of S (unknown index l·n + j = coefficient of e_l in S(e_j))
/// for a⁽¹⁾S(a⁽²⁾) = ε_LR(a) and S(a⁽¹⁾)a⁽²⁾ = ε_RL(a).
struct LinearSystem {
  Matrix coeffs;
  Vector rhs;
};
LinearSystem preAntipodeSystem(const WeakBialgebra& a);
/// All pre-antipodes as particular + kernel; nullopt when there is none.
std::optional<AffineSolution> solvePreAntipodes(const WeakBialgebra& a);

bool isPreAntipode(const WeakBialgebra& a, const Matrix& s);
/// Pre-antipode with S*id*S = S.
bool isAntipode(const WeakBialgebra& a, const Matrix& s);
/// S(a⁽¹⁾)a⁽²⁾ = ε(a)1 = a⁽¹⁾S(a⁽²⁾).
bool isHopfAntipode(const WeakBialgebra& a, const Matrix& s);
/// Pre-pode and pode are the antipode notions of the opposite algebra.
bool isPrePode(const WeakBialgebra& a, const Matrix& s);
bool isPode(const WeakBialgebra& a, const Matrix& s);

bool isAntiMultiplicative(const WeakBialgebra& a, const Matrix& s);
bool isAntiComultiplicative(const WeakBialgebra& a, const Matrix& s);
/// Anti-multiplicative, anti-comultiplicative, bijective, S(1) = 1 and ε∘S = ε.
bool isBialgebraAntiAutomorphism(const WeakBialgebra& a, const Matrix& s);

struct AntipodeStatus {
  enum class Kind { None, PreAntipodeOnly, Antipode, HopfAntipode };
  Kind kind = Kind::None;
  std::optional<Matrix> map;
  bool antiMultiplicative = false, antiComultiplicative = false, bijective = false;
  bool podeInverse = false, normalRigidity = false;
  /// A second particular solution normalized to the same matrix (true when the solution is unique).
  bool uniquenessVerified = false;
};
std::string kindName(AntipodeStatus::Kind k);

AntipodeStatus solveAntipode(const WeakBialgebra& a);
/// The pode, obtained as the antipode of the opposite algebra.
std::optional<Matrix> solvePode(const WeakBialgebra& a);

/// S(1⁽¹⁾)α1⁽²⁾ = 1 with α = β = 1, i.e. the normal pre-rigidity conditions on S.
bool isNormalPreRigidityMap(const WeakBialgebra& a, const Matrix& s);

struct WeakHopfReport {
  bool weakHopf = false;
  bool ordinaryHopf = false;
  AxiomReport axioms;
  AntipodeStatus antipode;
  TheoremReport checks;
};
WeakHopfReport classifyWeakHopf(const WeakBialgebra& a);

/// The implication lattice and companion statements relating pre-antipodes, antipodes, podes
/// and the (co)monoidality axioms, evaluated on one instance.
TheoremReport antipodeTheoremSuite(const WeakBialgebra& a);

struct YamanouchiVerdict {
  bool preconditionsHold = false;
  bool hypothesisHolds = false;
  /// solveAntipode returned exactly S and the instance classified as weak Hopf.
  bool confirmed = false;
  std::optional<Witness> failure;
  std::optional<Vector> l, r;
};
/// Checks a⁽¹⁾λ(ba⁽²⁾) = S(b⁽¹⁾)λ(b⁽²⁾a) for a bialgebra anti-automorphism S and nondegenerate λ.
YamanouchiVerdict yamanouchiCheck(const WeakBialgebra& a, const Matrix& s, const Vector& lambda);

}  // namespace wba
