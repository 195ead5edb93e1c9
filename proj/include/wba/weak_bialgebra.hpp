#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wba/algebra.hpp"
#include "wba/exactlin.hpp"
#include "wba/tensor.hpp"

namespace wba {

enum Side { L = 0, R = 1 };

/// Structure-constant weak bialgebra. The constructor only checks shapes; use validate().
class WeakBialgebra {
 public:
  WeakBialgebra() = default;
  /// coproducts[k] is Δ(e_k) as an n×n coefficient matrix.
  WeakBialgebra(Algebra algebra, std::vector<Matrix> coproducts, Vector counit);

  int dim() const { return alg_.dim(); }
  const Algebra& algebra() const { return alg_; }
  const std::vector<std::string>& labels() const { return alg_.labels(); }
  const Vector& one() const { return alg_.unit(); }
  const Vector& counit() const { return counit_; }
  const Matrix& coproduct(int k) const { return coproducts_[k]; }
  const Scalar& comult(int k, int i, int j) const { return coproducts_[k](i, j); }
  Vector basis(int i) const { return unitVector(dim(), i); }

  Vector mul(const Vector& a, const Vector& b) const { return alg_.mul(a, b); }
  Matrix leftMul(const Vector& a) const { return alg_.leftMul(a); }
  Matrix rightMul(const Vector& a) const { return alg_.rightMul(a); }
  Matrix comul(const Vector& a) const;
  Scalar eps(const Vector& a) const { return dot(counit_, a); }

  /// Δ(1) as an n×n coefficient matrix.
  const Matrix& deltaOne() const { return deltaOne_; }
  /// gram()(a,b) = ε(e_a e_b).
  const Matrix& gram() const { return gram_; }

  /// Product in A⊗A of coefficient matrices.
  Matrix tensorMul(const Matrix& x, const Matrix& y) const;
  /// Legwise product in A^{⊗k}.
  Tensor tensorMul(const Tensor& x, const Tensor& y) const;
  /// Δ^{(legs-1)}(x) with `legs` tensor factors.
  Tensor iteratedCoproduct(const Vector& x, int legs) const;
  /// Applies Δ to one leg of a tensor.
  Tensor coproductOnLeg(const Tensor& t, int leg) const;

  /// Opposite multiplication, same coalgebra.
  WeakBialgebra opposite() const;
  /// Same algebra, flipped coproduct.
  WeakBialgebra coopposite() const;
  /// Structure after the change of basis e'_j = Σ_i t(i,j) e_i.
  WeakBialgebra changeBasis(const Matrix& t) const;

  bool operator==(const WeakBialgebra& o) const;

 private:
  Algebra alg_;
  std::vector<Matrix> coproducts_;
  Vector counit_;
  Matrix deltaOne_, gram_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Witness> violations;
};

/// Checks associativity, unit, coassociativity, counit and multiplicativity of Δ.
ValidationReport validate(const WeakBialgebra& a, int witnessLimit = 1);

/// Â with mult = transpose of comult and vice versa. Labels get a trailing '^' toggled.
WeakBialgebra dual(const WeakBialgebra& a);
/// Direct sum of two weak bialgebras.
WeakBialgebra directSum(const WeakBialgebra& a, const WeakBialgebra& b);

/// a ⇀ φ = φ⁽¹⁾⟨φ⁽²⁾|a⟩, i.e. the functional x ↦ φ(xa).
Vector actLeft(const WeakBialgebra& A, const Vector& a, const Vector& phi);
/// φ ↼ a, the functional x ↦ φ(ax).
Vector actRight(const WeakBialgebra& A, const Vector& phi, const Vector& a);
/// φ ⇀ a = a⁽¹⁾φ(a⁽²⁾) and a ↼ φ = φ(a⁽¹⁾)a⁽²⁾.
Vector hitLeft(const WeakBialgebra& A, const Vector& phi, const Vector& a);
Vector hitRight(const WeakBialgebra& A, const Vector& a, const Vector& phi);

/// ε_L, ε_R : A → Â and ε̂_L, ε̂_R : Â → A.
struct EpsMaps {
  Matrix epsL, epsR, hatL, hatR;
};
EpsMaps epsSigma(const WeakBialgebra& a);

/// proj[σ][σ′] = ε_σσ′ = ε̂_σ∘ε_σ′ on A.
struct Projectors {
  std::array<std::array<Matrix, 2>, 2> proj;
  const Matrix& operator()(Side s, Side t) const { return proj[s][t]; }
};
Projectors epsProjectors(const WeakBialgebra& a);

struct Distinguished {
  Subspace AL, AR, hatAL, hatAR;
  std::array<std::array<Subspace, 2>, 2> Ass;  // A_σσ′ = ε_σσ′(A)
  const Subspace& A(Side s) const { return s == L ? AL : AR; }
  const Subspace& hatA(Side s) const { return s == L ? hatAL : hatAR; }
};
Distinguished distinguishedSubspaces(const WeakBialgebra& a);

/// N[σ][σ′] as kernels of their defining conditions.
struct FixedPoints {
  std::array<std::array<Subspace, 2>, 2> N;
  const Subspace& operator()(Side s, Side t) const { return N[s][t]; }
};
FixedPoints fixedPointSubalgebras(const WeakBialgebra& a);

/// Condition matrix (n² × n) whose kernel is N_σσ′.
Matrix fixedPointCondition(const WeakBialgebra& a, Side s, Side t);

struct AxiomReport {
  bool weakBialgebra = false;
  bool leftMonoidal = false, rightMonoidal = false;
  bool leftComonoidal = false, rightComonoidal = false;
  bool monoidal = false, comonoidal = false, bimonoidal = false;
  bool bszL = false, bszR = false;
  bool minimal = false, cominimal = false;
  int dimAL = 0, dimAR = 0, dimALcapAR = 0;
  std::array<std::array<int, 2>, 2> dimsAssp{};
  std::array<std::array<int, 2>, 2> dimsN{};
  std::vector<Witness> witnesses;
};

std::optional<Witness> checkLeftMonoidal(const WeakBialgebra& a);
std::optional<Witness> checkRightMonoidal(const WeakBialgebra& a);
std::optional<Witness> checkLeftComonoidal(const WeakBialgebra& a);
std::optional<Witness> checkRightComonoidal(const WeakBialgebra& a);
std::optional<Witness> checkBszL(const WeakBialgebra& a);
std::optional<Witness> checkBszR(const WeakBialgebra& a);
/// Comonoidal and A = A_L A_R.
bool isMinimal(const WeakBialgebra& a);

/// The six alternative forms of left (right) monoidality; index 0..5 in the order
/// dual-coproduct form, coproduct-ε_L form, ε_RR (ε_LR) form, dual-ε̂_RR form, ε_R form, ε_LL (ε_RL) form.
std::array<bool, 6> monoidalityForms(const WeakBialgebra& a, Side side);

AxiomReport decideAxioms(const WeakBialgebra& a);

/// x ∈ U⊗V (columns in U, rows in V).
bool tensorIn(const Matrix& x, const Subspace& first, const Subspace& second);

/// Convenience predicates used all over.
bool subspaceCommute(const WeakBialgebra& a, const Subspace& x, const Subspace& y);
bool isGroupLike(const Matrix& deltaOne, const Vector& one);

}  // namespace wba
