#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wba/exactlin.hpp"

namespace wba {

/// A failed identity: which law, and the lexicographically first offending index tuple.
struct Witness {
  std::string law;
  std::vector<int> indices;
};

/// Finite-dimensional unital algebra given by structure constants e_i·e_j = Σ_k m(i,j,k) e_k.
class Algebra {
 public:
  Algebra() = default;
  /// products[i*n + j] holds e_i·e_j.
  Algebra(std::vector<std::string> labels, std::vector<Vector> products, Vector unit);

  /// K^n with orthogonal idempotents.
  static Algebra diagonal(int n, const std::string& prefix = "e");
  static Algebra matrixAlgebra(int n);
  /// Upper triangular 2×2 matrices, basis E11, E12, E22.
  static Algebra upperTriangular2();
  Algebra opposite() const;
  static Algebra tensor(const Algebra& a, const Algebra& b);

  int dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& product(int i, int j) const { return products_[static_cast<size_t>(i) * n_ + j]; }
  const Scalar& mult(int i, int j, int k) const { return product(i, j)[k]; }
  const Vector& unit() const { return unit_; }
  Vector basis(int i) const { return unitVector(n_, i); }

  Vector mul(const Vector& a, const Vector& b) const;
  /// Matrix of x ↦ e_i·x (resp. x·e_i).
  const Matrix& left(int i) const { return left_[i]; }
  const Matrix& right(int i) const { return right_[i]; }
  Matrix leftMul(const Vector& a) const;
  Matrix rightMul(const Vector& a) const;

  std::optional<Witness> checkAssociative() const;
  std::optional<Witness> checkUnit() const;
  bool isCommutative() const;

  bool isUnitalSubalgebra(const Subspace& s) const;
  Subspace productSpan(const Subspace& a, const Subspace& b) const;
  Subspace center() const;
  /// Elements commuting with all of s.
  Subspace centralizer(const Subspace& s) const;
  bool commute(const Subspace& a, const Subspace& b) const;
  /// Two-sided inverse of x, if any.
  std::optional<Vector> inverse(const Vector& x) const;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Vector> products_;
  Vector unit_;
  std::vector<Matrix> left_, right_;
};

/// f restricted to s is multiplicative from src to dst (order reversed when anti).
bool isMorphismOn(const Algebra& src, const Algebra& dst, const Matrix& f, const Subspace& s, bool anti);

}  // namespace wba
