#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wba/exactlin.hpp"

namespace wba {

/// Sparse element of V_1⊗…⊗V_k, keyed by basis index tuples.
class Tensor {
 public:
  using Key = std::vector<int>;

  explicit Tensor(int legs = 0) : legs_(legs) {}
  static Tensor fromVector(const Vector& v);
  static Tensor fromMatrix(const Matrix& m);

  int legs() const { return legs_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  void add(const Key& k, const Scalar& c);
  void add(const Tensor& t, const Scalar& c = 1);

  Matrix toMatrix(int rows, int cols) const;
  Vector toVector(int n) const;

  /// Concatenation of legs (outer product).
  Tensor outer(const Tensor& o) const;
  /// Applies f (column j = image of basis j) to one leg.
  Tensor applyLeg(int leg, const Matrix& f) const;
  /// Pairs one leg with a functional and removes it.
  Tensor contractLeg(int leg, const Vector& phi) const;
  /// New leg order: result leg i is old leg perm[i].
  Tensor permute(const std::vector<int>& perm) const;

  bool operator==(const Tensor& o) const { return legs_ == o.legs_ && terms_ == o.terms_; }
  /// First key (lexicographically) where the two tensors differ.
  std::optional<Key> firstDifference(const Tensor& o) const;

 private:
  int legs_;
  std::map<Key, Scalar> terms_;
};

}  // namespace wba
