#include "wba/algebra.hpp"

#include <stdexcept>

namespace wba {

Algebra::Algebra(std::vector<std::string> labels, std::vector<Vector> products, Vector unit)
    : n_(static_cast<int>(unit.size())), labels_(std::move(labels)), products_(std::move(products)),
      unit_(std::move(unit)) {
  if (static_cast<int>(labels_.size()) != n_) throw std::invalid_argument("algebra: label count differs from dim");
  if (static_cast<int>(products_.size()) != n_ * n_) throw std::invalid_argument("algebra: product table size");
  for (const auto& p : products_)
    if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("algebra: product vector size");
  for (int i = 0; i < n_; ++i) {
    Matrix l(n_, n_), r(n_, n_);
    for (int j = 0; j < n_; ++j) {
      l.setCol(j, product(i, j));
      r.setCol(j, product(j, i));
    }
    left_.push_back(std::move(l));
    right_.push_back(std::move(r));
  }
}

Algebra Algebra::diagonal(int n, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<Vector> prods;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prods.push_back(i == j ? unitVector(n, i) : zeroVector(n));
  Vector one(static_cast<size_t>(n), Scalar(1));
  return Algebra(labels, prods, one);
}

Algebra Algebra::matrixAlgebra(int n) {
  const int d = n * n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<Vector> prods;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      prods.push_back(a % n == b / n ? unitVector(d, (a / n) * n + b % n) : zeroVector(d));
  Vector one = zeroVector(d);
  for (int i = 0; i < n; ++i) one[i * n + i] = 1;
  return Algebra(labels, prods, one);
}

Algebra Algebra::upperTriangular2() {
  // b1 = E11, b2 = E12, b3 = E22
  std::vector<Vector> prods(9, zeroVector(3));
  prods[0 * 3 + 0] = unitVector(3, 0);
  prods[0 * 3 + 1] = unitVector(3, 1);
  prods[1 * 3 + 2] = unitVector(3, 1);
  prods[2 * 3 + 2] = unitVector(3, 2);
  return Algebra({"b1", "b2", "b3"}, prods, Vector{1, 0, 1});
}

Algebra Algebra::opposite() const {
  std::vector<Vector> prods;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) prods.push_back(product(j, i));
  return Algebra(labels_, prods, unit_);
}

Algebra Algebra::tensor(const Algebra& a, const Algebra& b) {
  const int na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) labels.push_back(a.labels()[i] + b.labels()[j]);
  std::vector<Vector> prods;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Vector& p = a.product(x / nb, y / nb);
      const Vector& q = b.product(x % nb, y % nb);
      Vector r = zeroVector(n);
      for (int i = 0; i < na; ++i) {
        if (sgn(p[i]) == 0) continue;
        for (int j = 0; j < nb; ++j)
          if (sgn(q[j]) != 0) r[i * nb + j] = p[i] * q[j];
      }
      prods.push_back(std::move(r));
    }
  Vector one = zeroVector(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) one[i * nb + j] = a.unit()[i] * b.unit()[j];
  return Algebra(labels, prods, one);
}

Vector Algebra::mul(const Vector& a, const Vector& b) const {
  Vector r = zeroVector(n_);
  Scalar c;
  for (int i = 0; i < n_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (sgn(b[j]) == 0) continue;
      c = a[i] * b[j];
      const Vector& p = product(i, j);
      for (int k = 0; k < n_; ++k)
        if (sgn(p[k]) != 0) r[k] += c * p[k];
    }
  }
  return r;
}

Matrix Algebra::leftMul(const Vector& a) const {
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    if (sgn(a[i]) != 0) m += a[i] * left_[i];
  return m;
}

Matrix Algebra::rightMul(const Vector& a) const {
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    if (sgn(a[i]) != 0) m += a[i] * right_[i];
  return m;
}

std::optional<Witness> Algebra::checkAssociative() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        Vector a = right_[k] * product(i, j);
        Vector b = left_[i] * product(j, k);
        if (a != b) return Witness{"associativity", {i, j, k}};
      }
    }
  return std::nullopt;
}

std::optional<Witness> Algebra::checkUnit() const {
  for (int i = 0; i < n_; ++i) {
    Vector e = basis(i);
    if (mul(unit_, e) != e || mul(e, unit_) != e) return Witness{"unit", {i}};
  }
  return std::nullopt;
}

bool Algebra::isCommutative() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

bool Algebra::isUnitalSubalgebra(const Subspace& s) const {
  if (!s.contains(unit_)) return false;
  auto vs = s.vectors();
  for (const auto& x : vs)
    for (const auto& y : vs)
      if (!s.contains(mul(x, y))) return false;
  return true;
}

Subspace Algebra::productSpan(const Subspace& a, const Subspace& b) const {
  std::vector<Vector> vs;
  for (const auto& x : a.vectors())
    for (const auto& y : b.vectors()) vs.push_back(mul(x, y));
  return Subspace::spanVectors(n_, vs);
}

Subspace Algebra::centralizer(const Subspace& s) const {
  auto vs = s.vectors();
  Matrix stacked(static_cast<int>(vs.size()) * n_, n_);
  for (size_t t = 0; t < vs.size(); ++t) {
    Matrix d = leftMul(vs[t]) - rightMul(vs[t]);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) stacked(static_cast<int>(t) * n_ + i, j) = d(i, j);
  }
  return Subspace::kernel(stacked);
}

Subspace Algebra::center() const { return centralizer(Subspace::whole(n_)); }

bool Algebra::commute(const Subspace& a, const Subspace& b) const {
  for (const auto& x : a.vectors())
    for (const auto& y : b.vectors())
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::optional<Vector> Algebra::inverse(const Vector& x) const {
  auto sol = solveAffine(leftMul(x), unit_);
  if (!sol) return std::nullopt;
  if (mul(sol->particular, x) != unit_) return std::nullopt;
  return sol->particular;
}

bool isMorphismOn(const Algebra& src, const Algebra& dst, const Matrix& f, const Subspace& s, bool anti) {
  std::vector<Vector> images;
  for (int i = 0; i < s.dim(); ++i) images.push_back(f * s.vector(i));
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      Vector lhs = f * src.mul(s.vector(i), s.vector(j));
      Vector rhs = anti ? dst.mul(images[j], images[i]) : dst.mul(images[i], images[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace wba
