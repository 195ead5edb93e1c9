#include "wba/tensor.hpp"

#include <stdexcept>

namespace wba {

Tensor Tensor::fromVector(const Vector& v) {
  Tensor t(1);
  for (size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) t.terms_[{static_cast<int>(i)}] = v[i];
  return t;
}

Tensor Tensor::fromMatrix(const Matrix& m) {
  Tensor t(2);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) t.terms_[{i, j}] = m(i, j);
  return t;
}

void Tensor::add(const Key& k, const Scalar& c) {
  if (sgn(c) == 0) return;
  if (static_cast<int>(k.size()) != legs_) throw std::invalid_argument("tensor key has wrong length");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void Tensor::add(const Tensor& t, const Scalar& c) {
  for (const auto& [k, v] : t.terms_) add(k, c * v);
}

Matrix Tensor::toMatrix(int rows, int cols) const {
  if (legs_ != 2) throw std::invalid_argument("toMatrix needs two legs");
  Matrix m(rows, cols);
  for (const auto& [k, v] : terms_) m(k[0], k[1]) = v;
  return m;
}

Vector Tensor::toVector(int n) const {
  if (legs_ != 1) throw std::invalid_argument("toVector needs one leg");
  Vector v(static_cast<size_t>(n));
  for (const auto& [k, c] : terms_) v[k[0]] = c;
  return v;
}

Tensor Tensor::outer(const Tensor& o) const {
  Tensor r(legs_ + o.legs_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      Key k(k1);
      k.insert(k.end(), k2.begin(), k2.end());
      r.add(k, c1 * c2);
    }
  return r;
}

Tensor Tensor::applyLeg(int leg, const Matrix& f) const {
  Tensor r(legs_);
  for (const auto& [k, c] : terms_) {
    Key kk(k);
    for (int i = 0; i < f.rows(); ++i) {
      const Scalar& x = f(i, k[leg]);
      if (sgn(x) == 0) continue;
      kk[leg] = i;
      r.add(kk, c * x);
    }
  }
  return r;
}

Tensor Tensor::contractLeg(int leg, const Vector& phi) const {
  Tensor r(legs_ - 1);
  for (const auto& [k, c] : terms_) {
    const Scalar& x = phi[k[leg]];
    if (sgn(x) == 0) continue;
    Key kk(k);
    kk.erase(kk.begin() + leg);
    r.add(kk, c * x);
  }
  return r;
}

Tensor Tensor::permute(const std::vector<int>& perm) const {
  Tensor r(legs_);
  for (const auto& [k, c] : terms_) {
    Key kk(k.size());
    for (size_t i = 0; i < perm.size(); ++i) kk[i] = k[perm[i]];
    r.add(kk, c);
  }
  return r;
}

std::optional<Tensor::Key> Tensor::firstDifference(const Tensor& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) return a->first;
    if (a == terms_.end() || b->first < a->first) return b->first;
    if (a->second != b->second) return a->first;
    ++a;
    ++b;
  }
  return std::nullopt;
}

}  // namespace wba
