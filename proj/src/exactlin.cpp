#include "wba/exactlin.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wba {

Scalar parseScalar(const std::string& text) {
  static const std::regex re(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("malformed scalar '" + text + "'");
  mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  mpz_class den = 1;
  if (m[2].matched) den = mpz_class(m[2].str());
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

std::string toString(const Scalar& s) { return s.get_str(); }

Vector zeroVector(int n) { return Vector(static_cast<size_t>(n)); }

Vector unitVector(int n, int i) {
  Vector v(static_cast<size_t>(n));
  v[i] = 1;
  return v;
}

bool isZero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  Vector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= c;
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::fromRows(int cols, const std::vector<Vector>& rows) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.setRow(static_cast<int>(i), rows[i]);
  return m;
}

Matrix Matrix::fromColumns(int rows, const std::vector<Vector>& cols) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.setCol(static_cast<int>(j), cols[j]);
  return m;
}

Matrix Matrix::reshape(const Vector& v, int rows, int cols) {
  if (static_cast<size_t>(rows) * cols != v.size()) throw std::invalid_argument("reshape: size mismatch");
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

Vector Matrix::row(int i) const {
  return Vector(data_.begin() + static_cast<long>(i) * cols_, data_.begin() + static_cast<long>(i + 1) * cols_);
}

Vector Matrix::col(int j) const {
  Vector v(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::setRow(int i, const Vector& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("setRow: size mismatch");
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::setCol(int j, const Vector& v) {
  if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("setCol: size mismatch");
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::isZero() const { return wba::isZero(data_); }

bool Matrix::isIdentity() const { return rows_ == cols_ && *this == identity(rows_); }

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r(*this);
  r += o;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) data_[i] += o.data_[i];
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
  std::vector<std::vector<int>> nz(static_cast<size_t>(o.rows_));
  for (int k = 0; k < o.rows_; ++k)
    for (int j = 0; j < o.cols_; ++j)
      if (sgn(o(k, j)) != 0) nz[k].push_back(j);
  Matrix r(rows_, o.cols_);
  Scalar t;
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (int j : nz[k]) {
        t = x * o(k, j);
        r(i, j) += t;
      }
    }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector: shape mismatch");
  Vector r(static_cast<size_t>(rows_));
  for (int k = 0; k < cols_; ++k) {
    if (sgn(v[k]) == 0) continue;
    for (int i = 0; i < rows_; ++i)
      if (sgn((*this)(i, k)) != 0) r[i] += (*this)(i, k) * v[k];
  }
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix r(m);
  for (auto& x : r.data_) x *= c;
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

namespace {

// In-place elimination; returns pivot columns. Rows beyond the rank are zero afterwards.
std::vector<int> eliminate(Matrix& m, int colLimit) {
  std::vector<int> pivots;
  int r = 0;
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> nz;
  Scalar f, t;
  for (int c = 0; c < colLimit && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(m(i, c)) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    nz.clear();
    Scalar inv = 1 / m(r, c);
    for (int j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) {
        m(r, j) *= inv;
        nz.push_back(j);
      }
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      f = m(i, c);
      for (int j : nz) {
        t = f * m(r, j);
        m(i, j) -= t;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix topRows(const Matrix& m, int k) {
  Matrix r(k, m.cols());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

}  // namespace

Matrix rref(const Matrix& m, std::vector<int>* pivots) {
  Matrix w(m);
  auto piv = eliminate(w, w.cols());
  if (pivots) *pivots = piv;
  return topRows(w, static_cast<int>(piv.size()));
}

int rank(const Matrix& m) {
  Matrix w(m);
  return static_cast<int>(eliminate(w, w.cols()).size());
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  Matrix w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = 1;
  }
  auto piv = eliminate(w, n);
  if (static_cast<int>(piv.size()) != n) return std::nullopt;
  Matrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = w(i, n + j);
  return r;
}

Subspace::Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::whole(int n) { return spanRows(Matrix::identity(n)); }

Subspace Subspace::spanRows(const Matrix& rows) {
  Subspace s(rows.cols());
  s.basis_ = rref(rows, &s.pivots_);
  return s;
}

Subspace Subspace::spanVectors(int ambient, const std::vector<Vector>& vs) {
  return spanRows(Matrix::fromRows(ambient, vs));
}

Subspace Subspace::image(const Matrix& m) { return spanRows(m.transpose()); }

Subspace Subspace::kernel(const Matrix& m) {
  std::vector<int> piv;
  Matrix r = rref(m, &piv);
  const int n = m.cols();
  std::vector<bool> isPivot(static_cast<size_t>(n), false);
  for (int p : piv) isPivot[p] = true;
  std::vector<Vector> vs;
  for (int f = 0; f < n; ++f) {
    if (isPivot[f]) continue;
    Vector v(static_cast<size_t>(n));
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(static_cast<int>(i), f);
    vs.push_back(std::move(v));
  }
  return spanVectors(n, vs);
}

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> vs;
  for (int i = 0; i < dim(); ++i) vs.push_back(basis_.row(i));
  return vs;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (static_cast<int>(v.size()) != ambient_) return std::nullopt;
  Vector c(static_cast<size_t>(dim()));
  Vector rest(v);
  for (int i = 0; i < dim(); ++i) {
    c[i] = v[pivots_[i]];
    if (sgn(c[i]) == 0) continue;
    for (int j = 0; j < ambient_; ++j)
      if (sgn(basis_(i, j)) != 0) rest[j] -= c[i] * basis_(i, j);
  }
  if (!wba::isZero(rest)) return std::nullopt;
  return c;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& o) const {
  for (int i = 0; i < o.dim(); ++i)
    if (!contains(o.vector(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vector> vs = vectors();
  for (auto& v : o.vectors()) vs.push_back(v);
  return spanVectors(ambient_, vs);
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("intersect: ambient mismatch");
  const int du = dim(), dv = o.dim();
  if (du == 0 || dv == 0) return Subspace(ambient_);
  // x·U = y·V  <=>  (x, -y) in the kernel of [U; V]^t
  Matrix m(ambient_, du + dv);
  for (int c = 0; c < ambient_; ++c) {
    for (int i = 0; i < du; ++i) m(c, i) = basis_(i, c);
    for (int i = 0; i < dv; ++i) m(c, du + i) = o.basis_(i, c);
  }
  std::vector<Vector> vs;
  for (const auto& k : kernel(m).vectors()) {
    Vector v(static_cast<size_t>(ambient_));
    for (int i = 0; i < du; ++i)
      if (sgn(k[i]) != 0)
        for (int c = 0; c < ambient_; ++c) v[c] += k[i] * basis_(i, c);
    vs.push_back(std::move(v));
  }
  return spanVectors(ambient_, vs);
}

Subspace mapSubspace(const Matrix& f, const Subspace& s) {
  std::vector<Vector> vs;
  for (int i = 0; i < s.dim(); ++i) vs.push_back(f * s.vector(i));
  return Subspace::spanVectors(f.rows(), vs);
}

bool leftInverseOn(const Matrix& f, const Matrix& g, const Subspace& s) {
  for (int i = 0; i < s.dim(); ++i) {
    Vector v = s.vector(i);
    if (g * (f * v) != v) return false;
  }
  return true;
}

std::optional<AffineSolution> solveAffine(const Matrix& a, const Vector& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solveAffine: shape mismatch");
  const int n = a.cols();
  Matrix w(a.rows(), n + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j)
      if (sgn(a(i, j)) != 0) w(i, j) = a(i, j);
    w(i, n) = b[i];
  }
  auto piv = eliminate(w, n);
  for (int i = static_cast<int>(piv.size()); i < w.rows(); ++i)
    if (sgn(w(i, n)) != 0) return std::nullopt;
  Vector x(static_cast<size_t>(n));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = w(static_cast<int>(i), n);
  std::vector<bool> isPivot(static_cast<size_t>(n), false);
  for (int p : piv) isPivot[p] = true;
  std::vector<Vector> ker;
  for (int f = 0; f < n; ++f) {
    if (isPivot[f]) continue;
    Vector v(static_cast<size_t>(n));
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -w(static_cast<int>(i), f);
    ker.push_back(std::move(v));
  }
  return AffineSolution{std::move(x), Subspace::spanVectors(n, ker)};
}

std::optional<Matrix> formInverse(const Matrix& q) { return inverse(q); }

}  // namespace wba
