#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace wba {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p" or "p/q"; throws std::invalid_argument on anything else (including q = 0).
Scalar parseScalar(const std::string& text);
std::string toString(const Scalar& s);

Vector zeroVector(int n);
Vector unitVector(int n, int i);
bool isZero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);

/// Dense row-major rational matrix. Also used for linear maps (column j = image of e_j)
/// and for elements of A⊗B (entry (i,j) = coefficient of e_i⊗f_j).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix fromRows(int cols, const std::vector<Vector>& rows);
  static Matrix fromColumns(int rows, const std::vector<Vector>& cols);
  /// n×n matrix reshaped from a length n·m vector, (i,j) ↦ i·m + j.
  static Matrix reshape(const Vector& v, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  Vector row(int i) const;
  Vector col(int j) const;
  void setRow(int i, const Vector& v);
  void setCol(int j, const Vector& v);
  /// Row-major flattening, (i,j) ↦ i·cols + j.
  Vector flatten() const { return data_; }

  Matrix transpose() const;
  bool isZero() const;
  bool isIdentity() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  Matrix& operator+=(const Matrix& o);
  bool operator==(const Matrix& o) const = default;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product; index (i,j) ↦ i·b.rows() + j on rows, likewise on columns.
Matrix kron(const Matrix& a, const Matrix& b);

/// Reduced row-echelon form with zero rows removed.
Matrix rref(const Matrix& m, std::vector<int>* pivots = nullptr);
int rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

class Subspace {
 public:
  explicit Subspace(int ambient = 0);

  static Subspace whole(int n);
  static Subspace spanRows(const Matrix& rows);
  static Subspace spanVectors(int ambient, const std::vector<Vector>& vs);
  /// Column space of m.
  static Subspace image(const Matrix& m);
  /// {x : m·x = 0}.
  static Subspace kernel(const Matrix& m);

  int ambientDim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector vector(int i) const { return basis_.row(i); }
  std::vector<Vector> vectors() const;
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;
  /// Coordinates with respect to the stored basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  Subspace intersect(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  /// {x : <x, s> = 0 for all s}.
  Subspace annihilator() const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  int ambient_;
  Matrix basis_;
  std::vector<int> pivots_;
};

/// f(s) as a subspace of the codomain.
Subspace mapSubspace(const Matrix& f, const Subspace& s);
/// g∘f restricts to the identity on s.
bool leftInverseOn(const Matrix& f, const Matrix& g, const Subspace& s);

struct AffineSolution {
  Vector particular;
  Subspace kernel;
};

/// Solves a·x = b; nullopt means no solution.
std::optional<AffineSolution> solveAffine(const Matrix& a, const Vector& b);

/// For the Gram matrix q(i,j) = Q(e_i⊗f_j) of a pairing A1⊗A2 → K returns P with
/// P(j,i) the coefficient of f_j⊗e_i in the form-inverse, i.e. q·P = 1 and P·q = 1.
/// nullopt when the pairing is degenerate.
std::optional<Matrix> formInverse(const Matrix& q);

}  // namespace wba
