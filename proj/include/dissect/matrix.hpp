#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dissect/rational.hpp"

namespace dissect {

using Vec = std::vector<Rational>;

/// Dense matrix over the rationals. All operations are exact.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const Matrix& o) const = default;

  Matrix transposed() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  /// Row space basis in canonical reduced row echelon form, zero rows dropped.
  Matrix rref() const;

  std::size_t rank() const;
  std::optional<Matrix> inverse() const;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Linear subspace of Q^n, stored as an RREF basis so that equality of
/// subspaces is structural equality.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  /// Span of the given row vectors.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& rows);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
};

std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum_span(const Subspace& a, const Subspace& b);
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Sylvester inertia (pos, neg, null) of a symmetric matrix, by exact
/// congruence reduction.
struct Inertia {
  std::size_t pos = 0, neg = 0, null = 0;
  bool operator==(const Inertia&) const = default;
};
Inertia signature(const Matrix& m);

// Small vector helpers shared across modules.
Vec unit_vec(std::size_t n, std::size_t i);
Vec zero_vec(std::size_t n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
bool is_zero(const Vec& v);
/// Clears denominators, divides by the gcd, makes the first nonzero entry positive.
Vec primitive(const Vec& v);

}  // namespace dissect
