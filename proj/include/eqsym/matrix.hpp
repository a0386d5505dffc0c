#pragma once

// Dense matrices over Q with GMP rationals.
//
// Conventions used throughout the library: vectors are rows, a linear
// map acts on the right (v -> v * A), and bilinear forms evaluate as
// v * Omega * w^T.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eqsym {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" rendering (denominator always present).
std::string to_pq_string(const Rational& value);

/// Height of p/q in lowest terms: max(|p|, q).
std::size_t rational_height(const Rational& value);

/// num/den in lowest terms.
Rational make_rational(long num, long den);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix row_vector(std::span<const Rational> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vector row_copy(std::size_t i) const;

  Matrix transpose() const;
  Matrix inverse() const;  // throws std::domain_error when singular
  Rational trace() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix select_rows(std::size_t first, std::size_t count) const;
  Matrix select_cols(std::size_t first, std::size_t count) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector operator*(std::span<const Rational> v, const Matrix& a);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
/// u * form * w^T
Rational bilinear(std::span<const Rational> u, const Matrix& form, std::span<const Rational> w);
bool is_zero_vector(std::span<const Rational> v);

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, long exponent);

}  // namespace eqsym
