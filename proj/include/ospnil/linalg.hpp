#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ospnil {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense row-major matrix over Q.  Value type; all arithmetic is exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix column(std::size_t j) const;
  Matrix power(unsigned k) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

// Fraction-free (Bareiss) elimination on the row-wise integer rescaling of m.
std::size_t rank(const Matrix& m);
inline std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

/// Reduced row echelon form; zero rows are dropped.  `pivots` receives the pivot columns.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Columns form a basis of {x : m x = 0}, in the standard free-variable order.
Matrix kernel_basis(const Matrix& m);

/// Throws DomainError when m is singular.
Matrix inverse(const Matrix& m);

std::string to_string(const Rational& q);
/// Accepts "p", "p/q", "-p/q"; throws DomainError otherwise.
Rational parse_rational(std::string_view s);

std::string to_string(const Matrix& m);

}  // namespace ospnil
