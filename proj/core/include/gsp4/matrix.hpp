#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gsp4/rational.hpp"

namespace gsp4 {

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q. Sizes in this library stay small (<= 64).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vector& d);
  static Matrix scalar(std::size_t n, const Rational& c);
  // Antidiagonal of ones (S_n).
  static Matrix antidiagonal(std::size_t n);
  // E_{ij} with 0-based indices.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Rational>& data() const { return a_; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Rational trace() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool is_scalar() const;
  bool is_upper_triangular() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Matrix a, const Rational& c);
Matrix operator*(const Rational& c, Matrix a);
Vector operator*(const Matrix& a, const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Vector& v, const Rational& c);

Matrix power(const Matrix& m, unsigned k);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix direct_sum(const std::vector<Matrix>& blocks);

// Row-major flattening; the coordinates used by linear constraints on matrices.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols);

Rational dot(const Vector& a, const Vector& b);
// v^T B w.
Rational bilinear(const Matrix& b, const Vector& v, const Vector& w);

}  // namespace gsp4
