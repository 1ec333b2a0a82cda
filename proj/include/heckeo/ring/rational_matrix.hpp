#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace heckeo {

using Rational = mpq_class;

/// Dense matrix over Q. Small sizes only (block computations, KL oracle);
/// everything is exact.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  QMatrix transpose() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& m);
  QMatrix column(std::size_t j) const { return block(0, j, rows_, 1); }

  /// Reduced row echelon form; pivot columns returned through `pivots`.
  QMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Columns form a basis of the kernel (free variables set to unit vectors
  /// in increasing order).
  QMatrix nullspace() const;
  /// Columns form a basis of the column space (pivot columns of *this).
  QMatrix column_space() const;
  /// Some X with (*this) X = b, free variables zero; nullopt if inconsistent.
  std::optional<QMatrix> solve(const QMatrix& b) const;
  /// Inverse of a square invertible matrix; throws std::domain_error otherwise.
  QMatrix inverse() const;

  std::string to_string() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& c, const QMatrix& a);

QMatrix kron(const QMatrix& a, const QMatrix& b);
QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);
QMatrix block_diag(const QMatrix& a, const QMatrix& b);

}  // namespace heckeo
