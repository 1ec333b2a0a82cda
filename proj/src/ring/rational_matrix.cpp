#include "heckeo/ring/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace heckeo {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  QMatrix m(rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  QMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("matrix block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

QMatrix QMatrix::rref(std::vector<std::size_t>* pivots) const {
  QMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t QMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

QMatrix QMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  QMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  QMatrix k(cols_, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], f) = -r(i, free[f]);
  }
  return k;
}

QMatrix QMatrix::column_space() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  QMatrix out(rows_, piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) out(i, k) = (*this)(i, piv[k]);
  return out;
}

std::optional<QMatrix> QMatrix::solve(const QMatrix& b) const {
  if (b.rows_ != rows_) throw std::invalid_argument("solve: dimension mismatch");
  QMatrix aug = hstack(*this, b);
  std::vector<std::size_t> piv;
  QMatrix r = aug.rref(&piv);
  for (auto c : piv)
    if (c >= cols_) return std::nullopt;
  QMatrix x(cols_, b.cols_);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) x(piv[i], j) = r(i, cols_ + j);
  return x;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
  auto x = solve(identity(rows_));
  if (!x || rank() != rows_) throw std::domain_error("matrix is singular");
  return *x;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator-(const QMatrix& a) { return Rational(-1) * a; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  QMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  QMatrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

}  // namespace heckeo
