#include "gridhom/matrix.hpp"

#include <stdexcept>

namespace gridhom {

QMat QMat::identity(std::size_t n) {
  QMat I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

bool QMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMat: size mismatch in product");
  QMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("QMat: size mismatch in sum");
  QMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("QMat: size mismatch in difference");
  QMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMat QMat::scaled(const Rat& c) const {
  QMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

namespace {

// Row echelon reduction in place; returns the pivot columns.
std::vector<std::size_t> echelon(QMat& M) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
    std::size_t p = row;
    while (p < M.rows() && M.at(p, col) == 0) ++p;
    if (p == M.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M.at(p, j), M.at(row, j));
    const Rat inv = Rat(1) / M.at(row, col);
    for (std::size_t j = col; j < M.cols(); ++j) M.at(row, j) *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == row || M.at(i, col) == 0) continue;
      const Rat f = M.at(i, col);
      for (std::size_t j = col; j < M.cols(); ++j) M.at(i, j) -= f * M.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t QMat::rank() const {
  QMat copy = *this;
  return echelon(copy).size();
}

std::vector<std::vector<Rat>> QMat::kernel_basis() const {
  QMat copy = *this;
  const std::vector<std::size_t> pivots = echelon(copy);
  std::vector<char> is_pivot(cols_, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -copy.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> QMat::solve(const std::vector<Rat>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("QMat::solve: rhs size mismatch");
  QMat aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  const std::vector<std::size_t> pivots = echelon(aug);
  for (std::size_t c : pivots)
    if (c == cols_) return std::nullopt;  // a pivot in the rhs column: inconsistent
  std::vector<Rat> x(cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

bool same_row_space(const QMat& A, const QMat& B) {
  if (A.cols() != B.cols()) return false;
  const std::size_t ra = A.rank();
  const std::size_t rb = B.rank();
  if (ra != rb) return false;
  QMat stacked(A.rows() + B.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) stacked.at(i, j) = A.at(i, j);
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) stacked.at(A.rows() + i, j) = B.at(i, j);
  return stacked.rank() == ra;
}

ZMat ZMat::identity(std::size_t n) {
  ZMat I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

ZMat ZMat::transpose() const {
  ZMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ZMat ZMat::operator*(const ZMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("ZMat: size mismatch in product");
  ZMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

ZMat ZMat::scaled(const Int& c) const {
  ZMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

ZMat ZMat::power(unsigned e) const {
  if (rows_ != cols_) throw std::invalid_argument("ZMat::power: not square");
  ZMat result = identity(rows_);
  ZMat base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool ZMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

ZMat ZMat::inverse_unitriangular() const {
  if (rows_ != cols_) throw std::invalid_argument("ZMat: not square");
  for (std::size_t i = 0; i < rows_; ++i) {
    if (at(i, i) != 1) throw std::invalid_argument("ZMat: diagonal entry not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (at(i, j) != 0) throw std::invalid_argument("ZMat: not upper triangular");
  }
  // Column by column back substitution: X[i][c] = [i==c] - sum_{i<k<=c} A[i][k] X[k][c].
  ZMat X(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    X.at(c, c) = 1;
    for (std::size_t i = c; i-- > 0;) {
      Int s = 0;
      for (std::size_t k = i + 1; k <= c; ++k)
        if (at(i, k) != 0 && X.at(k, c) != 0) s += at(i, k) * X.at(k, c);
      X.at(i, c) = -s;
    }
  }
  return X;
}

QMat ZMat::to_rational() const {
  QMat r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = Rat(at(i, j));
  return r;
}

std::optional<std::vector<int>> solve_gf2(
    const std::vector<std::vector<int>>& rows, const std::vector<int>& rhs,
    std::size_t n_vars) {
  if (rows.size() != rhs.size())
    throw std::invalid_argument("solve_gf2: rhs size mismatch");
  std::vector<std::vector<char>> m(rows.size(), std::vector<char>(n_vars + 1, 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int v : rows[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n_vars)
        throw std::invalid_argument("solve_gf2: variable out of range");
      m[i][v] ^= 1;
    }
    m[i][n_vars] = static_cast<char>(rhs[i] & 1);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of_row;
  for (std::size_t col = 0; col < n_vars && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && !m[p][col]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != row && m[i][col])
        for (std::size_t j = col; j <= n_vars; ++j) m[i][j] ^= m[row][j];
    pivot_of_row.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m.size(); ++i)
    if (m[i][n_vars]) return std::nullopt;
  std::vector<int> x(n_vars, 0);
  for (std::size_t r = 0; r < pivot_of_row.size(); ++r) x[pivot_of_row[r]] = m[r][n_vars];
  return x;
}

}  // namespace gridhom
