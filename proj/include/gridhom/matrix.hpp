#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gridhom/rational.hpp"

namespace gridhom {

// Dense matrix over the rationals.  Sizes in this project are small
// (hundreds of rows at the very most), so a plain row-major vector with
// textbook Gaussian elimination is entirely adequate and keeps every
// result exact.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const QMat& o) const = default;

  bool is_zero() const;
  QMat transpose() const;
  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Rat& c) const;

  // Rank via fraction-exact row reduction; the matrix itself is untouched.
  std::size_t rank() const;
  std::size_t nullity() const { return cols_ - rank(); }

  // A basis of the right kernel, one vector per column of the result.
  std::vector<std::vector<Rat>> kernel_basis() const;

  // Some solution x of Ax = b, or nullopt when the system is inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Row-space comparison: do the rows of A and B span the same subspace?
bool same_row_space(const QMat& A, const QMat& B);

// Dense integer matrix, used for zeta/Cartan data and K-theoretic powering
// where entries can outgrow machine words.
class ZMat {
 public:
  ZMat() = default;
  ZMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ZMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const ZMat& o) const = default;

  ZMat transpose() const;
  ZMat operator*(const ZMat& o) const;
  ZMat scaled(const Int& c) const;
  ZMat power(unsigned e) const;
  bool is_identity() const;

  // Inverse of an upper unitriangular matrix by back substitution.  The
  // caller guarantees at(i,j) == 0 for i > j and at(i,i) == 1; violating
  // that throws.  The inverse of such a matrix is again integral.
  ZMat inverse_unitriangular() const;

  QMat to_rational() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Solve a linear system over GF(2): rows are equations over the given
// number of variables, rhs holds one bit per equation.  Returns an
// assignment when consistent.
std::optional<std::vector<int>> solve_gf2(
    const std::vector<std::vector<int>>& rows, const std::vector<int>& rhs,
    std::size_t n_vars);

}  // namespace gridhom
