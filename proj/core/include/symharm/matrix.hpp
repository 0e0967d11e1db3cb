#pragma once

#include "symharm/rational.hpp"

#include <cstddef>
#include <vector>

namespace symharm {

// Dense matrix over the exact rational scalar. Row-major; matrices act on
// coordinate column vectors.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  static RatMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Scalar& s) const;
  RatMatrix transposed() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  // [this | o] side by side (same row count).
  RatMatrix hstack(const RatMatrix& o) const;
  // [this; o] stacked (same column count).
  RatMatrix vstack(const RatMatrix& o) const;

  RatMatrix column(size_t j) const;
  void set_column(size_t j, const std::vector<Scalar>& v);

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref();

  size_t rank() const;
  // Columns form a basis of the kernel, derived from the RREF with free
  // variables set to unit values (deterministic given the column order).
  RatMatrix kernel() const;
  // Rows form the canonical (RREF) basis of the row space.
  RatMatrix row_space_basis() const;

  RatMatrix inverse() const;  // throws ValueError if singular

 private:
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Factors a matrix with full column rank once, then solves A x = b
// repeatedly. Used for cohomology reduction maps.
class LinearSolver {
 public:
  explicit LinearSolver(const RatMatrix& a);

  // Throws ValueError if b is not in the column span.
  std::vector<Scalar> solve(const std::vector<Scalar>& b) const;
  bool in_span(const std::vector<Scalar>& b) const;

  size_t unknowns() const { return cols_; }

  // Matrix M with M*b = first k entries of the solution, valid whenever
  // A x = b is solvable.
  RatMatrix solution_rows(size_t k) const;

 private:
  std::vector<Scalar> solve_impl(const std::vector<Scalar>& b,
                                 bool* consistent) const;
  size_t rows_, cols_;
  RatMatrix elim_;               // row operations: elim_ * A = echelon
  std::vector<size_t> pivot_row_of_col_;
};

}  // namespace symharm
