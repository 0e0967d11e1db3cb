#include "symharm/matrix.hpp"

namespace symharm {

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw ValueError("matrix product shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ValueError("matrix sum shape mismatch");
  RatMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  return *this + o.scaled(Scalar(-1));
}

RatMatrix RatMatrix::scaled(const Scalar& s) const {
  RatMatrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Scalar> RatMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw ValueError("matrix apply shape mismatch");
  std::vector<Scalar> r(rows_, Scalar(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

RatMatrix RatMatrix::hstack(const RatMatrix& o) const {
  if (rows_ != o.rows_) throw ValueError("hstack row mismatch");
  RatMatrix r(rows_, cols_ + o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

RatMatrix RatMatrix::vstack(const RatMatrix& o) const {
  if (cols_ != o.cols_) throw ValueError("vstack column mismatch");
  RatMatrix r(rows_ + o.rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (size_t i = 0; i < o.rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

RatMatrix RatMatrix::column(size_t j) const {
  RatMatrix r(rows_, 1);
  for (size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

void RatMatrix::set_column(size_t j, const std::vector<Scalar>& v) {
  if (v.size() != rows_) throw ValueError("set_column shape mismatch");
  for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::vector<size_t> RatMatrix::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t p = row;
    while (p < rows_ && at(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
    Scalar inv = Scalar(1) / at(row, col);
    for (size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const Scalar f = at(i, col);
      if (f == 0) continue;
      for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t RatMatrix::rank() const {
  RatMatrix m = *this;
  return m.rref().size();
}

RatMatrix RatMatrix::kernel() const {
  RatMatrix m = *this;
  std::vector<size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;
  size_t null_dim = cols_ - pivots.size();
  RatMatrix k(cols_, null_dim);
  size_t out = 0;
  for (size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    k.at(f, out) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], out) = -m.at(r, f);
    ++out;
  }
  return k;
}

RatMatrix RatMatrix::row_space_basis() const {
  RatMatrix m = *this;
  size_t r = m.rref().size();
  RatMatrix b(r, cols_);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < cols_; ++j) b.at(i, j) = m.at(i, j);
  return b;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw ValueError("inverse of non-square matrix");
  RatMatrix aug = hstack(identity(rows_));
  std::vector<size_t> pivots = aug.rref();
  if (pivots.size() != rows_) throw ValueError("matrix is singular");
  RatMatrix inv(rows_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

LinearSolver::LinearSolver(const RatMatrix& a)
    : rows_(a.rows()), cols_(a.cols()) {
  RatMatrix aug = a.hstack(RatMatrix::identity(rows_));
  std::vector<size_t> all_pivots = aug.rref();
  std::vector<size_t> pivots;
  for (size_t c : all_pivots)
    if (c < cols_) pivots.push_back(c);
  if (pivots.size() != cols_)
    throw ValueError("solver requires full column rank");
  elim_ = RatMatrix(rows_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < rows_; ++j) elim_.at(i, j) = aug.at(i, cols_ + j);
  pivot_row_of_col_.assign(cols_, 0);
  for (size_t r = 0; r < pivots.size(); ++r) pivot_row_of_col_[pivots[r]] = r;
}

std::vector<Scalar> LinearSolver::solve_impl(const std::vector<Scalar>& b,
                                             bool* consistent) const {
  if (b.size() != rows_) throw ValueError("solver rhs shape mismatch");
  std::vector<Scalar> c = elim_.apply(b);
  *consistent = true;
  for (size_t i = cols_; i < rows_; ++i)
    if (c[i] != 0) {
      *consistent = false;
      break;
    }
  std::vector<Scalar> x(cols_, Scalar(0));
  if (*consistent)
    for (size_t col = 0; col < cols_; ++col) x[col] = c[pivot_row_of_col_[col]];
  return x;
}

std::vector<Scalar> LinearSolver::solve(const std::vector<Scalar>& b) const {
  bool ok = false;
  std::vector<Scalar> x = solve_impl(b, &ok);
  if (!ok) throw ValueError("right-hand side not in column span");
  return x;
}

bool LinearSolver::in_span(const std::vector<Scalar>& b) const {
  bool ok = false;
  (void)solve_impl(b, &ok);
  return ok;
}

RatMatrix LinearSolver::solution_rows(size_t k) const {
  if (k > cols_) throw ValueError("solution_rows: too many unknowns requested");
  RatMatrix m(k, rows_);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < rows_; ++j)
      m.at(i, j) = elim_.at(pivot_row_of_col_[i], j);
  return m;
}

}  // namespace symharm
