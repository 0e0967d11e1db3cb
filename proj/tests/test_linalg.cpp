#include <doctest.h>

#include "symharm/exact_linalg.hpp"
#include "symharm/rng.hpp"

using namespace symharm;

namespace {

RatMatrix from_rows(std::vector<std::vector<int>> rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntMat int_from_rows(std::vector<std::vector<i64>> rows) {
  IntMat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rows[i][j];
  return m;
}

IntMat random_int_matrix(Rng& rng, int r, int c, i64 bound) {
  IntMat m(r, c);
  for (auto& x : m.a) x = rng.range(-bound, bound);
  return m;
}

}  // namespace

TEST_CASE("rref, rank and kernel on a known matrix") {
  RatMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
  CHECK(m.rank() == 2);
  RatMatrix k = m.kernel();
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(m.row_space_basis().rows() == 2);
}

TEST_CASE("inverse and singular detection") {
  RatMatrix m = from_rows({{2, 1}, {1, 1}});
  RatMatrix inv = m.inverse();
  CHECK(m * inv == RatMatrix::identity(2));
  CHECK_THROWS_AS(from_rows({{1, 2}, {2, 4}}).inverse(), ValueError);
}

TEST_CASE("linear solver solves and rejects") {
  RatMatrix a = from_rows({{1, 0}, {1, 1}, {0, 2}});
  LinearSolver solver(a);
  std::vector<Scalar> b = {Scalar(3), Scalar(5), Scalar(4)};
  std::vector<Scalar> x = solver.solve(b);
  CHECK(a.apply(x) == b);
  std::vector<Scalar> outside = {Scalar(1), Scalar(0), Scalar(0)};
  CHECK(!solver.in_span(outside));
  CHECK_THROWS_AS(solver.solve(outside), ValueError);
  // the solution operator reproduces solve on in-span vectors
  RatMatrix op = solver.solution_rows(2);
  CHECK(op.apply(b) == x);
  // full column rank required
  CHECK_THROWS_AS(LinearSolver(from_rows({{1, 2}, {2, 4}})), ValueError);
}

TEST_CASE("integer rank and kernel agree with the rational path") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int r = int(rng.range(1, 12)), c = int(rng.range(1, 12));
    IntMat m = random_int_matrix(rng, r, c, 9);
    RatMatrix q = to_rational(m);
    size_t rank = q.rank();
    CHECK(int_rank(m) == int(rank));
    IntMat k = int_kernel_rows(m);
    CHECK(size_t(k.rows) == size_t(c) - rank);
    for (int v = 0; v < k.rows; ++v) {
      // each kernel row is annihilated, gcd-reduced, leading entry positive
      i64 lead = 0, g = 0;
      for (int j = 0; j < c; ++j) {
        if (lead == 0) lead = k.at(v, j);
        g = std::gcd(g, k.at(v, j) < 0 ? -k.at(v, j) : k.at(v, j));
      }
      CHECK(lead > 0);
      CHECK(g == 1);
      for (int i = 0; i < r; ++i) {
        i64 acc = 0;
        for (int j = 0; j < c; ++j) acc += m.at(i, j) * k.at(v, j);
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("integer product matches rational product") {
  Rng rng(6);
  IntMat a = random_int_matrix(rng, 7, 5, 50);
  IntMat b = random_int_matrix(rng, 5, 6, 50);
  CHECK(to_rational(int_mul(a, b)) == to_rational(a) * to_rational(b));
}

TEST_CASE("overflow falls back to arbitrary precision") {
  // Entries near 2^31 make 128-bit Bareiss products overflow quickly on a
  // dense 12x12 matrix, forcing the big-integer path; ranks must agree.
  Rng rng(9);
  IntMat m = random_int_matrix(rng, 12, 12, (i64(1) << 31));
  CHECK(int_rank(m) == int(to_rational(m).rank()));
}

TEST_CASE("denominator clearing preserves scale") {
  RatMatrix m(2, 2);
  m.at(0, 0) = Scalar(1, 2);
  m.at(0, 1) = Scalar(1, 3);
  m.at(1, 0) = Scalar(5);
  m.at(1, 1) = Scalar(-7, 6);
  BigInt scale;
  IntMat cleared = clear_denominators(m, &scale);
  CHECK(scale == 6);
  CHECK(to_rational(cleared) == m.scaled(Scalar(6)));
}

TEST_CASE("stack and transpose helpers") {
  RatMatrix a = from_rows({{1, 2}});
  RatMatrix b = from_rows({{3, 4}});
  CHECK(a.vstack(b) == from_rows({{1, 2}, {3, 4}}));
  CHECK(a.hstack(b) == from_rows({{1, 2, 3, 4}}));
  CHECK(a.transposed() == from_rows({{1}, {2}}));
}
