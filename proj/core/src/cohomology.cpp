#include "symharm/cohomology.hpp"

namespace symharm {

CohomologySpace::CohomologySpace(const LieAlgebraSpec& spec)
    : n_(spec.n()), spec_(spec), d_(spec) {
  const Basis& basis = Basis::get(n_);
  deg_.resize(size_t(n_) + 1);
  for (int k = 0; k <= n_; ++k) {
    Degree& deg = deg_[size_t(k)];
    size_t dim_k = size_t(basis.dim(k));

    // Exact forms: column space of d_{k-1}.
    RatMatrix image_rows =
        k == 0 ? RatMatrix(0, dim_k) : d_.matrix(k - 1).transposed().row_space_basis();
    deg.image_cols = image_rows.transposed();

    // Closed forms: kernel of d_k (Lambda^n is all closed).
    RatMatrix closed =
        k == n_ ? RatMatrix::identity(dim_k) : d_.matrix(k).kernel();

    // Complete the exact forms to a basis of the closed forms, scanning the
    // deterministic kernel basis in order.
    RatMatrix acc = image_rows;
    size_t rank = acc.rank();
    std::vector<size_t> chosen;
    for (size_t j = 0; j < closed.cols(); ++j) {
      RatMatrix cand = acc.vstack(closed.column(j).transposed());
      size_t r = cand.rank();
      if (r > rank) {
        acc = std::move(cand);
        rank = r;
        chosen.push_back(j);
      }
    }

    deg.rep_cols = RatMatrix(dim_k, chosen.size());
    for (size_t out = 0; out < chosen.size(); ++out) {
      std::vector<Scalar> v(dim_k);
      for (size_t i = 0; i < dim_k; ++i) v[i] = closed.at(i, chosen[out]);
      deg.rep_cols.set_column(out, v);
      deg.reps.push_back(vector_to_form(n_, k, v));
    }

    RatMatrix a = deg.rep_cols.hstack(deg.image_cols);
    deg.solver = std::make_unique<LinearSolver>(a);
    // reduce(x) is linear on closed forms; the representative coordinates
    // are the leading rows of the solver's solution operator.
    deg.reduction = deg.solver->solution_rows(chosen.size());
  }
}

int CohomologySpace::betti(int k) const {
  if (k < 0 || k > n_) return 0;
  return int(deg_[size_t(k)].reps.size());
}

const std::vector<Form>& CohomologySpace::representatives(int k) const {
  if (k < 0 || k > n_) throw ValueError("degree out of range");
  return deg_[size_t(k)].reps;
}

std::vector<Scalar> CohomologySpace::reduce(const Form& a) const {
  int k = a.grade();
  if (k < 0 || k > n_) throw ValueError("degree out of range");
  if (!d_.is_closed(a)) throw ValueError("form is not closed");
  const Degree& deg = deg_[size_t(k)];
  std::vector<Scalar> y = deg.solver->solve(form_to_vector(a));
  y.resize(deg.reps.size());
  return y;
}

const RatMatrix& CohomologySpace::reduction_matrix(int k) const {
  if (k < 0 || k > n_) throw ValueError("degree out of range");
  return deg_[size_t(k)].reduction;
}

const RatMatrix& CohomologySpace::exact_basis(int k) const {
  if (k < 0 || k > n_) throw ValueError("degree out of range");
  return deg_[size_t(k)].image_cols;
}

bool euler_check(const CohomologySpace& H) {
  long long chi = 0;
  for (int k = 0; k <= H.n(); ++k) chi += (k % 2 ? -1 : 1) * H.betti(k);
  if (chi != 0) return false;
  if (H.n() == 6)
    return H.betti(3) == 2 * (H.betti(2) - H.betti(1) + 1);
  return true;
}

RatMatrix cup_matrix(const CohomologySpace& H, const Form& c, int k, int r) {
  if (c.grade() != 2) throw ValueError("cup form must have degree 2");
  if (!H.differential().is_closed(c)) throw ValueError("cup form must be closed");
  if (r < 0) throw ValueError("negative cup power");
  size_t b_k = size_t(H.betti(k));
  if (r == 0) return RatMatrix::identity(b_k);
  int target = k + 2 * r;
  if (target > H.n()) return RatMatrix(0, b_k);

  Form cpow = c;
  for (int i = 1; i < r; ++i) cpow = wedge(cpow, c);

  RatMatrix m(size_t(H.betti(target)), b_k);
  for (size_t j = 0; j < b_k; ++j) {
    Form w = wedge(H.representatives(k)[j], cpow);
    m.set_column(j, H.reduce(w));
  }
  return m;
}

}  // namespace symharm
