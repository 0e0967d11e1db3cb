#include "symharm/symplectic.hpp"

#include "symharm/exact_linalg.hpp"

namespace symharm {

namespace {

Mask full_mask(int n) { return Mask((1u << n) - 1); }

// Flat-map matrix W: column i holds the coordinates of mu(e_i) = omega(., e_i)
// = -i(e_i)omega over the dual basis.
RatMatrix flat_matrix(const Form& omega) {
  int n = omega.n();
  RatMatrix w(static_cast<size_t>(n), static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Multivector ei = Multivector::basis_element(n, mask_bit(i));
    Form fi = contract(ei, omega) * Scalar(-1);
    for (const auto& [m, c] : fi.terms())
      w.at(size_t(indices_of(m)[0] - 1), size_t(i - 1)) = c;
  }
  return w;
}

// mu_k^{-1} of a basis form, given nu = W^{-1}: wedge of the nu-images of the
// 1-form factors.
Multivector mu_inverse_basis(const RatMatrix& nu, int n, Mask m) {
  Multivector acc = Multivector::basis_element(n, 0);
  for (int idx : indices_of(m)) {
    Multivector v(n, 1);
    for (int r = 1; r <= n; ++r) {
      const Scalar& c = nu.at(size_t(r - 1), size_t(idx - 1));
      if (c != 0) v.add_term(mask_bit(r), c);
    }
    acc = wedge(acc, v);
  }
  return acc;
}

Form top_power(const Form& omega) {
  int n = omega.n();
  if (n % 2 != 0) throw ValueError("odd-dimensional space has no volume pairing");
  int m = n / 2;
  Form top = Form::basis_element(n, 0, Scalar(1));
  Scalar fact(1);
  for (int i = 1; i <= m; ++i) {
    top = wedge(top, omega);
    fact *= i;
  }
  return top * (Scalar(1) / fact);
}

}  // namespace

Scalar pfaffian_coeff(const Form& omega) {
  if (omega.grade() != 2) throw ValueError("pfaffian of a non-2-form");
  if (omega.n() % 2 != 0) throw ValueError("pfaffian requires even dimension");
  return top_power(omega).coefficient(full_mask(omega.n()));
}

Multivector dual_bivector(const Form& omega) {
  const int n = omega.n();
  RatMatrix w = flat_matrix(omega);
  RatMatrix nu;
  try {
    nu = w.inverse();
  } catch (const ValueError&) {
    throw ValueError("degenerate form has no dual bivector");
  }
  Multivector pi(n, 2);
  for (const auto& [m, c] : omega.terms())
    pi = pi + mu_inverse_basis(nu, n, m) * c;
  return pi;
}

SymplecticForm make_symplectic(const CEDifferential& d, const Form& omega) {
  if (omega.grade() != 2) throw ValueError("symplectic form must have degree 2");
  if (omega.n() % 2 != 0) throw ValueError("symplectic form needs even dimension");
  if (!d.is_closed(omega)) throw ValueError("symplectic form must be closed");
  Scalar pf = pfaffian_coeff(omega);
  if (pf == 0) throw ValueError("degenerate 2-form is not symplectic");
  return SymplecticForm{omega, omega.n() / 2, pf};
}

OperatorAlgebra::OperatorAlgebra(const CEDifferential& d, const Form& omega)
    : d_(&d), n_(omega.n()), omega_(omega), pi_(omega.n(), 2) {
  if (n_ != d.n()) throw ValueError("operator algebra: dimension mismatch");
  if (n_ % 2 != 0) throw ValueError("operator algebra needs even dimension");
  pf_ = pfaffian_coeff(omega);
  if (pf_ == 0) throw ValueError("degenerate form");
  const Basis& basis = Basis::get(n_);

  RatMatrix w = flat_matrix(omega);
  RatMatrix nu = w.inverse();
  Form top = top_power(omega);

  pi_ = Multivector(n_, 2);
  for (const auto& [mm, c] : omega.terms())
    pi_ = pi_ + mu_inverse_basis(nu, n_, mm) * c;

  star_.resize(size_t(n_) + 3);
  lef_.resize(size_t(n_) + 3);
  lef_dual_.resize(size_t(n_) + 3);
  delta_.resize(size_t(n_) + 3);
  for (int k = n_ + 1; k <= n_ + 2; ++k) {
    star_[size_t(k)] = RatMatrix(0, 0);
    lef_[size_t(k)] = RatMatrix(0, 0);
    lef_dual_[size_t(k)] = RatMatrix(size_t(basis.dim(k - 2)), 0);
    delta_[size_t(k)] = RatMatrix(size_t(basis.dim(k - 1)), 0);
  }

  for (int k = 0; k <= n_; ++k) {
    const auto& masks = basis.masks(k);
    RatMatrix s(size_t(basis.dim(n_ - k)), masks.size());
    RatMatrix l(size_t(basis.dim(k + 2)), masks.size());
    RatMatrix ld(size_t(basis.dim(k - 2)), masks.size());
    for (size_t j = 0; j < masks.size(); ++j) {
      Form bj = Form::basis_element(n_, masks[j]);
      s.set_column(j, form_to_vector(contract(mu_inverse_basis(nu, n_, masks[j]), top)));
      if (k + 2 <= n_) l.set_column(j, form_to_vector(wedge(bj, omega)));
      if (k - 2 >= 0) ld.set_column(j, form_to_vector(contract(pi_, bj)));
    }
    star_[size_t(k)] = std::move(s);
    lef_[size_t(k)] = std::move(l);
    lef_dual_[size_t(k)] = std::move(ld);
  }
  for (int k = 0; k <= n_; ++k) {
    // delta = (-1)^{k+1} * d * : Lambda^k -> Lambda^{k-1}.
    if (k == 0) {
      delta_[0] = RatMatrix(0, 1);
      continue;
    }
    RatMatrix comp = star_[size_t(n_ - k + 1)] * d_->matrix(n_ - k) * star_[size_t(k)];
    delta_[size_t(k)] = (k % 2 == 0) ? comp.scaled(Scalar(-1)) : comp;
  }
}

RatMatrix OperatorAlgebra::lef_dual_via_star(int k) const {
  if (k < 2) return RatMatrix(size_t(Basis::get(n_).dim(k - 2)), star_[size_t(k)].cols());
  return star_[size_t(n_ - k + 2)] * lef_[size_t(n_ - k)] * star_[size_t(k)];
}

Form OperatorAlgebra::apply(const RatMatrix& m, const Form& a, int out_grade) const {
  return vector_to_form(n_, out_grade, m.apply(form_to_vector(a)));
}

Form star(const Form& omega, const Form& a) {
  if (omega.n() != a.n()) throw ValueError("star: dimension mismatch");
  RatMatrix w = flat_matrix(omega);
  RatMatrix nu;
  try {
    nu = w.inverse();
  } catch (const ValueError&) {
    throw ValueError("star of a degenerate form");
  }
  Form top = top_power(omega);
  Form out(a.n(), a.n() - a.grade());
  for (const auto& [m, c] : a.terms())
    out = out + contract(mu_inverse_basis(nu, a.n(), m), top) * c;
  return out;
}

Form lefschetz(const Form& omega, const Form& a) { return wedge(a, omega); }

Form lefschetz_dual(const Form& omega, const Form& a) {
  return contract(dual_bivector(omega), a);
}

MixedForm operator_grading(const MixedForm& a) {
  if (a.n() % 2 != 0) throw ValueError("grading operator needs even dimension");
  int m = a.n() / 2;
  MixedForm out(a.n());
  for (const auto& [k, f] : a.components())
    out.set_component(f * Scalar(m - k));
  return out;
}

Form delta(const CEDifferential& d, const Form& omega, const Form& a) {
  int k = a.grade();
  Form s = star(omega, a);
  Form ds = d.apply(s);
  Form out = star(omega, ds);
  return (k % 2 == 0) ? -out : out;
}

Scalar bivector_pairing(const Multivector& pi, const Form& b, const Form& a) {
  if (a.grade() != b.grade()) throw ValueError("pairing grade mismatch");
  const int n = pi.n();
  // 1-form pairing P(a_i, a_j) = Pi_{ji} (transposed coefficients); this is
  // the normalization under which b ^ (*a) = pairing(b, a) omega^m/m!.
  RatMatrix p(static_cast<size_t>(n), static_cast<size_t>(n));
  for (const auto& [m, c] : pi.terms()) {
    auto ij = indices_of(m);
    p.at(size_t(ij[1] - 1), size_t(ij[0] - 1)) = c;
    p.at(size_t(ij[0] - 1), size_t(ij[1] - 1)) = -c;
  }
  Scalar acc(0);
  for (const auto& [mb, cb] : b.terms())
    for (const auto& [ma, ca] : a.terms()) {
      auto bi = indices_of(mb);
      auto ai = indices_of(ma);
      size_t k = bi.size();
      RatMatrix sub(k, k);
      for (size_t r = 0; r < k; ++r)
        for (size_t c2 = 0; c2 < k; ++c2)
          sub.at(r, c2) = p.at(size_t(bi[r] - 1), size_t(ai[c2] - 1));
      // determinant by elimination
      RatMatrix tri = sub;
      Scalar det(1);
      bool zero = false;
      for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && tri.at(piv, col) == 0) ++piv;
        if (piv == k) {
          zero = true;
          break;
        }
        if (piv != col) {
          for (size_t j = 0; j < k; ++j) std::swap(tri.at(piv, j), tri.at(col, j));
          det = -det;
        }
        det *= tri.at(col, col);
        for (size_t r = col + 1; r < k; ++r) {
          if (tri.at(r, col) == 0) continue;
          Scalar f = tri.at(r, col) / tri.at(col, col);
          for (size_t j = col; j < k; ++j) tri.at(r, j) -= f * tri.at(col, j);
        }
      }
      if (!zero) acc += cb * ca * det;
    }
  return acc;
}

Form SymplecticCone::form_at(const std::vector<Scalar>& coords) const {
  if (coords.size() != z2_basis.size())
    throw ValueError("cone coordinate arity mismatch");
  if (z2_basis.empty()) throw ValueError("empty cone basis");
  Form f(z2_basis[0].n(), 2);
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) f = f + z2_basis[i] * coords[i];
  return f;
}

MultiPoly pfaffian_cubic_over(const std::vector<Form>& basis) {
  int nvars = int(basis.size());
  MultiPoly cubic(nvars);
  if (basis.empty()) return cubic;
  for (int i = 0; i < nvars; ++i)
    for (int j = i; j < nvars; ++j) {
      Form wij = wedge(basis[size_t(i)], basis[size_t(j)]);
      if (wij.is_zero()) continue;
      for (int k = j; k < nvars; ++k) {
        Scalar t = wedge(wij, basis[size_t(k)])
                       .coefficient(full_mask(basis[0].n()));
        if (t == 0) continue;
        // Multinomial weight of c_i c_j c_k in (sum c z)^3 / 3!.
        Scalar weight = (i == j && j == k) ? Scalar(1, 6)
                        : (i == j || j == k) ? Scalar(1, 2)
                                             : Scalar(1);
        std::vector<int> e(size_t(nvars), 0);
        ++e[size_t(i)];
        ++e[size_t(j)];
        ++e[size_t(k)];
        cubic.add_term(e, t * weight);
      }
    }
  return cubic;
}

SymplecticCone symplectic_cone(const CEDifferential& d) {
  const int n = d.n();
  if (n % 2 != 0) throw ValueError("symplectic cone needs even dimension");
  const Basis& basis = Basis::get(n);
  SymplecticCone cone{{}, MultiPoly(0)};

  // Deterministic integer kernel basis of d_2 when the differential is
  // integral (always the case for parsed structure notation); rational
  // fallback otherwise.
  const RatMatrix& d2 = d.matrix(2);
  try {
    IntMat ki = int_kernel_rows(clear_denominators(d2));
    for (int r = 0; r < ki.rows; ++r) {
      std::vector<Scalar> v(size_t(ki.cols));
      for (int j = 0; j < ki.cols; ++j) v[size_t(j)] = ki.at(r, j);
      cone.z2_basis.push_back(vector_to_form(n, 2, v));
    }
  } catch (const OverflowDetected&) {
    RatMatrix k = d2.kernel();
    for (size_t j = 0; j < k.cols(); ++j) {
      std::vector<Scalar> v(size_t(basis.dim(2)));
      for (size_t i = 0; i < v.size(); ++i) v[i] = k.at(i, j);
      cone.z2_basis.push_back(vector_to_form(n, 2, v));
    }
  }
  cone.pfaffian_cubic = pfaffian_cubic_over(cone.z2_basis);
  return cone;
}

ExistenceResult symplectic_existence(const SymplecticCone& cone) {
  if (cone.pfaffian_cubic.is_zero()) return {false, {}};
  const int nvars = cone.dim();
  // The cubic has per-variable degree <= 3, so it cannot vanish on a grid
  // with four distinct values per axis; scanning supports of size <= 3
  // restricted to the variables of any nonzero monomial must succeed.
  const int digits[4] = {1, -1, 2, -2};
  for (int s = 1; s <= std::min(3, nvars); ++s) {
    std::vector<int> sub(static_cast<size_t>(s), 0);
    for (int i = 0; i < s; ++i) sub[size_t(i)] = i;
    while (true) {
      std::vector<int> digit(size_t(s), 0);
      while (true) {
        std::vector<Scalar> x(size_t(nvars), Scalar(0));
        for (int i = 0; i < s; ++i)
          x[size_t(sub[size_t(i)])] = digits[digit[size_t(i)]];
        if (cone.pf_at(x) != 0) return {true, x};
        int t = s - 1;
        while (t >= 0 && digit[size_t(t)] == 3) {
          digit[size_t(t)] = 0;
          --t;
        }
        if (t < 0) break;
        ++digit[size_t(t)];
      }
      int t = s - 1;
      while (t >= 0 && sub[size_t(t)] == nvars - (s - t)) --t;
      if (t < 0) break;
      ++sub[size_t(t)];
      for (int u = t + 1; u < s; ++u) sub[size_t(u)] = sub[size_t(u - 1)] + 1;
    }
  }
  throw Error("nonzero Pfaffian cubic with no small witness");  // unreachable
}

int moduli_dimension(const SymplecticCone& cone) {
  if (cone.pfaffian_cubic.is_zero())
    throw ValueError("no symplectic structure: moduli dimension undefined");
  return cone.dim();
}

}  // namespace symharm
