#include "symharm/suite.hpp"

#include "symharm/rng.hpp"

namespace symharm {

namespace {

Form embed_shift(const Form& f, int n_to, int shift) {
  Form out(n_to, f.grade());
  for (const auto& [m, c] : f.terms()) out.add_term(Mask(m << shift), c);
  return out;
}

Form random_symplectic_abelian(Rng& rng, int n) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Form omega = random_form(rng, n, 2, 3);
    if (!omega.is_zero() && pfaffian_coeff(omega) != 0) return omega;
  }
  throw Error("failed to draw a nondegenerate 2-form");
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<CheckResult> operator_suite(const LieAlgebraSpec& spec,
                                        const Form& omega, std::uint64_t seed) {
  std::vector<CheckResult> out;
  auto check = [&](const std::string& name, bool pass, std::string detail = "") {
    out.push_back({name, pass, std::move(detail)});
  };

  const int n = spec.n();
  const int m = n / 2;
  CEDifferential d(spec);
  OperatorAlgebra ops(d, omega);
  const Basis& basis = Basis::get(n);
  Rng rng(seed ^ 0x0bef5a11ull);

  // ** = id on every grade.
  {
    bool ok = true;
    for (int k = 0; k <= n; ++k)
      ok = ok && ops.star(n - k) * ops.star(k) == RatMatrix::identity(size_t(basis.dim(k)));
    check("star_involution", ok);
  }

  // Dimension-2 anchors: *a = -a on 1-forms, *eta = 1, *1 = eta, for the
  // standard form and a rescaling.
  {
    LieAlgebraSpec plane = LieAlgebraSpec::parse("(0,0)");
    bool ok = true;
    for (int ci : {1, int(rng.range(1, 9))}) {
      Form eta = Form::basis_element(2, 0b11, Scalar(ci));
      Form one = Form::basis_element(2, 0, Scalar(1));
      ok = ok && star(eta, one) == eta;
      ok = ok && star(eta, eta) == one;
      for (int i = 1; i <= 2; ++i) {
        Form ai = Form::basis_element(2, mask_bit(i));
        ok = ok && star(eta, ai) == -ai;
      }
      Form beta = random_form(rng, 2, 1, 9);
      ok = ok && star(eta, beta) == -beta;
    }
    (void)plane;
    check("dim2_anchors", ok);
  }

  // Product rule across a 2+4 split.
  {
    Form eta1 = Form::basis_element(2, 0b11, Scalar(rng.range(1, 5)));
    Form eta2 = random_symplectic_abelian(rng, 4);
    Form eta = embed_shift(eta1, 6, 0) + embed_shift(eta2, 6, 2);
    bool ok = pfaffian_coeff(eta) != 0;
    for (int trial = 0; ok && trial < 12; ++trial) {
      int k1 = int(rng.range(0, 2)), k2 = int(rng.range(0, 4));
      Form a1 = random_form(rng, 2, k1, 5);
      Form a2 = random_form(rng, 4, k2, 5);
      Form lhs = star(eta, wedge(embed_shift(a1, 6, 0), embed_shift(a2, 6, 2)));
      Form rhs = wedge(embed_shift(star(eta1, a1), 6, 0),
                       embed_shift(star(eta2, a2), 6, 2));
      if ((k1 * k2) % 2) rhs = -rhs;
      ok = lhs == rhs;
    }
    check("product_rule_2_4", ok);
  }

  // sl(2) commutation relations as exact matrix identities.
  {
    bool ok = true;
    for (int k = 0; k <= n && ok; ++k) {
      size_t dk = size_t(basis.dim(k));
      RatMatrix bracket = ops.lef_dual(k + 2) * ops.lef(k);
      if (k >= 2) bracket = bracket - ops.lef(k - 2) * ops.lef_dual(k);
      ok = ok && bracket == RatMatrix::identity(dk).scaled(Scalar(m - k));
      // [A, L] = -2L and [A, L*] = 2L* with A = (m-k) per grade.
      RatMatrix al = ops.lef(k).scaled(Scalar(m - (k + 2)) - Scalar(m - k));
      ok = ok && al == ops.lef(k).scaled(Scalar(-2));
      RatMatrix als = ops.lef_dual(k).scaled(Scalar(m - (k - 2)) - Scalar(m - k));
      ok = ok && als == ops.lef_dual(k).scaled(Scalar(2));
    }
    check("sl2_relations", ok);
  }

  // L^k: Lambda^{m-k} -> Lambda^{m+k} is an isomorphism.
  {
    bool ok = true;
    for (int k = 0; k <= m; ++k) {
      RatMatrix p = RatMatrix::identity(size_t(basis.dim(m - k)));
      for (int g = m - k; g < m + k; g += 2) p = ops.lef(g) * p;
      ok = ok && p.rank() == size_t(binom(n, m - k));
    }
    check("lefschetz_power_isomorphisms", ok);
  }

  // delta^2 = 0.
  {
    bool ok = true;
    for (int k = 2; k <= n; ++k)
      ok = ok && (ops.delta(k - 1) * ops.delta(k)).is_zero();
    check("delta_squared_zero", ok);
  }

  // L* via the star equals contraction with the dual bivector.
  {
    bool ok = true;
    for (int k = 0; k <= n; ++k)
      ok = ok && ops.lef_dual(k) == ops.lef_dual_via_star(k);
    check("dual_lefschetz_two_routes", ok);
  }

  // delta as a commutator with i(Pi): with the bivector normalized so that
  // i(Pi) = *L*, the order that holds is delta = [d, i(Pi)].
  {
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      RatMatrix pid = ops.lef_dual(k + 1) * ops.dmat(k);
      RatMatrix dpi =
          k >= 2 ? ops.dmat(k - 2) * ops.lef_dual(k)
                 : RatMatrix(size_t(basis.dim(k - 1)), size_t(basis.dim(k)));
      RatMatrix bracket = dpi - pid;  // [d, i(Pi)]
      ok = ok && bracket == ops.delta(k);
    }
    check("delta_equals_bracket_d_ipi", ok);
  }

  // Pairing characterization: b ^ (*a) = <b, a>_Pi omega^m/m!.
  {
    Form top(n, n);
    {
      Form acc = Form::basis_element(n, 0, Scalar(1));
      Scalar fact(1);
      for (int i = 1; i <= m; ++i) {
        acc = wedge(acc, omega);
        fact *= i;
      }
      top = acc * (Scalar(1) / fact);
    }
    bool ok = true;
    for (int trial = 0; ok && trial < 10; ++trial) {
      int k = int(rng.range(0, n));
      Form a = random_form(rng, n, k, 4);
      Form b = random_form(rng, n, k, 4);
      Form lhs = wedge(b, ops.apply(ops.star(k), a, n - k));
      Form rhs = top * bivector_pairing(ops.bivector(), b, a);
      ok = lhs == rhs;
    }
    check("star_pairing_characterization", ok);
  }

  // delta(omega) = 0.
  check("delta_omega_zero",
        ops.apply(ops.delta(2), omega, 1).is_zero());

  // Invariant harmonic forms: L^k maps harmonic (m-k)-forms bijectively onto
  // harmonic (m+k)-forms.
  {
    bool ok = true;
    for (int k = 1; k <= m && ok; ++k) {
      RatMatrix low = d.matrix(m - k).vstack(ops.delta(m - k)).kernel();
      RatMatrix high = d.matrix(m + k).vstack(ops.delta(m + k)).kernel();
      RatMatrix p = RatMatrix::identity(size_t(basis.dim(m - k)));
      for (int g = m - k; g < m + k; g += 2) p = ops.lef(g) * p;
      RatMatrix image = p * low;
      ok = ok && image.rank() == low.cols() && low.cols() == high.cols();
      ok = ok && (d.matrix(m + k) * image).is_zero();
      ok = ok && (ops.delta(m + k) * image).is_zero();
      // image lands inside the harmonic subspace of degree m+k
      ok = ok && high.hstack(image).rank() == high.cols();
    }
    check("harmonic_isomorphism_invariant_forms", ok);
  }

  return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace symharm
