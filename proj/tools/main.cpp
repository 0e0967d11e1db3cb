#include "symharm/parallel.hpp"
#include "symharm/report.hpp"
#include "symharm/rng.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace symharm;

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 0;
  std::string budget = "2,5,10000";
  int jobs = 0;
  std::string omega;
};

void emit(const GlobalOptions& g, const Json& doc, const std::string& text) {
  if (g.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

Json z2_basis_json(const SymplecticCone& cone) {
  Json basis = Json::array();
  for (const Form& z : cone.z2_basis) basis.push_back(to_string(z));
  return basis;
}

int cmd_info(const GlobalOptions& g, const std::string& structure) {
  LieAlgebraSpec spec = LieAlgebraSpec::parse(structure);
  CohomologySpace H(spec);
  LowerCentralSeries lcs = lower_central_series(spec);
  SymplecticCone cone = symplectic_cone(H.differential());
  ExistenceResult ex = symplectic_existence(cone);

  Json betti = Json::array();
  for (int k = 0; k <= spec.n(); ++k) betti.push_back(H.betti(k));
  Json dims = Json::array();
  for (int d : lcs.dims) dims.push_back(d);
  Json results{{"dimension", spec.n()},
               {"betti", betti},
               {"step_length", lcs.step_length},
               {"six_minus_s", spec.n() == 6 ? Json(6 - lcs.step_length) : Json()},
               {"lower_central_dims", dims},
               {"symplectic", ex.exists},
               {"z2_basis", z2_basis_json(cone)},
               {"euler_check", euler_check(H)}};
  if (ex.exists) {
    results["moduli_dimension"] = moduli_dimension(cone);
    results["witness"] = to_json(ex.witness);
    Form w = cone.form_at(ex.witness);
    results["witness_form"] = to_string(w);
  }
  std::vector<std::string> names;
  for (int i = 0; i < cone.dim(); ++i) names.push_back("c" + std::to_string(i + 1));
  results["pfaffian_cubic"] = cone.pfaffian_cubic.to_string(names);

  std::ostringstream os;
  os << structure << "\n";
  os << "  betti:";
  for (int k = 0; k <= spec.n(); ++k) os << " b" << k << "=" << H.betti(k);
  os << "\n  step length: " << lcs.step_length;
  if (spec.n() == 6) os << "  (6-s = " << 6 - lcs.step_length << ")";
  os << "\n  symplectic: " << (ex.exists ? "yes" : "no") << "\n";
  if (ex.exists) {
    os << "  moduli dimension: " << moduli_dimension(cone) << "\n";
    os << "  witness: " << to_string(cone.form_at(ex.witness)) << "\n";
  }
  os << "  Z2 basis (omega coordinate order):\n";
  for (const Form& z : cone.z2_basis) os << "    " << to_string(z) << "\n";
  os << "  pfaffian cubic: " << cone.pfaffian_cubic.to_string(names) << "\n";

  emit(g, make_document("info", Json{{"structure", structure}}, results), os.str());
  return 0;
}

int cmd_h(const GlobalOptions& g, const std::string& structure) {
  if (g.omega.empty()) throw ParseError("--omega coordinates are required");
  LieAlgebraSpec spec = LieAlgebraSpec::parse(structure);
  CohomologySpace H(spec);
  SymplecticCone cone = symplectic_cone(H.differential());
  std::vector<Scalar> coords = parse_coords(g.omega);
  if (int(coords.size()) != cone.dim())
    throw ParseError("expected " + std::to_string(cone.dim()) +
                     " omega coordinates (see `info` for the basis)");
  Form omega = cone.form_at(coords);
  if (pfaffian_coeff(omega) == 0)
    throw ParseError("omega is degenerate (pfaffian = 0)");
  HarmonicProfile p = harmonic_subspaces(H, omega);

  Json h = Json::array();
  for (int v : p.h) h.push_back(v);
  Json subspaces;
  for (int k = 0; k <= spec.n(); ++k) {
    Json cols = Json::array();
    const RatMatrix& b = p.subspaces[size_t(k)];
    for (size_t j = 0; j < b.cols(); ++j) {
      Json col = Json::array();
      for (size_t i = 0; i < b.rows(); ++i) col.push_back(to_string(b.at(i, j)));
      cols.push_back(col);
    }
    subspaces["H" + std::to_string(k)] = cols;
  }
  Json results{{"omega", to_string(omega)},
               {"omega_class", to_json(p.omega_class)},
               {"pfaffian", to_string(pfaffian_coeff(omega))},
               {"h", h},
               {"harmonic_subspaces", subspaces}};

  std::ostringstream os;
  os << "omega = " << to_string(omega) << "\n";
  os << "h = (";
  for (size_t k = 0; k < p.h.size(); ++k) os << (k ? "," : "") << p.h[k];
  os << ")\n";

  emit(g,
       make_document("h",
                     Json{{"structure", structure}, {"omega", to_json(coords)}},
                     results),
       os.str());
  return 0;
}

int cmd_valuesets(const GlobalOptions& g, const std::string& structure) {
  LieAlgebraSpec spec = LieAlgebraSpec::parse(structure);
  RowEngine engine(spec);
  ExistenceResult ex = symplectic_existence(engine.cone());
  if (!ex.exists) throw ParseError("no symplectic structure on " + structure);
  Budget budget = parse_budget(g.budget);
  int jobs = g.jobs > 0 ? g.jobs : default_jobs();
  SweepResult sweep = sweep_cone(engine, budget, g.seed, jobs);
  ValueSetReport rep = value_sets(sweep);

  std::ostringstream os;
  for (int k = 3; k <= 5; ++k) {
    os << "h" << k << ": {";
    bool first = true;
    for (int v : rep.sets[k]) {
      os << (first ? "" : ", ") << v;
      first = false;
    }
    os << "}\n";
  }
  os << rep.symplectic << " symplectic samples of " << rep.samples << "\n";

  emit(g,
       make_document("valuesets",
                     Json{{"structure", structure},
                          {"budget", to_json(budget)},
                          {"seed", g.seed},
                          {"jobs", jobs}},
                     to_json(rep)),
       os.str());
  return 0;
}

int cmd_flexible(const GlobalOptions& g, const std::string& structure, int k) {
  LieAlgebraSpec spec = LieAlgebraSpec::parse(structure);
  RowEngine engine(spec);
  ExistenceResult ex = symplectic_existence(engine.cone());
  if (!ex.exists) throw ParseError("no symplectic structure on " + structure);
  Budget budget = parse_budget(g.budget);
  int jobs = g.jobs > 0 ? g.jobs : default_jobs();
  SweepResult sweep = sweep_cone(engine, budget, g.seed, jobs);
  ValueSetReport rep = value_sets(sweep);

  Json inputs{{"structure", structure},
              {"k", k},
              {"budget", to_json(budget)},
              {"seed", g.seed},
              {"jobs", jobs}};

  if (rep.sets[k].size() < 2) {
    emit(g, make_document("flexible", inputs, Json{{"certificate", nullptr},
                                                   {"status", "not found"}}),
         "no h" + std::to_string(k) + " variation observed under this budget\n");
    return 1;
  }
  int lo = *rep.sets[k].begin(), hi = *rep.sets[k].rbegin();
  std::vector<Scalar> w0(rep.witnesses[k][lo].begin(), rep.witnesses[k][lo].end());
  std::vector<Scalar> w1(rep.witnesses[k][hi].begin(), rep.witnesses[k][hi].end());
  auto cert = certify_flexible(engine, k, w0, w1);
  if (!cert || !validate_certificate(engine, *cert)) {
    emit(g, make_document("flexible", inputs, Json{{"certificate", nullptr},
                                                   {"status", "not found"}}),
         "certificate search failed\n");
    return 1;
  }
  std::ostringstream os;
  os << "h" << k << ": " << cert->h_at_0 << " -> " << cert->h_at_1
     << " along a straight symplectic segment\n";
  os << "pf(omega_t) = " << cert->proof.polynomial.to_string() << " (no roots in [0,1])\n";
  emit(g,
       make_document("flexible", inputs,
                     Json{{"certificate", to_json(*cert)}, {"status", "certified"}}),
       os.str());
  return 0;
}

int cmd_catalog(const GlobalOptions& g) {
  Budget budget = parse_budget(g.budget);
  int jobs = g.jobs > 0 ? g.jobs : default_jobs();
  VerificationReport rep = sweep_catalog(budget, g.seed, jobs);
  emit(g,
       make_document("catalog",
                     Json{{"budget", to_json(budget)}, {"seed", g.seed}, {"jobs", jobs}},
                     to_json(rep)),
       render_catalog_table(rep));
  return rep.failed == 0 ? 0 : 1;
}

int cmd_starcheck(const GlobalOptions& g, const std::string& structure) {
  LieAlgebraSpec spec = LieAlgebraSpec::parse(structure);
  CohomologySpace H(spec);
  SymplecticCone cone = symplectic_cone(H.differential());
  Form omega(spec.n(), 2);
  if (!g.omega.empty()) {
    std::vector<Scalar> coords = parse_coords(g.omega);
    if (int(coords.size()) != cone.dim())
      throw ParseError("expected " + std::to_string(cone.dim()) +
                       " omega coordinates (see `info` for the basis)");
    omega = cone.form_at(coords);
  } else {
    ExistenceResult ex = symplectic_existence(cone);
    if (!ex.exists) throw ParseError("no symplectic structure on " + structure);
    omega = cone.form_at(ex.witness);
  }
  if (pfaffian_coeff(omega) == 0)
    throw ParseError("omega is degenerate (pfaffian = 0)");

  std::vector<CheckResult> checks = operator_suite(spec, omega, g.seed);
  Json arr = Json::array();
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    arr.push_back(to_json(c));
    os << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << "\n";
  }
  bool pass = all_pass(checks);
  os << (pass ? "all operator checks passed\n" : "operator checks FAILED\n");
  emit(g,
       make_document("starcheck",
                     Json{{"structure", structure},
                          {"omega", to_string(omega)},
                          {"seed", g.seed}},
                     Json{{"checks", arr}, {"pass", pass}}),
       os.str());
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computation of symplectically harmonic cohomology of "
      "six-dimensional nilmanifolds"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json, "emit a JSON report document");
  app.add_option("--seed", g.seed, "seed for all randomized behavior (default 0)");
  app.add_option("--budget", g.budget,
                 "search budget: grid-bound,max-support,random-samples");
  app.add_option("--jobs", g.jobs, "worker threads (default: hardware)");
  app.add_option("--omega", g.omega,
                 "comma-separated rational coordinates over the Z2 basis");

  std::string structure;
  int degree = 3;

  CLI::App* info = app.add_subcommand("info", "invariants of one algebra");
  info->add_option("structure", structure)->required();

  CLI::App* hcmd = app.add_subcommand("h", "harmonic numbers of one symplectic form");
  hcmd->add_option("structure", structure)->required();

  CLI::App* vs = app.add_subcommand("valuesets", "attained h3/h4/h5 value sets");
  vs->add_option("structure", structure)->required();

  CLI::App* flex = app.add_subcommand("flexible", "flexibility certificate search");
  flex->add_option("structure", structure)->required();
  flex->add_option("--k", degree, "degree to certify (3, 4 or 5)");

  CLI::App* cat = app.add_subcommand("catalog", "verify the bundled table");

  CLI::App* sc = app.add_subcommand("starcheck", "operator identities at one point");
  sc->add_option("structure", structure)->required();

  try {
    app.parse(argc, argv);
    if (info->parsed()) return cmd_info(g, structure);
    if (hcmd->parsed()) return cmd_h(g, structure);
    if (vs->parsed()) return cmd_valuesets(g, structure);
    if (flex->parsed()) return cmd_flexible(g, structure, degree);
    if (cat->parsed()) return cmd_catalog(g);
    if (sc->parsed()) return cmd_starcheck(g, structure);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValueError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
