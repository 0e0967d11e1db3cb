#include "symharm/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace symharm {

namespace {

constexpr const char* kCatalogText =
    R"(# Six-dimensional nilpotent Lie algebras with expected invariants.
# Columns: structure | b1 | b2 | 6-s | sum | h3 | h4 | h5 | moduli | flexible
# Ordered lexicographically by (b1, b2, 6-s). "-" marks rows without a
# symplectic structure; value sets are comma-separated.
# row 1
(0,0,12,13,14+23,34+52)|2|2|1||-|-|-|-|no
# row 2
(0,0,12,13,14,34+52)|2|2|1||-|-|-|-|no
# row 3
(0,0,12,13,14,15)|2|3|1||3|3|0|7|no
# row 4
(0,0,12,13,14+23,24+15)|2|3|1||3,4|2|0|7|yes
# row 5
(0,0,12,13,14,23+15)|2|3|1||2|2|0|7|no
# row 6
(0,0,12,13,23,14)|2|4|2||4|4|0|8|no
# row 7
(0,0,12,13,23,14-25)|2|4|2||4|2,3,4|0|8|yes
# row 8
(0,0,12,13,23,14+25)|2|4|2||4|4|0|8|no
# row 9
(0,0,0,12,14-23,15+34)|3|4|2||2|2|0|7|no
# row 10
(0,0,0,12,14,15+23)|3|5|2||4|4|2|8|no
# row 11
(0,0,0,12,14,15+23+24)|3|5|2||4,5|3,4|0,2|8|yes
# row 12
(0,0,0,12,14,15+24)|3|5|2|1+5|5|4|2|8|no
# row 13
(0,0,0,12,14,15)|3|5|2|1+5|5|4|2|8|no
# row 14
(0,0,0,12,13,14+35)|3|5|3||-|-|-|-|no
# row 15
(0,0,0,12,23,14+35)|3|5|3||-|-|-|-|no
# row 16
(0,0,0,12,23,14-35)|3|5|3||-|-|-|-|no
# row 17
(0,0,0,12,14,24)|3|5|3|1+5|-|-|-|-|no
# row 18
(0,0,0,12,13+42,14+23)|3|5|3||5|3|0|8|no
# row 19
(0,0,0,12,14,13+42)|3|5|3||5|3|0|8|no
# row 20
(0,0,0,12,13+14,24)|3|5|3||5|2,3|0|8|yes
# row 21
(0,0,0,12,13,14+23)|3|6|3||5,6,7|3,4|0|9|yes
# row 22
(0,0,0,12,13,24)|3|6|3||5,6|5|0|9|yes
# row 23
(0,0,0,12,13,14)|3|6|3||5,6|4|0|9|yes
# row 24
(0,0,0,12,13,23)|3|8|4||9,10|7,8|0|9|yes
# row 25
(0,0,0,0,12,15+34)|4|6|3||-|-|-|-|no
# row 26
(0,0,0,0,12,15)|4|7|3|1+1+4|6|3|2|9|no
# row 27
(0,0,0,0,12,14+25)|4|7|3|1+5|6,7|3|2|9|yes
# row 28
(0,0,0,0,13+42,14+23)|4|8|4||8|7|2|10|no
# row 29
(0,0,0,0,12,14+23)|4|8|4||8|6|2|10|no
# row 30
(0,0,0,0,12,34)|4|8|4|3+3|8|7|2|10|no
# row 31
(0,0,0,0,12,13)|4|9|4|1+5|10|7,8|2|11|yes
# row 32
(0,0,0,0,0,12+34)|5|9|4|1+5|-|-|-|-|no
# row 33
(0,0,0,0,0,12)|5|11|4|1+1+1+3|13|9|4|12|no
# row 34
(0,0,0,0,0,0)|6|15|5|1+1+1+1+1+1|20|15|6|15|no
)";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<std::set<int>> parse_set(const std::string& field) {
  if (field == "-") return std::nullopt;
  std::set<int> s;
  for (const std::string& piece : split(field, ','))
    s.insert(std::stoi(piece));
  return s;
}

}  // namespace

const std::string& catalog_text() {
  static const std::string text = kCatalogText;
  return text;
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = split(line, '|');
    if (f.size() != 10) throw ParseError("catalog row needs 10 fields: " + line);
    CatalogEntry e;
    e.structure = f[0];
    e.b1 = std::stoi(f[1]);
    e.b2 = std::stoi(f[2]);
    e.six_minus_s = std::stoi(f[3]);
    e.direct_sum = f[4];
    e.h3 = parse_set(f[5]);
    e.h4 = parse_set(f[6]);
    e.h5 = parse_set(f[7]);
    e.moduli_dim = f[8] == "-" ? std::nullopt : std::optional<int>(std::stoi(f[8]));
    e.flexible = f[9] == "yes";
    if (e.h3.has_value() != e.moduli_dim.has_value())
      throw ParseError("inconsistent symplectic markers: " + line);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> entries = parse_catalog(catalog_text());
  int none = 0, flexible = 0;
  for (const CatalogEntry& e : entries) {
    if (!e.h3) ++none;
    if (e.flexible) ++flexible;
  }
  if (entries.size() != 34 || none != 8 || flexible != 10)
    throw Error("catalog does not satisfy its shape invariants");
  return entries;
}

namespace {

void set_column(EntryReport& rep, const std::string& name, ColumnStatus status) {
  rep.columns[name] = status;
  if (status == ColumnStatus::Fail) rep.passed = false;
}

void set_column(EntryReport& rep, const std::string& name, bool pass) {
  set_column(rep, name, pass ? ColumnStatus::Pass : ColumnStatus::Fail);
}

ColumnStatus compare_sets(const std::set<int>& attained,
                          const std::set<int>& expected, bool default_budget) {
  if (attained == expected) return ColumnStatus::Pass;
  bool subset = std::includes(expected.begin(), expected.end(),
                              attained.begin(), attained.end());
  if (subset && !default_budget) return ColumnStatus::Insufficient;
  return ColumnStatus::Fail;
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& entry, const Budget& budget,
                         std::uint64_t seed, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  EntryReport rep;
  rep.expected = entry;

  LieAlgebraSpec spec = LieAlgebraSpec::parse(entry.structure);
  RowEngine engine(spec);
  const CohomologySpace& H = engine.cohomology();

  rep.b1 = H.betti(1);
  rep.b2 = H.betti(2);
  rep.b3 = H.betti(3);
  LowerCentralSeries lcs = lower_central_series(spec);
  rep.six_minus_s = 6 - lcs.step_length;

  set_column(rep, "b1", rep.b1 == entry.b1);
  set_column(rep, "b2", rep.b2 == entry.b2);
  set_column(rep, "b3_identity",
             rep.b3 == 2 * (rep.b2 - rep.b1 + 1) && euler_check(H));
  set_column(rep, "six_minus_s", rep.six_minus_s == entry.six_minus_s);

  ExistenceResult ex = symplectic_existence(engine.cone());
  rep.exists = ex.exists;
  set_column(rep, "existence", rep.exists == entry.h3.has_value());

  if (rep.exists) {
    rep.witness = ex.witness;
    rep.moduli = moduli_dimension(engine.cone());
    set_column(rep, "moduli",
               entry.moduli_dim.has_value() && *rep.moduli == *entry.moduli_dim);
  } else {
    set_column(rep, "moduli", !entry.moduli_dim.has_value());
  }

  if (rep.exists && !budget.empty() && entry.h3) {
    SweepOptions opts;
    opts.structural_checks = true;
    opts.chain_check_samples = 2;
    SweepResult sweep = sweep_cone(engine, budget, seed, jobs, opts);
    ValueSetReport vs = value_sets(sweep);
    rep.sets = vs.sets;
    rep.set_witnesses = vs.witnesses;
    rep.samples = sweep.total_samples;
    rep.symplectic = sweep.symplectic_samples;
    rep.checks = sweep.checks_run;
    rep.chain_checks = sweep.chain_checks;
    rep.violations = sweep.violations;

    bool default_budget = budget.covers_default();
    set_column(rep, "h3", compare_sets(rep.sets[3], *entry.h3, default_budget));
    set_column(rep, "h4", compare_sets(rep.sets[4], *entry.h4, default_budget));
    set_column(rep, "h5", compare_sets(rep.sets[5], *entry.h5, default_budget));
    set_column(rep, "structural", sweep.violations.empty());
    set_column(rep, "chain",
               sweep.chain_checks > 0 ? ColumnStatus::Pass
                                      : ColumnStatus::Insufficient);

    rep.genericity = genericity_report(engine, sweep, seed);
    bool enough_random = sweep.random_total >= 1000;
    bool generic_ok = rep.genericity.h4_max && rep.genericity.h4_max->pass99 &&
                      rep.genericity.h5_max && rep.genericity.h5_max->pass99 &&
                      (!rep.genericity.h3_min || rep.genericity.h3_min->pass99);
    set_column(rep, "genericity",
               enough_random ? (generic_ok ? ColumnStatus::Pass : ColumnStatus::Fail)
                             : ColumnStatus::Insufficient);

    bool variation = false;
    for (int k = 3; k <= 5; ++k) variation = variation || rep.sets[k].size() > 1;
    if (entry.flexible) {
      if (variation) {
        for (int k : {5, 4, 3}) {
          if (rep.sets[k].size() < 2) continue;
          int lo = *rep.sets[k].begin(), hi = *rep.sets[k].rbegin();
          std::vector<Scalar> w0(rep.set_witnesses[k][lo].begin(),
                                 rep.set_witnesses[k][lo].end());
          std::vector<Scalar> w1(rep.set_witnesses[k][hi].begin(),
                                 rep.set_witnesses[k][hi].end());
          auto cert = certify_flexible(engine, k, w0, w1);
          if (cert && validate_certificate(engine, *cert)) {
            rep.certificate = cert;
            rep.certificate_k = k;
            break;
          }
        }
        set_column(rep, "flexible", rep.certificate.has_value());
      } else {
        set_column(rep, "flexible", default_budget ? ColumnStatus::Fail
                                                   : ColumnStatus::Insufficient);
      }
    } else {
      set_column(rep, "flexible", !variation);
    }
  } else if (rep.exists) {
    for (const char* c : {"h3", "h4", "h5", "flexible", "structural", "chain",
                          "genericity"})
      set_column(rep, c, ColumnStatus::Insufficient);
  } else {
    set_column(rep, "h3", !entry.h3.has_value());
    set_column(rep, "h4", !entry.h4.has_value());
    set_column(rep, "h5", !entry.h5.has_value());
    set_column(rep, "flexible", !entry.flexible);
  }

  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerificationReport sweep_catalog(const Budget& budget, std::uint64_t seed,
                                 int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport out;
  out.budget = budget;
  out.seed = seed;
  for (const CatalogEntry& entry : load_catalog()) {
    out.entries.push_back(verify_entry(entry, budget, seed, jobs));
    if (out.entries.back().passed)
      ++out.passed;
    else
      ++out.failed;
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace symharm
