#include "symharm/report.hpp"

#include <sstream>

namespace symharm {

Json make_document(const std::string& command, Json inputs, Json results) {
  Json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  return doc;
}

Json to_json(const Budget& b) {
  return Json{{"grid_bound", b.grid_bound},
              {"max_support", b.max_support},
              {"random_samples", b.random_samples}};
}

Json to_json(const std::vector<Scalar>& coords) {
  Json a = Json::array();
  for (const Scalar& c : coords) a.push_back(to_string(c));
  return a;
}

Json to_json(const std::vector<i64>& coords) {
  Json a = Json::array();
  for (i64 c : coords) a.push_back(c);
  return a;
}

Json to_json(const UniPoly& p) {
  Json a = Json::array();
  for (const Scalar& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json to_json(const SturmProof& p) {
  Json chain = Json::array();
  for (const UniPoly& q : p.chain) chain.push_back(to_json(q));
  return Json{{"polynomial", to_json(p.polynomial)},
              {"sturm_chain", chain},
              {"variations_at_0", p.variations_at_0},
              {"variations_at_1", p.variations_at_1}};
}

Json to_json(const FlexibilityCertificate& c) {
  return Json{{"k", c.k},
              {"omega0", to_json(c.omega0)},
              {"omega1", to_json(c.omega1)},
              {"path", "omega0 + t*(omega1 - omega0), t in [0,1]"},
              {"h_at_0", c.h_at_0},
              {"h_at_1", c.h_at_1},
              {"nonvanishing_proof", to_json(c.proof)}};
}

Json to_json(const ValueSetReport& r) {
  Json sets, witnesses;
  for (const auto& [k, s] : r.sets) {
    Json vals = Json::array();
    for (int v : s) vals.push_back(v);
    sets["h" + std::to_string(k)] = vals;
  }
  for (const auto& [k, m] : r.witnesses) {
    Json per;
    for (const auto& [v, w] : m) per[std::to_string(v)] = to_json(w);
    witnesses["h" + std::to_string(k)] = per;
  }
  return Json{{"sets", sets},
              {"witnesses", witnesses},
              {"budget", to_json(r.budget)},
              {"seed", r.seed},
              {"samples", r.samples},
              {"symplectic_samples", r.symplectic}};
}

namespace {

Json stat_json(const GenericityReport::Stat& s) {
  return Json{{"value", s.value},
              {"attained", s.attained},
              {"total", s.total},
              {"pass99", s.pass99}};
}

}  // namespace

Json to_json(const GenericityReport& r) {
  Json j;
  if (r.h4_max) j["h4_max"] = stat_json(*r.h4_max);
  if (r.h5_max) j["h5_max"] = stat_json(*r.h5_max);
  if (r.h3_min) j["h3_min"] = stat_json(*r.h3_min);
  if (r.pencil)
    j["pencil"] = Json{{"tested", r.pencil->tested},
                       {"generic", r.pencil->generic},
                       {"generic_profile", Json::array({r.pencil->generic_profile[0],
                                                        r.pencil->generic_profile[1],
                                                        r.pencil->generic_profile[2]})}};
  return j;
}

Json to_json(const CheckResult& c) {
  Json j{{"name", c.name}, {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

const char* column_status_name(ColumnStatus s) {
  switch (s) {
    case ColumnStatus::Pass:
      return "pass";
    case ColumnStatus::Fail:
      return "fail";
    default:
      return "insufficient_budget";
  }
}

Json to_json(const EntryReport& r) {
  Json sets;
  for (const auto& [k, s] : r.sets) {
    Json vals = Json::array();
    for (int v : s) vals.push_back(v);
    sets["h" + std::to_string(k)] = vals;
  }
  Json columns;
  for (const auto& [name, status] : r.columns)
    columns[name] = column_status_name(status);
  Json j{{"structure", r.expected.structure},
         {"passed", r.passed},
         {"columns", columns},
         {"computed",
          Json{{"b1", r.b1},
               {"b2", r.b2},
               {"b3", r.b3},
               {"six_minus_s", r.six_minus_s},
               {"symplectic", r.exists},
               {"sets", sets}}},
         {"samples", r.samples},
         {"symplectic_samples", r.symplectic},
         {"structural_checks", r.checks},
         {"chain_checks", r.chain_checks},
         {"seconds", r.seconds}};
  if (r.moduli) j["computed"]["moduli"] = *r.moduli;
  if (!r.witness.empty()) j["computed"]["witness"] = to_json(r.witness);
  if (r.certificate) {
    j["certificate"] = to_json(*r.certificate);
  }
  if (!r.violations.empty()) j["violations"] = r.violations;
  Json gen = to_json(r.genericity);
  if (!gen.is_null() && !gen.empty()) j["genericity"] = gen;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json entries = Json::array();
  for (const EntryReport& e : r.entries) entries.push_back(to_json(e));
  return Json{{"entries", entries},
              {"summary", Json{{"total", int(r.entries.size())},
                               {"passed", r.passed},
                               {"failed", r.failed},
                               {"seconds", r.seconds}}},
              {"budget", to_json(r.budget)},
              {"seed", r.seed}};
}

namespace {

std::string render_set(const std::optional<std::set<int>>& s) {
  if (!s) return "-";
  std::string out;
  for (int v : *s) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out.empty() ? "{}" : out;
}

std::string render_set(const std::set<int>& s) {
  std::string out;
  for (int v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out.empty() ? "{}" : out;
}

}  // namespace

std::string render_entry_line(const EntryReport& r) {
  std::ostringstream os;
  os << (r.passed ? "[ok]   " : "[FAIL] ");
  os << r.b1 << " | " << r.b2 << " | " << r.six_minus_s << " | ";
  os.width(26);
  os << std::left << r.expected.structure;
  os << " | ";
  if (r.exists) {
    std::map<int, std::set<int>> sets = r.sets;
    os << render_set(sets[3]) << " | " << render_set(sets[4]) << " | "
       << render_set(sets[5]) << " | ";
    os << (r.moduli ? std::to_string(*r.moduli) : "-");
  } else {
    os << "- | - | - | -";
  }
  if (r.expected.flexible) os << " | flexible";
  return os.str();
}

std::string render_catalog_table(const VerificationReport& r) {
  std::ostringstream os;
  os << "b1 | b2 | 6-s | structure | h3 | h4 | h5 | moduli\n";
  for (const EntryReport& e : r.entries) os << render_entry_line(e) << "\n";
  os << r.passed << "/" << r.entries.size() << " rows verified";
  if (r.failed) os << " (" << r.failed << " FAILED)";
  os << "\n";
  return os.str();
}

std::vector<Scalar> parse_coords(const std::string& csv) {
  std::vector<Scalar> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) out.push_back(parse_scalar(cur));
  return out;
}

Budget parse_budget(const std::string& csv) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) parts.push_back(cur);
  if (parts.size() != 3)
    throw ParseError("budget must be grid-bound,support,samples");
  Budget b;
  b.grid_bound = std::stoi(parts[0]);
  b.max_support = std::stoi(parts[1]);
  b.random_samples = std::stoll(parts[2]);
  return b;
}

}  // namespace symharm
