#pragma once

#include "symharm/flexibility.hpp"

#include <optional>

namespace symharm {

// One row of the bundled table of six-dimensional nilpotent Lie algebras.
struct CatalogEntry {
  std::string structure;
  int b1 = 0, b2 = 0, six_minus_s = 0;
  std::string direct_sum;  // irreducible-summand tag; informational
  std::optional<std::set<int>> h3, h4, h5;  // nullopt: no symplectic structure
  std::optional<int> moduli_dim;
  bool flexible = false;
};

// The embedded table: 34 entries, 8 without a symplectic structure, 10
// flexible. Invariants are validated at load.
std::vector<CatalogEntry> load_catalog();
std::vector<CatalogEntry> parse_catalog(std::string_view text);
const std::string& catalog_text();

enum class ColumnStatus { Pass, Fail, Insufficient };

struct EntryReport {
  CatalogEntry expected;
  // computed values
  int b1 = 0, b2 = 0, b3 = 0, six_minus_s = 0;
  bool exists = false;
  std::optional<int> moduli;
  std::vector<Scalar> witness;  // existence witness (cone coordinates)
  std::map<int, std::set<int>> sets;
  std::map<int, std::map<int, std::vector<i64>>> set_witnesses;
  std::optional<FlexibilityCertificate> certificate;
  int certificate_k = 0;
  GenericityReport genericity;
  // bookkeeping
  std::map<std::string, ColumnStatus> columns;
  bool passed = true;
  long long samples = 0, symplectic = 0, checks = 0, chain_checks = 0;
  std::vector<std::string> violations;
  double seconds = 0;
};

EntryReport verify_entry(const CatalogEntry& entry, const Budget& budget,
                         std::uint64_t seed, int jobs);

struct VerificationReport {
  std::vector<EntryReport> entries;
  int passed = 0, failed = 0;
  Budget budget;
  std::uint64_t seed = 0;
  double seconds = 0;
};

// Verifies all 34 rows; entries are reported in table order regardless of
// parallelism.
VerificationReport sweep_catalog(const Budget& budget, std::uint64_t seed,
                                 int jobs);

}  // namespace symharm
