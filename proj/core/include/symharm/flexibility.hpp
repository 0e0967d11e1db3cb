#pragma once

#include "symharm/engine.hpp"
#include "symharm/poly.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace symharm {

struct Budget {
  int grid_bound = 2;
  int max_support = 5;
  long long random_samples = 10000;

  bool covers_default() const {
    return grid_bound >= 2 && max_support >= 5 && random_samples >= 10000;
  }
  bool empty() const { return grid_bound <= 0 && random_samples <= 0; }
};

using HTriple = std::array<int, 3>;  // (h3, h4, h5)

struct SweepOptions {
  bool structural_checks = false;  // per-sample theorem validation
  int beta_draws = 5;              // class-invariance draws per sample
  long long full_recheck_stride = 4096;  // generic-path recompute cadence
  int chain_check_samples = 0;     // chain-level cross-check on first k samples
};

struct SweepResult {
  struct ProfileStat {
    long long count = 0;
    // (chunk, position) of the first occurrence; orders witnesses
    // deterministically under any thread count.
    std::pair<size_t, long long> first{~size_t(0), 0};
    std::vector<i64> witness;
    std::array<int, 7> full{};
  };

  std::map<HTriple, ProfileStat> profiles;
  long long total_samples = 0;
  long long symplectic_samples = 0;
  long long random_total = 0;      // random-phase symplectic samples
  std::map<HTriple, long long> random_counts;
  std::vector<std::string> violations;  // structural check failures (expect none)
  long long checks_run = 0;
  long long full_rechecks = 0;
  int chain_checks = 0;
  Budget budget;
  std::uint64_t seed = 0;
};

// Enumerates the budgeted grid (entries in [-B, B], support bounded,
// positive-scalar multiples skipped) plus seeded random samples, evaluates
// harmonic numbers at every symplectic point, and aggregates deterministically.
SweepResult sweep_cone(const RowEngine& engine, const Budget& budget,
                       std::uint64_t seed, int jobs,
                       const SweepOptions& options = {});

struct ValueSetReport {
  std::map<int, std::set<int>> sets;  // k in {3,4,5} -> attained values
  std::map<int, std::map<int, std::vector<i64>>> witnesses;
  Budget budget;
  std::uint64_t seed = 0;
  long long samples = 0, symplectic = 0;
};

ValueSetReport value_sets(const SweepResult& sweep);

struct SturmProof {
  UniPoly polynomial;  // pf along omega0 + t(omega1 - omega0), t in [0,1]
  std::vector<UniPoly> chain;
  int variations_at_0 = 0, variations_at_1 = 0;
};

struct FlexibilityCertificate {
  int k = 0;
  std::vector<Scalar> omega0, omega1;  // cone coordinates
  int h_at_0 = 0, h_at_1 = 0;
  SturmProof proof;
};

// Builds a continuous symplectic segment with differing h_k endpoints and an
// exact nonvanishing proof for the Pfaffian along it, shrinking toward either
// endpoint as needed. Requires h_k(omega0) != h_k(omega1).
std::optional<FlexibilityCertificate> certify_flexible(
    const RowEngine& engine, int k, const std::vector<Scalar>& omega0,
    const std::vector<Scalar>& omega1, int max_depth = 40);

// Re-validates a certificate: endpoint values, Sturm chain consistency and
// nonvanishing at sampled interior points.
bool validate_certificate(const RowEngine& engine,
                          const FlexibilityCertificate& cert,
                          int spot_checks = 10);

// Lambda with rank(D (A + lambda B)^k) > rank(D A^k), tried over 1/2, 1/4, ...;
// requires rank(D A^k) < rank(D B^k). Throws Error when the depth is exhausted.
Scalar rank_perturbation(const RatMatrix& d, const RatMatrix& a,
                         const RatMatrix& b, int k, int depth = 64);

struct GenericityReport {
  struct Stat {
    int value = 0;
    long long attained = 0, total = 0;
    bool pass99 = false;
  };
  std::optional<Stat> h4_max, h5_max;
  std::optional<Stat> h3_min;  // only when the h5 value set is a singleton
  struct Pencil {
    long long tested = 0, generic = 0;
    HTriple generic_profile{};
  };
  std::optional<Pencil> pencil;  // present when a non-generic witness exists
};

GenericityReport genericity_report(const RowEngine& engine,
                                   const SweepResult& sweep,
                                   std::uint64_t seed);

// h_k at rational cone coordinates (clears denominators; harmonic numbers
// are invariant under scaling).
std::optional<RowEngine::FullEval> eval_at_rational(
    const RowEngine& engine, const std::vector<Scalar>& coords);

}  // namespace symharm
