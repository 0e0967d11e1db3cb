#include "symharm/flexibility.hpp"

#include "symharm/parallel.hpp"
#include "symharm/rng.hpp"

#include <algorithm>
#include <numeric>

namespace symharm {

namespace {

constexpr size_t kSubsetsPerChunk = 16;
constexpr long long kRandomPerChunk = 256;

std::vector<std::vector<int>> enumerate_supports(int nvars, int max_support) {
  std::vector<std::vector<int>> out;
  int cap = std::min(max_support, nvars);
  for (int s = 0; s <= cap; ++s) {
    if (s == 0) {
      out.push_back({});
      continue;
    }
    std::vector<int> sub(static_cast<size_t>(s), 0);
    for (int i = 0; i < s; ++i) sub[size_t(i)] = i;
    while (true) {
      out.push_back(sub);
      int t = s - 1;
      while (t >= 0 && sub[size_t(t)] == nvars - (s - t)) --t;
      if (t < 0) break;
      ++sub[size_t(t)];
      for (int u = t + 1; u < s; ++u) sub[size_t(u)] = sub[size_t(u - 1)] + 1;
    }
  }
  return out;
}

i64 gcd_ll(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct ChunkResult {
  std::map<HTriple, SweepResult::ProfileStat> profiles;
  long long total = 0, symplectic = 0, random_total = 0;
  std::map<HTriple, long long> random_counts;
  std::vector<std::string> violations;
  long long checks = 0, rechecks = 0;
  int chain_checks = 0;
};

struct SweepContext {
  const RowEngine* engine;
  const Budget* budget;
  const SweepOptions* options;
  std::uint64_t seed;
  std::vector<std::vector<int>> supports;
  size_t grid_chunks = 0, random_chunks = 0;
  // structural-check inputs
  LowerCentralSeries lcs;
  IntMat exact_class_map;  // reduction applied to d(1-forms); must vanish
  bool exact_map_is_zero = true;
};

void structural_checks(const SweepContext& ctx, const std::vector<i64>& coords,
                       const RowEngine::FullEval& ev, size_t chunk, long long pos,
                       ChunkResult& acc) {
  const RowEngine& eng = *ctx.engine;
  auto fail = [&](const std::string& what) {
    if (acc.violations.size() < 20) {
      std::string msg = what + " at coords [";
      for (size_t i = 0; i < coords.size(); ++i)
        msg += (i ? "," : "") + std::to_string(coords[i]);
      acc.violations.push_back(msg + "]");
    }
  };
  ++acc.checks;
  // h_k = b_k for k = 0,1,2.
  if (ev.h[0] != 1 || ev.h[1] != eng.betti(1) || ev.h[2] != eng.betti(2))
    fail("low-degree equality h_k=b_k");
  // Epimorphism inequality h_{m-k} >= h_{m+k}.
  for (int k = 1; k <= 3; ++k)
    if (ev.h[size_t(3 - k)] < ev.h[size_t(3 + k)]) fail("epimorphism inequality");
  // Kernel shortcut h3 = h5 + dim ker(L: H^3 -> H^5).
  if (ev.h[3] != ev.h[5] + ev.ker_l35) fail("kernel shortcut for h3");
  // Step-length bound: h1 - h5 >= dim g^r, equality and the closed form at
  // step length 2.
  if (ctx.lcs.step_length >= 2) {
    int r = ctx.lcs.step_length - 1;
    int dim_gr = ctx.lcs.dims[size_t(r)];
    if (ev.h[1] - ev.h[5] < dim_gr) fail("step-length inequality");
    if (ctx.lcs.step_length == 2) {
      if (ev.h[1] - ev.h[5] != ctx.lcs.dims[1]) fail("step-2 equality");
      if (ev.h[5] != 2 * (eng.betti(1) - 3)) fail("step-2 closed form");
    }
  }
  // Class invariance under adding exact 2-forms: the class coordinates of
  // d(beta) vanish (the zero map is also proved once per algebra).
  Rng rng = Rng(ctx.seed).fork(0x5eedbeef ^ (chunk * 131071 + size_t(pos)));
  for (int draw = 0; draw < ctx.options->beta_draws; ++draw) {
    bool zero = true;
    for (int i = 0; i < ctx.exact_class_map.rows && zero; ++i) {
      long long acc2 = 0;
      for (int j = 0; j < ctx.exact_class_map.cols; ++j)
        acc2 += ctx.exact_class_map.at(i, j) * rng.range(-9, 9);
      zero = acc2 == 0;
    }
    if (!zero) fail("exact 2-form changed class coordinates");
  }
}

void full_recheck(const SweepContext& ctx, const std::vector<i64>& coords,
                  const RowEngine::FullEval& ev, size_t chunk, ChunkResult& acc) {
  const RowEngine& eng = *ctx.engine;
  Form omega = eng.form_at(coords);
  RowEngine::FullEval ref = eng.eval_reference(omega);
  bool same = ref.h == ev.h && ref.ker_l35 == ev.ker_l35;
  // Perturb by an exact form and recompute end to end.
  Rng rng = Rng(ctx.seed).fork(0xbe7a ^ chunk);
  Form beta = random_form(rng, eng.spec().n(), 1, 3);
  Form perturbed = omega + eng.cohomology().differential().apply(beta);
  RowEngine::FullEval ref2 = eng.eval_reference(perturbed);
  bool invariant = ref2.h == ev.h && ref2.ker_l35 == ev.ker_l35;
  ++acc.rechecks;
  if (!same && acc.violations.size() < 20)
    acc.violations.push_back("integer path disagrees with generic path");
  if (!invariant && acc.violations.size() < 20)
    acc.violations.push_back("profile changed under exact perturbation");
}

void chain_check(const SweepContext& ctx, const std::vector<i64>& coords,
                 const RowEngine::FullEval& ev, ChunkResult& acc) {
  const RowEngine& eng = *ctx.engine;
  Form omega = eng.form_at(coords);
  for (int k = 0; k <= 6; ++k) {
    int ch = chain_level_h(eng.cohomology(), omega, k);
    if (ch != ev.h[size_t(k)] && acc.violations.size() < 20)
      acc.violations.push_back("chain-level value differs at degree " +
                               std::to_string(k));
  }
  ++acc.chain_checks;
}

void record_sample(const SweepContext& ctx, const std::vector<i64>& coords,
                   bool random_phase, size_t chunk, long long pos,
                   ChunkResult& acc) {
  ++acc.total;
  auto ev = ctx.engine->eval(coords);
  if (!ev) return;
  ++acc.symplectic;
  if (random_phase) {
    ++acc.random_total;
    ++acc.random_counts[{ev->h[3], ev->h[4], ev->h[5]}];
  }
  HTriple key{ev->h[3], ev->h[4], ev->h[5]};
  auto& stat = acc.profiles[key];
  std::pair<size_t, long long> tag{chunk, pos};
  if (stat.count == 0 || tag < stat.first) {
    stat.first = tag;
    stat.witness = coords;
    stat.full = ev->h;
  }
  ++stat.count;

  if (ctx.options->structural_checks) {
    structural_checks(ctx, coords, *ev, chunk, pos, acc);
    long long stride = std::max<long long>(1, ctx.options->full_recheck_stride);
    if (acc.symplectic == 1 && (chunk % size_t(stride)) == 0)
      full_recheck(ctx, coords, *ev, chunk, acc);
  }
  if (chunk == 0 && acc.chain_checks < ctx.options->chain_check_samples)
    chain_check(ctx, coords, *ev, acc);
}

ChunkResult run_grid_chunk(const SweepContext& ctx, size_t chunk_id) {
  ChunkResult acc;
  const int nvars = ctx.engine->z2_dim();
  const int bound = ctx.budget->grid_bound;
  const int ndigits = 2 * bound;
  size_t begin = chunk_id * kSubsetsPerChunk;
  size_t end = std::min(begin + kSubsetsPerChunk, ctx.supports.size());
  std::vector<i64> coords(size_t(nvars), 0);
  long long pos = 0;
  for (size_t si = begin; si < end; ++si) {
    const std::vector<int>& sub = ctx.supports[si];
    const int s = int(sub.size());
    if (s == 0) continue;  // zero form is never symplectic
    std::vector<int> digit(size_t(s), 0);
    while (true) {
      // digit d encodes the value (d/2+1) * (d even ? 1 : -1)
      bool canonical = digit[0] % 2 == 0;  // positive leading coordinate
      if (canonical) {
        i64 g = 0;
        for (int i = 0; i < s; ++i) {
          i64 v = (digit[size_t(i)] / 2 + 1) * (digit[size_t(i)] % 2 ? -1 : 1);
          coords[size_t(sub[size_t(i)])] = v;
          g = gcd_ll(g, v);
        }
        if (g == 1) record_sample(ctx, coords, false, chunk_id, pos++, acc);
        for (int i = 0; i < s; ++i) coords[size_t(sub[size_t(i)])] = 0;
      }
      int t = s - 1;
      while (t >= 0 && digit[size_t(t)] == ndigits - 1) {
        digit[size_t(t)] = 0;
        --t;
      }
      if (t < 0) break;
      ++digit[size_t(t)];
    }
  }
  return acc;
}

std::vector<i64> random_coords(const RowEngine& engine, Rng rng) {
  const int nvars = engine.z2_dim();
  std::vector<Scalar> q(static_cast<size_t>(nvars), Scalar(0));
  i64 den_lcm = 1;
  std::vector<i64> num(static_cast<size_t>(nvars), 0), den(static_cast<size_t>(nvars), 0);
  for (int i = 0; i < nvars; ++i) {
    num[size_t(i)] = rng.range(-999, 999);
    den[size_t(i)] = rng.range(1, 4);
    den_lcm = den_lcm / gcd_ll(den_lcm, den[size_t(i)]) * den[size_t(i)];
  }
  std::vector<i64> coords(static_cast<size_t>(nvars), 0);
  i64 g = 0;
  for (int i = 0; i < nvars; ++i) {
    coords[size_t(i)] = num[size_t(i)] * (den_lcm / den[size_t(i)]);
    g = gcd_ll(g, coords[size_t(i)]);
  }
  if (g > 1)
    for (auto& c : coords) c /= g;
  return coords;
}

ChunkResult run_random_chunk(const SweepContext& ctx, size_t chunk_id,
                             size_t random_chunk_index) {
  ChunkResult acc;
  long long begin = (long long)random_chunk_index * kRandomPerChunk;
  long long end = std::min(begin + kRandomPerChunk, ctx.budget->random_samples);
  for (long long i = begin; i < end; ++i) {
    Rng rng = Rng(ctx.seed).fork(0x9a3f0000ull + (std::uint64_t)i);
    std::vector<i64> coords = random_coords(*ctx.engine, rng);
    record_sample(ctx, coords, true, chunk_id, i - begin, acc);
  }
  return acc;
}

}  // namespace

SweepResult sweep_cone(const RowEngine& engine, const Budget& budget,
                       std::uint64_t seed, int jobs, const SweepOptions& options) {
  SweepContext ctx;
  ctx.engine = &engine;
  ctx.budget = &budget;
  ctx.options = &options;
  ctx.seed = seed;
  if (budget.grid_bound > 0)
    ctx.supports = enumerate_supports(engine.z2_dim(), budget.max_support);
  ctx.grid_chunks = (ctx.supports.size() + kSubsetsPerChunk - 1) / kSubsetsPerChunk;
  ctx.random_chunks =
      budget.random_samples > 0
          ? size_t((budget.random_samples + kRandomPerChunk - 1) / kRandomPerChunk)
          : 0;
  ctx.lcs = lower_central_series(engine.spec());
  {
    RatMatrix m = engine.cohomology().reduction_matrix(2) *
                  engine.cohomology().differential().matrix(1);
    ctx.exact_class_map = clear_denominators(m);
    ctx.exact_map_is_zero = m.is_zero();
  }

  size_t nchunks = ctx.grid_chunks + ctx.random_chunks;
  std::function<ChunkResult(size_t)> worker = [&](size_t id) {
    if (id < ctx.grid_chunks) return run_grid_chunk(ctx, id);
    return run_random_chunk(ctx, id, id - ctx.grid_chunks);
  };
  std::vector<ChunkResult> parts = parallel_map<ChunkResult>(nchunks, jobs, worker);

  SweepResult out;
  out.budget = budget;
  out.seed = seed;
  if (options.structural_checks && !ctx.exact_map_is_zero)
    out.violations.push_back("reduction does not kill exact 2-forms");
  for (const ChunkResult& part : parts) {
    out.total_samples += part.total;
    out.symplectic_samples += part.symplectic;
    out.random_total += part.random_total;
    out.checks_run += part.checks;
    out.full_rechecks += part.rechecks;
    out.chain_checks += part.chain_checks;
    for (const auto& [key, stat] : part.profiles) {
      auto& dst = out.profiles[key];
      if (dst.count == 0 || stat.first < dst.first) {
        dst.first = stat.first;
        dst.witness = stat.witness;
        dst.full = stat.full;
      }
      dst.count += stat.count;
    }
    for (const auto& [key, c] : part.random_counts) out.random_counts[key] += c;
    for (const auto& v : part.violations)
      if (out.violations.size() < 50) out.violations.push_back(v);
  }
  return out;
}

ValueSetReport value_sets(const SweepResult& sweep) {
  ValueSetReport rep;
  rep.budget = sweep.budget;
  rep.seed = sweep.seed;
  rep.samples = sweep.total_samples;
  rep.symplectic = sweep.symplectic_samples;
  for (int k = 3; k <= 5; ++k) rep.sets[k] = {};
  for (const auto& [key, stat] : sweep.profiles) {
    for (int k = 3; k <= 5; ++k) {
      int value = key[size_t(k - 3)];
      rep.sets[k].insert(value);
      auto it = rep.witnesses[k].find(value);
      if (it == rep.witnesses[k].end()) {
        // earliest witness among profiles attaining this value
        std::pair<size_t, long long> best = stat.first;
        std::vector<i64> w = stat.witness;
        for (const auto& [k2, s2] : sweep.profiles)
          if (k2[size_t(k - 3)] == value && s2.first < best) {
            best = s2.first;
            w = s2.witness;
          }
        rep.witnesses[k][value] = w;
      }
    }
  }
  return rep;
}

std::optional<RowEngine::FullEval> eval_at_rational(
    const RowEngine& engine, const std::vector<Scalar>& coords) {
  BigInt lcm(1);
  for (const Scalar& c : coords)
    lcm = boost::multiprecision::lcm(lcm, denominator_of(c));
  std::vector<BigInt> scaled(coords.size());
  BigInt g(0);
  for (size_t i = 0; i < coords.size(); ++i) {
    scaled[i] = numerator_of(coords[i]) * (lcm / denominator_of(coords[i]));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  if (g > 1)
    for (auto& s : scaled) s /= g;
  std::vector<i64> ic(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    if (scaled[i] > INT64_MAX || scaled[i] < INT64_MIN) {
      // fall back to the generic path on absurdly large inputs
      Form omega = engine.form_at(coords);
      if (pfaffian_coeff(omega) == 0) return std::nullopt;
      return engine.eval_reference(omega);
    }
    ic[i] = i64(scaled[i]);
  }
  return engine.eval(ic);
}

namespace {

UniPoly segment_pfaffian(const RowEngine& engine, const std::vector<Scalar>& a,
                         const std::vector<Scalar>& b) {
  // pf(a + t(b-a)) is a cubic in t; recover it by exact interpolation.
  std::vector<Scalar> xs = {Scalar(0), Scalar(1), Scalar(2), Scalar(3)};
  std::vector<Scalar> ys;
  for (const Scalar& t : xs) {
    std::vector<Scalar> p(a.size());
    for (size_t i = 0; i < a.size(); ++i) p[i] = a[i] + t * (b[i] - a[i]);
    ys.push_back(engine.pf_value(p));
  }
  UniPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    UniPoly term({ys[i]});
    for (size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      term = term * UniPoly({-xs[j] / (xs[i] - xs[j]), Scalar(1) / (xs[i] - xs[j])});
    }
    acc = acc + term;
  }
  return acc;
}

int chain_variations(const std::vector<UniPoly>& chain, const Scalar& x) {
  int v = 0, last = 0;
  for (const UniPoly& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::optional<FlexibilityCertificate> certify_flexible(
    const RowEngine& engine, int k, const std::vector<Scalar>& omega0,
    const std::vector<Scalar>& omega1, int max_depth) {
  if (k < 0 || k > 6) throw ValueError("degree out of range");
  auto e0 = eval_at_rational(engine, omega0);
  auto e1 = eval_at_rational(engine, omega1);
  if (!e0 || !e1) throw ValueError("certificate endpoints must be symplectic");
  if (e0->h[size_t(k)] == e1->h[size_t(k)])
    throw ValueError("endpoints have equal h_k; nothing to certify");

  Scalar lambda(1);
  for (int depth = 0; depth <= max_depth; ++depth) {
    struct Side {
      const std::vector<Scalar>* from;
      const std::vector<Scalar>* to;
      int h_from;
    } sides[2] = {{&omega0, &omega1, e0->h[size_t(k)]},
                  {&omega1, &omega0, e1->h[size_t(k)]}};
    for (const Side& side : sides) {
      std::vector<Scalar> end(side.from->size());
      for (size_t i = 0; i < end.size(); ++i)
        end[i] = (*side.from)[i] + lambda * ((*side.to)[i] - (*side.from)[i]);
      auto ee = eval_at_rational(engine, end);
      if (!ee || ee->h[size_t(k)] == side.h_from) continue;
      UniPoly p = segment_pfaffian(engine, *side.from, end);
      if (p.is_zero()) throw Error("pfaffian vanished along a symplectic segment");
      if (!sturm_nonvanishing(p, Scalar(0), Scalar(1))) continue;
      FlexibilityCertificate cert;
      cert.k = k;
      cert.omega0 = *side.from;
      cert.omega1 = end;
      cert.h_at_0 = side.h_from;
      cert.h_at_1 = ee->h[size_t(k)];
      cert.proof.polynomial = p;
      cert.proof.chain = sturm_chain(p);
      cert.proof.variations_at_0 = chain_variations(cert.proof.chain, Scalar(0));
      cert.proof.variations_at_1 = chain_variations(cert.proof.chain, Scalar(1));
      return cert;
    }
    lambda /= 2;
  }
  return std::nullopt;
}

bool validate_certificate(const RowEngine& engine,
                          const FlexibilityCertificate& cert, int spot_checks) {
  auto e0 = eval_at_rational(engine, cert.omega0);
  auto e1 = eval_at_rational(engine, cert.omega1);
  if (!e0 || !e1) return false;
  if (e0->h[size_t(cert.k)] != cert.h_at_0 || e1->h[size_t(cert.k)] != cert.h_at_1)
    return false;
  if (cert.h_at_0 == cert.h_at_1) return false;
  // h_0..h_2 never move along the path endpoints.
  for (int j = 0; j <= 2; ++j)
    if (e0->h[size_t(j)] != e1->h[size_t(j)]) return false;
  if (!sturm_nonvanishing(cert.proof.polynomial, Scalar(0), Scalar(1)))
    return false;
  if (chain_variations(cert.proof.chain, Scalar(0)) != cert.proof.variations_at_0 ||
      chain_variations(cert.proof.chain, Scalar(1)) != cert.proof.variations_at_1)
    return false;
  // The embedded polynomial must actually be the Pfaffian along the segment.
  Rng rng(0x5712u);
  for (int i = 0; i < spot_checks; ++i) {
    Scalar t(rng.range(1, 63), 64);
    std::vector<Scalar> p(cert.omega0.size());
    for (size_t j = 0; j < p.size(); ++j)
      p[j] = cert.omega0[j] + t * (cert.omega1[j] - cert.omega0[j]);
    Scalar pf = engine.pf_value(p);
    if (pf == 0 || pf != cert.proof.polynomial.eval(t)) return false;
  }
  return true;
}

Scalar rank_perturbation(const RatMatrix& d, const RatMatrix& a,
                         const RatMatrix& b, int k, int depth) {
  if (k < 1) throw ValueError("positive power required");
  auto power = [&](const RatMatrix& m) {
    RatMatrix p = m;
    for (int i = 1; i < k; ++i) p = p * m;
    return p;
  };
  size_t base = (d * power(a)).rank();
  if ((d * power(b)).rank() <= base)
    throw ValueError("rank(D B^k) must exceed rank(D A^k)");
  Scalar lambda(1, 2);
  for (int i = 0; i < depth; ++i) {
    RatMatrix mixed = a + b.scaled(lambda);
    if ((d * power(mixed)).rank() > base) return lambda;
    lambda /= 2;
  }
  throw Error("no perturbation found within depth; precondition violated?");
}

GenericityReport genericity_report(const RowEngine& engine,
                                   const SweepResult& sweep, std::uint64_t seed) {
  GenericityReport rep;
  if (sweep.profiles.empty()) return rep;

  std::set<int> h3s, h4s, h5s;
  for (const auto& [key, stat] : sweep.profiles) {
    h3s.insert(key[0]);
    h4s.insert(key[1]);
    h5s.insert(key[2]);
  }
  long long total = sweep.random_total;
  auto tally = [&](int idx, int value) {
    long long c = 0;
    for (const auto& [key, cnt] : sweep.random_counts)
      if (key[size_t(idx)] == value) c += cnt;
    return c;
  };
  if (total > 0) {
    GenericityReport::Stat s4{*h4s.rbegin(), tally(1, *h4s.rbegin()), total, false};
    s4.pass99 = s4.attained * 100 >= total * 99;
    rep.h4_max = s4;
    GenericityReport::Stat s5{*h5s.rbegin(), tally(2, *h5s.rbegin()), total, false};
    s5.pass99 = s5.attained * 100 >= total * 99;
    rep.h5_max = s5;
    if (h5s.size() == 1) {
      GenericityReport::Stat s3{*h3s.begin(), tally(0, *h3s.begin()), total, false};
      s3.pass99 = s3.attained * 100 >= total * 99;
      rep.h3_min = s3;
    }
  }

  // Pencil density: all but finitely many points on a line through a
  // non-generic point carry the generic profile.
  HTriple generic{};
  long long best = -1;
  for (const auto& [key, cnt] : sweep.random_counts)
    if (cnt > best) {
      best = cnt;
      generic = key;
    }
  if (best < 0) {
    for (const auto& [key, stat] : sweep.profiles)
      if (stat.count > best) {
        best = stat.count;
        generic = key;
      }
  }
  const SweepResult::ProfileStat* off = nullptr;
  const SweepResult::ProfileStat* on = nullptr;
  for (const auto& [key, stat] : sweep.profiles) {
    if (key == generic)
      on = &stat;
    else if (!off)
      off = &stat;
  }
  if (off && on) {
    GenericityReport::Pencil pencil;
    pencil.generic_profile = generic;
    Rng rng = Rng(seed).fork(0x9e11c11ull);
    std::vector<Scalar> a(off->witness.begin(), off->witness.end());
    std::vector<Scalar> b(on->witness.begin(), on->witness.end());
    for (int i = 0; i < 32; ++i) {
      Scalar t(2 * i + 1, 64);
      (void)rng;
      std::vector<Scalar> p(a.size());
      for (size_t j = 0; j < p.size(); ++j) p[j] = a[j] + t * (b[j] - a[j]);
      auto ev = eval_at_rational(engine, p);
      ++pencil.tested;
      if (ev && HTriple{ev->h[3], ev->h[4], ev->h[5]} == generic) ++pencil.generic;
    }
    rep.pencil = pencil;
  }
  return rep;
}

}  // namespace symharm
