#include "fsig/hk.hpp"

#include <exception>
#include <random>

#include "fsig/error.hpp"
#include "fsig/ideal_ops.hpp"

namespace fsig {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t e, std::uint64_t sample) {
  return splitmix(splitmix(splitmix(seed) ^ e) ^ sample);
}

Rational normalize(std::uint64_t length, std::uint32_t p, unsigned e, std::size_t d) {
  return Rational(BigInt(length)) / rational_pow(p, static_cast<unsigned>(e * d));
}

// Lengths are global colengths; they are local lengths only when I + a is
// supported at the origin.
const Ideal& require_m_primary(const Ideal& full) {
  if (!is_m_primary(full)) throw DomainError("ideal is not m-primary in R");
  return full;
}

// Runs body(i) for i < n, over `jobs` OpenMP threads when jobs > 1, and
// rethrows the first failure in index order.
template <class F>
void for_each_index(std::size_t n, int jobs, F&& body) {
  std::vector<std::exception_ptr> errors(n);
  if (jobs > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::size_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::uint64_t q) {
  Monomial m(n);
  bool one = true;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = static_cast<std::uint32_t>(rng() % q);
    m.set(i, v);
    one = one && v == 0;
  }
  if (one) m.set(rng() % n, 1);
  return m;
}

Ideal probe_ideal(const RingPresentation& ring, unsigned e, const std::vector<Polynomial>& extra) {
  const PolyRingPtr& S = ring.poly_ring_ptr();
  const auto q = static_cast<std::uint32_t>(prime_power(ring.characteristic(), e));
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < S->nvars(); ++i) gens.push_back(S->term(S->variable_monomial(i, q)));
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(S, std::move(gens));
}

struct SampleResult {
  std::vector<ProbeCase> cases;
};

SampleResult run_sample(const RingPresentation& ring, unsigned e, std::uint64_t sample, const ProbeOptions& opt) {
  const std::uint32_t p = ring.characteristic();
  const std::size_t d = ring.dimension();
  auto extra = probe_generators(ring, e, sample, opt);
  Ideal I = ring.with_relations(probe_ideal(ring, e, extra));
  I.basis();
  std::uint64_t len = quotient_length(ring, I);
  SampleResult out;
  for (unsigned ep : opt.e_prime_values) {
    std::uint64_t bl = bracket_length(ring, I, ep);
    Rational scaled = Rational(BigInt(bl)) / rational_pow(p, static_cast<unsigned>(ep * d));
    Rational disc = abs(Rational(BigInt(len)) - scaled) / rational_pow(p, static_cast<unsigned>(e * (d - 1)));
    out.cases.push_back(ProbeCase{e, ep, sample, extra, len, bl, disc});
  }
  return out;
}

ProbeReport run_probe(const RingPresentation& ring, const ProbeOptions& opt, int jobs) {
  if (ring.dimension() == 0) throw DomainError("the uniform-constant probe needs d >= 1");
  if (opt.samples == 0) throw DomainError("the probe needs at least one sample");
  struct Task {
    unsigned e;
    std::uint64_t sample;
  };
  std::vector<Task> tasks;
  for (unsigned e : opt.e_values)
    for (std::uint64_t s = 0; s < opt.samples; ++s) tasks.push_back({e, s});
  ring.defining_ideal().basis();
  std::vector<SampleResult> results(tasks.size());
  for_each_index(tasks.size(), jobs,
                 [&](std::size_t i) { results[i] = run_sample(ring, tasks[i].e, tasks[i].sample, opt); });

  ProbeReport report;
  std::size_t k = 0;
  for (unsigned e : opt.e_values) {
    ProbeLevel level;
    level.e = e;
    bool first = true;
    for (std::uint64_t s = 0; s < opt.samples; ++s, ++k)
      for (auto& c : results[k].cases)
        if (first || c.discrepancy > level.empirical_C) {
          level.empirical_C = c.discrepancy;
          level.worst = c;
          first = false;
        }
    if (report.levels.empty() || level.empirical_C > report.empirical_C) {
      report.empirical_C = level.empirical_C;
      report.worst = level.worst;
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace

std::uint64_t hk_function(const RingPresentation& ring, const Ideal& I, unsigned e, int threads) {
  require_m_primary(ring.with_relations(I));
  return bracket_length(ring, I, e, threads);
}

HKTable hk_estimate(const RingPresentation& ring, const Ideal& I, unsigned e_max, int jobs) {
  if (e_max < 2) throw DomainError("hk estimate needs e_max >= 2");
  const std::uint32_t p = ring.characteristic();
  const std::size_t d = ring.dimension();
  Ideal full = ring.with_relations(I);
  require_m_primary(full);
  HKTable t;
  t.rows.resize(e_max);
  for_each_index(e_max, jobs, [&](std::size_t i) {
    auto e = static_cast<unsigned>(i + 1);
    HKRow& r = t.rows[i];
    r.e = e;
    r.q = prime_power(p, e);
    r.length = hk_function(ring, full, e);
  });
  for (auto& r : t.rows) r.normalized = normalize(r.length, p, r.e, d);

  Rational last_delta;
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
    last_delta = t.rows[i + 1].normalized - t.rows[i].normalized;
    Rational c = abs(last_delta) * rational_pow(p, t.rows[i].e);
    if (c > t.fitted_C) t.fitted_C = c;
  }
  const Rational& nE = t.rows.back().normalized;
  t.error_bound = t.fitted_C * p / (rational_pow(p, e_max) * (p - 1));
  Rational est = nE + last_delta / (p - 1);
  if (est < nE - t.error_bound) est = nE - t.error_bound;
  if (est > nE + t.error_bound) est = nE + t.error_bound;
  t.estimate = est;
  t.exact = t.rows[t.rows.size() - 2].normalized == nE;
  return t;
}

SplittingRecord f_signature_estimate(const RingPresentation& ring, unsigned e_max, const SignatureOptions& opt) {
  if (e_max < 2) throw DomainError("F-signature estimate needs e_max >= 2");
  const std::uint32_t p = ring.characteristic();
  const std::size_t d = ring.dimension();
  auto records = splitting_ideals(ring, e_max);
  SplittingRecord out;
  out.method = splitting_method_label(ring);
  out.dimension = d;
  out.rows.resize(e_max);
  Ideal m = Ideal::maximal(ring.poly_ring_ptr());
  for_each_index(e_max, opt.jobs, [&](std::size_t i) {
    const auto& rec = records[i];
    SplittingRow& r = out.rows[i];
    r.e = rec.e;
    r.q = rec.q;
    r.a_e = rec.a_e;
    r.bracket = rec.a_e == 0 ? 0 : bracket_length(ring, rec.ideal, 1);
    r.m_length = bracket_length(ring, m, rec.e);
  });
  for (auto& r : out.rows) {
    r.lower = normalize(r.a_e, p, r.e, d);
    r.upper = normalize(r.bracket, p, r.e + 1, d);
  }
  const auto& last = out.rows.back();
  const auto& prev = out.rows[out.rows.size() - 2];
  Rational gap = abs(last.lower - prev.lower);
  out.s_lower = last.lower;
  out.s_upper = last.upper;
  out.flat = gap < opt.tolerance;
  if (out.flat) {
    out.s_estimate = last.lower;
    out.s_error = gap;
  } else {
    out.s_estimate = (last.lower + last.upper) / 2;
    out.s_error = abs(last.upper - last.lower) / 2;
    // Geometric tail of the lower sequence beyond e_max.
    Rational tail = gap / (p - 1);
    if (tail > out.s_error) out.s_error = tail;
  }
  out.prime = splitting_prime_approx(ring, records);
  return out;
}

SplittingRecord f_splitting_ratio_estimate(const RingPresentation& ring, unsigned e_max, const SignatureOptions& opt) {
  SplittingRecord out = f_signature_estimate(ring, e_max, opt);
  const SplittingPrimeApprox& P = *out.prime;
  out.unstable = !P.stabilized;
  const auto& last = out.rows.back();
  if (P.P.is_unit()) {
    out.sdim.reset();
    out.r_F_estimate = 0;
    return out;
  }
  out.sdim = P.stabilized ? krull_dimension(P.P) : out.dimension;
  out.r_F_estimate = Rational(BigInt(last.a_e)) /
                     rational_pow(ring.characteristic(), static_cast<unsigned>(last.e * *out.sdim));
  return out;
}

GapReport verify_hk_gap(const RingPresentation& ring, const Ideal& I, const Ideal& J, unsigned e_max,
                        const SignatureOptions& opt) {
  // Validate before paying for the signature.
  Ideal Ifull = ring.with_relations(I);
  Ideal Jfull = ring.with_relations(J);
  require_m_primary(Ifull);
  require_m_primary(Jfull);
  if (!Jfull.contains(Ifull)) throw DomainError("gap check needs I contained in J");
  if (Ifull.contains(Jfull)) throw DomainError("gap check needs I strictly smaller than J");
  return verify_hk_gap(ring, I, J, e_max, f_signature_estimate(ring, e_max, opt), opt.jobs);
}

GapReport verify_hk_gap(const RingPresentation& ring, const Ideal& I, const Ideal& J, unsigned e_max,
                        const SplittingRecord& signature, int jobs) {
  Ideal Ifull = ring.with_relations(I);
  Ideal Jfull = ring.with_relations(J);
  if (!Jfull.contains(Ifull)) throw DomainError("gap check needs I contained in J");
  GapReport g;
  g.colength_I = quotient_length(ring, Ifull);
  g.colength_J = quotient_length(ring, Jfull);
  if (g.colength_I <= g.colength_J) throw DomainError("gap check needs I strictly smaller than J");
  g.hk_I = hk_estimate(ring, Ifull, e_max, jobs);
  g.hk_J = hk_estimate(ring, Jfull, e_max, jobs);
  Rational len(BigInt(g.colength_I - g.colength_J));
  g.lhs = (g.hk_I.estimate - g.hk_J.estimate) / len;
  g.lhs_error = (g.hk_I.error_bound + g.hk_J.error_bound) / len;
  g.s_estimate = signature.s_estimate;
  g.s_error = signature.s_error;
  g.holds = g.lhs + g.lhs_error >= g.s_estimate - g.s_error;
  return g;
}

std::vector<Polynomial> probe_generators(const RingPresentation& ring, unsigned e, std::uint64_t sample,
                                         const ProbeOptions& opt) {
  const PolyRing& S = ring.poly_ring();
  const std::size_t n = S.nvars();
  const std::uint64_t q = prime_power(ring.characteristic(), e);
  std::mt19937_64 rng(mix_seed(opt.seed, e, sample));
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < opt.pool_size; ++k) {
    Monomial m = random_monomial(rng, n, q);
    if (rng() & 1) out.push_back(S.term(m));
  }
  if (opt.binomials && (rng() & 1)) {
    Monomial a = random_monomial(rng, n, q);
    Monomial b = random_monomial(rng, n, q);
    auto c = static_cast<Coeff>(1 + rng() % (ring.characteristic() - 1));
    Polynomial g = S.add(S.term(a), S.term(b, c));
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

ProbeReport uniform_constant_probe(const RingPresentation& ring, const ProbeOptions& opt) {
  return run_probe(ring, opt, opt.jobs > 0 ? opt.jobs : 1);
}

ProbeReport uniform_constant_probe_serial(const RingPresentation& ring, const ProbeOptions& opt) {
  return run_probe(ring, opt, 1);
}

}  // namespace fsig
