#include "fsig/cli/commands.hpp"

#include <chrono>
#include <optional>

#include <CLI11.hpp>

#include "fsig/cli/cache.hpp"
#include "fsig/cli/report.hpp"
#include "fsig/cli/ring_spec.hpp"
#include "fsig/error.hpp"
#include "fsig/frobenius.hpp"
#include "fsig/hk.hpp"
#include "fsig/ideal_ops.hpp"
#include "fsig/parser.hpp"

#ifndef FSIG_GOLDEN_FILE
#define FSIG_GOLDEN_FILE "tests/golden/golden_values.txt"
#endif

namespace fsig::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "usage"; }
};

struct Options {
  std::string ring_path;
  std::vector<std::string> ideals;
  unsigned emax = 3;
  unsigned eprime = 2;
  unsigned ecap = 4;
  std::uint64_t samples = 50;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  int jobs = 1;
  std::string cache = "on";
  bool timing = false;
  std::string route = "auto";
  std::string golden = FSIG_GOLDEN_FILE;
};

Ideal parse_ideal(const RingPresentation& R, const std::string& text) {
  try {
    return R.ideal_from(parse_polynomial_list(text, R.poly_ring()));
  } catch (const ParseError& e) {
    throw UsageError(std::string("--ideal: ") + e.what());
  }
}

Json lengths_rows(const HKTable& t, const char* tag = nullptr) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row = Json::object();
    if (tag) row["ideal"] = tag;
    row["e"] = r.e;
    row["q"] = r.q;
    row["length"] = r.length;
    row["normalized"] = rational_json(r.normalized);
    row["normalized_decimal"] = real_json(r.normalized);
    rows.push_back(row);
  }
  return rows;
}

Json signature_rows(const SplittingRecord& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    Json row = Json::object();
    row["e"] = r.e;
    row["q"] = r.q;
    row["a_e"] = r.a_e;
    row["lower"] = rational_json(r.lower);
    row["lower_decimal"] = real_json(r.lower);
    row["bracket_length"] = r.bracket;
    row["upper"] = rational_json(r.upper);
    row["upper_decimal"] = real_json(r.upper);
    row["m_bracket_length"] = r.m_length;
    rows.push_back(row);
  }
  return rows;
}

void signature_estimates(const SplittingRecord& s, Report& rep) {
  rep.estimates["method"] = s.method;
  rep.estimates["dimension"] = s.dimension;
  rep.estimates["s"] = real_json(s.s_estimate);
  rep.estimates["s_rational"] = rational_json(s.s_estimate);
  rep.estimates["s_lower"] = real_json(s.s_lower);
  rep.estimates["s_upper"] = real_json(s.s_upper);
  rep.estimates["flat"] = s.flat;
  rep.error_bounds["s"] = real_json(s.s_error);
}

SplittingRoute parse_route(const std::string& r) {
  if (r == "auto") return SplittingRoute::Automatic;
  if (r == "general") return SplittingRoute::General;
  if (r == "direct") return SplittingRoute::HypersurfaceDirect;
  if (r == "recursive") return SplittingRoute::HypersurfaceRecursive;
  throw UsageError("--route must be auto, general, direct or recursive");
}

void check_levels(const Options& o, unsigned minimum) {
  if (o.emax < minimum) throw UsageError("--emax must be at least " + std::to_string(minimum));
  if (o.emax > o.ecap)
    throw UsageError("--emax " + std::to_string(o.emax) + " exceeds the level cap " + std::to_string(o.ecap) +
                     " (raise with --ecap)");
}

Report cmd_hk(const RingPresentation& R, const Options& o) {
  check_levels(o, 2);
  if (o.ideals.size() != 1) throw UsageError("hk needs exactly one --ideal");
  Report rep{"hk"};
  rep.parameters["ideal"] = o.ideals[0];
  rep.parameters["emax"] = o.emax;
  HKTable t = hk_estimate(R, parse_ideal(R, o.ideals[0]), o.emax, o.jobs);
  rep.rows = lengths_rows(t);
  rep.estimates["e_hk"] = real_json(t.estimate);
  rep.estimates["e_hk_rational"] = rational_json(t.estimate);
  rep.estimates["exact"] = t.exact;
  rep.error_bounds["e_hk"] = real_json(t.error_bound);
  rep.error_bounds["fitted_C"] = real_json(t.fitted_C);
  return rep;
}

Report cmd_splitnum(const RingPresentation& R, const Options& o) {
  check_levels(o, 1);
  Report rep{"splitnum"};
  rep.parameters["emax"] = o.emax;
  rep.parameters["route"] = o.route;
  auto records = splitting_ideals(R, o.emax, parse_route(o.route), o.jobs);
  const std::size_t d = R.dimension();
  for (const auto& r : records) {
    Json row = Json::object();
    row["e"] = r.e;
    row["q"] = r.q;
    row["a_e"] = r.a_e;
    Rational lower = Rational(r.a_e) / rational_pow(r.q, static_cast<unsigned>(d));
    row["normalized"] = rational_json(lower);
    row["normalized_decimal"] = real_json(lower);
    rep.rows.push_back(row);
  }
  rep.estimates["method"] = records.empty() ? splitting_method_label(R) : records.front().method;
  rep.estimates["dimension"] = d;
  return rep;
}

Report cmd_fsig(const RingPresentation& R, const Options& o) {
  check_levels(o, 2);
  Report rep{"fsig"};
  rep.parameters["emax"] = o.emax;
  SignatureOptions so;
  so.jobs = o.jobs;
  SplittingRecord s = f_signature_estimate(R, o.emax, so);
  rep.rows = signature_rows(s);
  signature_estimates(s, rep);
  return rep;
}

Report cmd_fpure(const RingPresentation& R, const Options&) {
  Report rep{"fpure"};
  std::uint64_t a1 = splitting_number(R, 1);
  rep.estimates["f_pure"] = a1 > 0;
  rep.estimates["a1"] = a1;
  return rep;
}

Json prime_json(const RingPresentation& R, const SplittingPrimeApprox& P) {
  Json j = Json::object();
  j["generators"] = polynomials_json(P.P.basis(), R.poly_ring());
  j["unit"] = P.P.is_unit();
  j["stabilized"] = P.stabilized;
  j["e_max"] = P.e_max;
  return j;
}

Report cmd_sprime(const RingPresentation& R, const Options& o) {
  check_levels(o, 2);
  Report rep{"sprime"};
  rep.parameters["emax"] = o.emax;
  auto records = splitting_ideals(R, o.emax, SplittingRoute::Automatic, o.jobs);
  for (const auto& r : records) {
    Json row = Json::object();
    row["e"] = r.e;
    row["a_e"] = r.a_e;
    row["generators"] = polynomials_json(r.ideal.basis(), R.poly_ring());
    rep.rows.push_back(row);
  }
  SplittingPrimeApprox P = splitting_prime_approx(R, records);
  rep.estimates["prime"] = prime_json(R, P);
  if (P.P.is_unit())
    rep.estimates["dimension"] = nullptr;
  else
    rep.estimates["dimension"] = krull_dimension(P.P);
  return rep;
}

Report cmd_ratio(const RingPresentation& R, const Options& o) {
  check_levels(o, 2);
  Report rep{"ratio"};
  rep.parameters["emax"] = o.emax;
  SignatureOptions so;
  so.jobs = o.jobs;
  SplittingRecord s = f_splitting_ratio_estimate(R, o.emax, so);
  rep.rows = signature_rows(s);
  signature_estimates(s, rep);
  rep.estimates["prime"] = prime_json(R, *s.prime);
  if (s.sdim)
    rep.estimates["sdim"] = *s.sdim;
  else
    rep.estimates["sdim"] = nullptr;
  rep.estimates["r_F"] = real_json(s.r_F_estimate);
  rep.estimates["r_F_rational"] = rational_json(s.r_F_estimate);
  rep.estimates["unstable"] = s.unstable;
  return rep;
}

Report cmd_gap(const RingPresentation& R, const Options& o) {
  check_levels(o, 2);
  if (o.ideals.size() != 2) throw UsageError("gap needs --ideal twice: the smaller ideal I, then J");
  Report rep{"gap"};
  rep.parameters["ideal_I"] = o.ideals[0];
  rep.parameters["ideal_J"] = o.ideals[1];
  rep.parameters["emax"] = o.emax;
  SignatureOptions so;
  so.jobs = o.jobs;
  GapReport g = verify_hk_gap(R, parse_ideal(R, o.ideals[0]), parse_ideal(R, o.ideals[1]), o.emax, so);
  rep.rows = lengths_rows(g.hk_I, "I");
  for (auto& row : lengths_rows(g.hk_J, "J")) rep.rows.push_back(row);
  rep.estimates["e_hk_I"] = real_json(g.hk_I.estimate);
  rep.estimates["e_hk_J"] = real_json(g.hk_J.estimate);
  rep.estimates["colength_I"] = g.colength_I;
  rep.estimates["colength_J"] = g.colength_J;
  rep.estimates["lhs"] = real_json(g.lhs);
  rep.estimates["lhs_rational"] = rational_json(g.lhs);
  rep.estimates["s"] = real_json(g.s_estimate);
  rep.estimates["holds"] = g.holds;
  rep.error_bounds["lhs"] = real_json(g.lhs_error);
  rep.error_bounds["s"] = real_json(g.s_error);
  rep.error_bounds["e_hk_I"] = real_json(g.hk_I.error_bound);
  rep.error_bounds["e_hk_J"] = real_json(g.hk_J.error_bound);
  return rep;
}

Report cmd_probe(const RingPresentation& R, const Options& o) {
  check_levels(o, 1);
  if (!o.seed) throw UsageError("probe needs --seed");
  Report rep{"probe"};
  ProbeOptions po;
  po.e_values.clear();
  po.e_prime_values.clear();
  for (unsigned e = 1; e <= o.emax; ++e) po.e_values.push_back(e);
  for (unsigned e = 1; e <= o.eprime; ++e) po.e_prime_values.push_back(e);
  po.samples = o.samples;
  po.seed = *o.seed;
  po.jobs = o.jobs;
  rep.parameters["emax"] = o.emax;
  rep.parameters["eprime"] = o.eprime;
  rep.parameters["samples"] = o.samples;
  rep.parameters["seed"] = *o.seed;
  ProbeReport pr = uniform_constant_probe(R, po);
  auto case_json = [&](const ProbeCase& c) {
    Json j = Json::object();
    j["e"] = c.e;
    j["e_prime"] = c.e_prime;
    j["sample"] = c.sample;
    j["generators"] = polynomials_json(c.generators, R.poly_ring());
    j["length"] = c.length;
    j["bracket_length"] = c.bracket_length;
    j["discrepancy"] = rational_json(c.discrepancy);
    return j;
  };
  Rational first, worst_ratio = 0;
  for (const auto& lv : pr.levels) {
    Json row = Json::object();
    row["e"] = lv.e;
    row["empirical_C"] = real_json(lv.empirical_C);
    row["empirical_C_rational"] = rational_json(lv.empirical_C);
    row["worst"] = case_json(lv.worst);
    rep.rows.push_back(row);
    if (lv.e == po.e_values.front()) first = lv.empirical_C;
  }
  bool bounded = true;
  for (const auto& lv : pr.levels)
    if (lv.e != po.e_values.front() && lv.empirical_C > 2 * first) bounded = false;
  rep.estimates["empirical_C"] = real_json(pr.empirical_C);
  rep.estimates["worst"] = case_json(pr.worst);
  rep.estimates["within_twice_first_level"] = bounded;
  return rep;
}

Report cmd_regular(const RingPresentation& R, const Options&) {
  Report rep{"regular"};
  KunzReport k = kunz_regularity(R);
  rep.estimates["regular"] = k.regular;
  rep.estimates["length"] = k.length;
  rep.estimates["expected"] = k.expected;
  rep.estimates["dimension"] = k.dimension;
  return rep;
}

Report cmd_oracle_check(const Options& o, bool& all_match) {
  Report rep{"oracle-check"};
  rep.parameters["golden"] = o.golden;
  GoldenValues g = GoldenValues::load(o.golden);
  std::uint64_t checked = 0, mismatches = 0;
  for (const auto& c : golden_checks()) {
    if (!g.has(c.id)) continue;
    Json row = Json::object();
    row["id"] = c.id;
    row["expected"] = g.text(c.id);
    std::string actual = c.compute();
    row["actual"] = actual;
    bool ok = actual == g.text(c.id);
    row["match"] = ok;
    rep.rows.push_back(row);
    ++checked;
    if (!ok) ++mismatches;
  }
  rep.estimates["checked"] = checked;
  rep.estimates["mismatches"] = mismatches;
  rep.estimates["golden_entries"] = g.entries().size();
  all_match = mismatches == 0;
  rep.estimates["all_match"] = all_match;
  return rep;
}

void error_line(std::ostream& err, const char* kind, const std::string& message, int code) {
  Json j = Json::object();
  j["error"] = kind;
  j["message"] = message;
  j["exit"] = code;
  err << j.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fsig-lab: Frobenius invariants of F_p[x]/a at the origin"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_ring) {
    if (needs_ring) sub->add_option("--ring", o.ring_path, "ring spec file")->required();
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--jobs", o.jobs, "OpenMP threads")->check(CLI::Range(1, 1024));
    sub->add_option("--cache", o.cache, "on or off")->check(CLI::IsMember({"on", "off"}));
    sub->add_flag("--timing", o.timing, "add wall-clock timing to the report");
  };
  auto levels = [&](CLI::App* sub) {
    sub->add_option("--emax", o.emax, "largest Frobenius level e");
    sub->add_option("--ecap", o.ecap, "level cap guarding against runaway staircases");
  };

  auto* hk = app.add_subcommand("hk", "Hilbert-Kunz rows and e_HK estimate");
  common(hk, true);
  levels(hk);
  hk->add_option("--ideal", o.ideals, "generators g1,g2,...")->required();

  auto* splitnum = app.add_subcommand("splitnum", "splitting numbers a_e");
  common(splitnum, true);
  levels(splitnum);
  splitnum->add_option("--route", o.route, "auto, general, direct or recursive");

  auto* fsig = app.add_subcommand("fsig", "F-signature estimate");
  common(fsig, true);
  levels(fsig);

  auto* fpure = app.add_subcommand("fpure", "F-purity via a_1 > 0");
  common(fpure, true);

  auto* sprime = app.add_subcommand("sprime", "splitting prime approximation");
  common(sprime, true);
  levels(sprime);

  auto* ratio = app.add_subcommand("ratio", "F-splitting ratio estimate");
  common(ratio, true);
  levels(ratio);

  auto* gap = app.add_subcommand("gap", "Hilbert-Kunz gap inequality check");
  common(gap, true);
  levels(gap);
  gap->add_option("--ideal", o.ideals, "I then J, with I strictly inside J")->required();

  auto* probe = app.add_subcommand("probe", "uniform constant probe");
  common(probe, true);
  levels(probe);
  probe->add_option("--eprime", o.eprime, "largest inner level e'");
  probe->add_option("--samples", o.samples, "samples per level")->check(CLI::PositiveNumber);
  probe->add_option("--seed", o.seed, "random seed")->required();

  auto* regular = app.add_subcommand("regular", "Kunz regularity test");
  common(regular, true);

  auto* oracle = app.add_subcommand("oracle-check", "compare the engine with the frozen golden values");
  common(oracle, false);
  oracle->add_option("--golden", o.golden, "golden values file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", e.what(), 2);
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    Timing timing;
    timing.enabled = o.timing;
    int code = 0;
    Report rep;
    std::optional<RingPresentation> R;
    if (oracle->parsed()) {
      bool all = true;
      rep = cmd_oracle_check(o, all);
      code = all ? 0 : 1;
    } else {
      R.emplace(load_ring_spec(o.ring_path));
      Report request;
      using Cmd = Report (*)(const RingPresentation&, const Options&);
      Cmd cmd = nullptr;
      std::string name;
      for (auto [sub, fn] : std::initializer_list<std::pair<CLI::App*, Cmd>>{
               {hk, cmd_hk}, {splitnum, cmd_splitnum}, {fsig, cmd_fsig}, {fpure, cmd_fpure}, {sprime, cmd_sprime},
               {ratio, cmd_ratio}, {gap, cmd_gap}, {probe, cmd_probe}, {regular, cmd_regular}})
        if (sub->parsed()) cmd = fn, name = sub->get_name();
      ReportCache cache = ReportCache::from_environment(o.cache == "on");
      if (cache.active()) {
        // Keyed on every option that can influence a result.
        request.command = name;
        request.parameters["ideals"] = o.ideals;
        request.parameters["emax"] = o.emax;
        request.parameters["eprime"] = o.eprime;
        request.parameters["samples"] = o.samples;
        request.parameters["seed"] = o.seed ? Json(*o.seed) : Json(nullptr);
        request.parameters["route"] = o.route;
        const std::string key = ReportCache::key(fingerprint(*R), request);
        if (auto hit = cache.load(key, request)) {
          rep = *hit;
          timing.cache_hit = true;
        } else {
          rep = cmd(*R, o);
          cache.store(key, rep);
        }
      } else {
        rep = cmd(*R, o);
      }
    }
    timing.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.format == "csv")
      write_csv(out, rep);
    else
      write_json(out, envelope(rep, R ? &*R : nullptr, timing));
    return code;
  } catch (const UsageError& e) {
    error_line(err, "usage", e.what(), 2);
    return 2;
  } catch (const Error& e) {
    error_line(err, e.kind(), e.what(), 1);
    return 1;
  } catch (const std::exception& e) {
    error_line(err, "internal", e.what(), 1);
    return 1;
  }
}

}  // namespace fsig::cli
