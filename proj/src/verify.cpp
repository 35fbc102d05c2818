#include "chiy/verify.hpp"

#include <chrono>
#include <iostream>

#include "chiy/blowup_factor.hpp"
#include "chiy/errors.hpp"
#include "chiy/rank1.hpp"

namespace chiy {

json specialization_to_json(const Specialization& spec) {
  json e = json::array();
  for (const auto& v : spec.e) e.push_back(v.to_string());
  return {{"seed", spec.seed}, {"t1", spec.t1.to_string()}, {"t2", spec.t2.to_string()}, {"e", std::move(e)},
          {"y", to_string(spec.y_mode)}};
}

std::vector<std::uint64_t> default_seeds(std::size_t count, std::uint64_t base) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(base + i);
  return out;
}

json VerificationReport::to_json(bool include_timing) const {
  json out = {{"schema", kReportSchema}, {"check", check},          {"parameters", parameters},
              {"outcome", pass ? "pass" : "fail"}, {"conventions", conventions}, {"details", details}};
  if (include_timing) out["elapsed_ms"] = elapsed_ms;
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json optional_exponent(const std::optional<int>& e) { return e ? json(*e) : json(nullptr); }

struct Comparison {
  bool pass = true;
  json detail;
};

// Coefficient-wise comparison through q^through; a failure records both sides at the first bad exponent.
template <CoefficientRing C>
Comparison compare(const QSeries<C>& actual, const QSeries<C>& expected, int through) {
  const auto bad = first_mismatch(actual, expected, through);
  Comparison out;
  out.pass = !bad.has_value();
  out.detail = {{"pass", out.pass}, {"through", through}, {"first_mismatch", optional_exponent(bad)}};
  if (bad) {
    out.detail["actual"] = actual.coefficient(*bad).to_string();
    out.detail["expected"] = expected.coefficient(*bad).to_string();
  }
  return out;
}

void validate(const VerifyOptions& o) {
  if (o.rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (o.k < 0 || o.k >= o.rank) throw std::invalid_argument("k must satisfy 0 <= k < rank");
  if (o.order < 0) throw std::invalid_argument("order must be nonnegative");
  if (o.seeds.empty()) throw std::invalid_argument("at least one seed is required");
}

json parameters_json(const VerifyOptions& o) {
  return {{"rank", o.rank}, {"k", o.k}, {"order", o.order}, {"seeds", o.seeds},
          {"y", to_string(o.y_mode)}, {"mode", to_string(o.mode)}};
}

json base_conventions() {
  return {{"grading", "q^(2r*sum(|Y_i|+|Z_i|) + sum_{i<j}(k_i-k_j)^2) on the blow-up, q^(2r*sum|Y_i|) on P^2"},
          {"order", "inclusive: coefficients q^e for e <= order are compared"},
          {"theta", "(x - y)/(x - 1)"},
          {"limit", "e_r -> 0, ..., e_1 -> 0"},
          {"prng", kSpecializationPrng}};
}

struct SeedLog {
  std::uint64_t requested = 0;
  std::uint64_t used = 0;
  json resampled = json::array();

  json to_json() const { return {{"requested_seed", requested}, {"used_seed", used}, {"resampled", resampled}}; }
};

// Runs fn(spec); a degenerate specialization is retried with the next seed.
template <class F>
auto with_resampling(int rank, std::uint64_t seed, const YMode& y_mode, int max_resamples, SeedLog& log, F&& fn) {
  log.requested = seed;
  std::uint64_t s = seed;
  for (int attempt = 0;; ++attempt) {
    const Specialization spec = sample_specialization(rank, s, y_mode);
    try {
      log.used = s;
      return fn(spec);
    } catch (const DegenerateSpecialization& e) {
      log.resampled.push_back({{"seed", s}, {"weight", e.weight()}});
      std::clog << "chiy: seed " << s << " is degenerate at weight " << e.weight();
      if (attempt >= max_resamples) {
        std::clog << ", giving up after " << max_resamples << " resamples\n";
        throw;
      }
      std::clog << ", resampling with seed " << s + 1 << "\n";
      ++s;
    }
  }
}

template <CoefficientField C>
struct BlowupRun {
  Specialization spec;
  GeneratingSeries<C> z;
  GeneratingSeries<C> zhat;
  QSeries<C> quotient;
};

template <CoefficientField C>
BlowupRun<C> compute_blowup(const VerifyOptions& o, const Specialization& spec, LocalizationMode mode) {
  SeriesRequest req{o.rank, o.k, z_max_n_for_order(o.rank, o.order), spec, mode, o.threads, o.cache, o.tangent_hook};
  BlowupRun<C> run;
  run.spec = spec;
  run.z = z_series<C>(req);
  req.max_n = zhat_max_n_for_order(o.rank, o.k, o.order);
  run.zhat = zhat_series<C>(req);
  run.quotient = run.zhat.series * run.z.series.inverse();
  return run;
}

template <CoefficientField C>
QSeries<C> yk_as(const YkRequest& req, const YMode& y_mode) {
  return yk_main(req).map([&](const YPoly& p) { return CoefficientTraits<C>::from_ypoly(p, y_mode); });
}

template <CoefficientField C>
VerificationReport main_theorem(const VerifyOptions& o) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "main_theorem";
  rep.parameters = parameters_json(o);
  rep.conventions = base_conventions();

  const auto yk_plus = yk_as<C>({o.rank, o.k, o.order, YSign::Plus}, o.y_mode);
  const auto yk_minus = yk_as<C>({o.rank, o.k, o.order, YSign::Minus}, o.y_mode);

  bool all_pass = true;
  bool plus_all = true;
  bool minus_all = true;
  std::optional<QSeries<C>> first_quotient;
  bool independent = true;
  json seeds = json::array();
  for (const auto seed : o.seeds) {
    SeedLog log;
    const auto run = with_resampling(o.rank, seed, o.y_mode, o.max_resamples, log,
                                     [&](const Specialization& spec) { return compute_blowup<C>(o, spec, o.mode); });
    const auto product = compare(run.zhat.series, yk_plus * run.z.series, o.order);
    const auto quotient = compare(run.quotient, yk_plus, o.order);
    const bool minus_ok = compare(run.quotient, yk_minus, o.order).pass;
    const bool pass = product.pass && quotient.pass;
    all_pass = all_pass && pass;
    plus_all = plus_all && quotient.pass;
    minus_all = minus_all && minus_ok;
    if (!first_quotient) {
      first_quotient = run.quotient;
    } else if (first_mismatch(*first_quotient, run.quotient, o.order)) {
      independent = false;
    }

    json entry = log.to_json();
    entry["specialization"] = specialization_to_json(run.spec);
    entry["product_check"] = product.detail;
    entry["quotient_check"] = quotient.detail;
    entry["fixed_points"] = {{"z", counts_to_json(run.z.fixed_points)}, {"zhat", counts_to_json(run.zhat.fixed_points)}};
    entry["pass"] = pass;
    seeds.push_back(std::move(entry));
  }
  rep.pass = all_pass && independent;
  rep.details = {{"seeds", std::move(seeds)},
                 {"specialization_independent", independent},
                 {"yk", series_to_json(yk_plus)},
                 {"quotient", series_to_json(first_quotient->truncated(o.order + 1))}};
  rep.conventions["y_sign"] = {{"plus_matches", plus_all}, {"minus_matches", minus_all}};
  rep.elapsed_ms = ms_since(start);
  return rep;
}

template <CoefficientField C>
VerificationReport limit_consistency(const VerifyOptions& o) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "limit_consistency";
  rep.parameters = parameters_json(o);
  rep.parameters.erase("mode");
  rep.conventions = base_conventions();
  const auto yk = yk_as<C>({o.rank, o.k, o.order, YSign::Plus}, o.y_mode);

  bool all_pass = true;
  json seeds = json::array();
  for (const auto seed : o.seeds) {
    SeedLog log;
    const auto [eq, lim, closed] = with_resampling(o.rank, seed, o.y_mode, o.max_resamples, log, [&](const Specialization& spec) {
      auto eq_run = compute_blowup<C>(o, spec, LocalizationMode::Equivariant);
      auto lim_run = compute_blowup<C>(o, spec, LocalizationMode::Limit);
      SeriesRequest req{o.rank, o.k, z_max_n_for_order(o.rank, o.order), spec, LocalizationMode::Limit, o.threads, nullptr, {}};
      auto closed_form = z_series_limit_closed<C>(req);
      return std::tuple{std::move(eq_run), std::move(lim_run), std::move(closed_form)};
    });
    const auto modes = compare(lim.quotient, eq.quotient, o.order);
    const auto limit_vs_yk = compare(lim.quotient, yk, o.order);
    const auto closed_form = compare(lim.z.series, closed, lim.z.series.order() - 1);
    const bool pass = modes.pass && limit_vs_yk.pass && closed_form.pass;
    all_pass = all_pass && pass;

    json entry = log.to_json();
    entry["specialization"] = specialization_to_json(eq.spec);
    entry["modes_agree"] = modes.detail;
    entry["limit_quotient_is_yk"] = limit_vs_yk.detail;
    entry["limit_z_closed_form"] = closed_form.detail;
    entry["pass"] = pass;
    seeds.push_back(std::move(entry));
  }
  rep.pass = all_pass;
  rep.details = {{"seeds", std::move(seeds)}, {"yk", series_to_json(yk)}};
  rep.elapsed_ms = ms_since(start);
  return rep;
}

template <CoefficientField C>
VerificationReport rank1(const VerifyOptions& o) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "rank1_product_identity";
  rep.parameters = {{"order", o.order}, {"seeds", o.seeds}, {"y", to_string(o.y_mode)}};
  rep.conventions = base_conventions();

  bool all_pass = true;
  bool independent = true;
  std::optional<QSeries<C>> first_lhs;
  json seeds = json::array();
  for (const auto seed : o.seeds) {
    SeedLog log;
    const auto check = with_resampling(1, seed, o.y_mode, o.max_resamples, log, [&](const Specialization& spec) {
      return std::pair{spec, verify_nekrasov_okounkov<C>(spec, o.order, o.threads, o.tangent_hook)};
    });
    all_pass = all_pass && check.second.pass();
    if (!first_lhs) {
      first_lhs = check.second.lhs;
    } else if (first_mismatch(*first_lhs, check.second.lhs, o.order)) {
      independent = false;
    }
    json entry = log.to_json();
    entry["specialization"] = specialization_to_json(check.first);
    entry["pass"] = check.second.pass();
    entry["identity"] = compare(check.second.lhs, check.second.rhs, o.order).detail;
    seeds.push_back(std::move(entry));
  }
  rep.pass = all_pass && independent;
  rep.details = {{"seeds", std::move(seeds)},
                 {"specialization_independent", independent},
                 {"lhs", series_to_json(first_lhs->truncated(o.order + 1))}};
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace

VerificationReport verify_main_theorem(const VerifyOptions& opts) {
  validate(opts);
  return is_symbolic(opts.y_mode) ? main_theorem<YRat>(opts) : main_theorem<Rational>(opts);
}

VerificationReport verify_limit_consistency(const VerifyOptions& opts) {
  validate(opts);
  return is_symbolic(opts.y_mode) ? limit_consistency<YRat>(opts) : limit_consistency<Rational>(opts);
}

VerificationReport verify_rank1(const VerifyOptions& opts) {
  if (opts.order < 0) throw std::invalid_argument("order must be nonnegative");
  if (opts.seeds.empty()) throw std::invalid_argument("at least one seed is required");
  return is_symbolic(opts.y_mode) ? rank1<YRat>(opts) : rank1<Rational>(opts);
}

VerificationReport verify_corollary(const VerifyOptions& opts) {
  validate(opts);
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "corollary";
  rep.parameters = parameters_json(opts);
  rep.parameters.erase("y");
  rep.conventions = base_conventions();
  const YkRequest yk_req{opts.rank, opts.k, opts.order, YSign::Plus};

  // Euler characteristic branch, y = 1.
  VerifyOptions euler = opts;
  euler.y_mode = NumericY{Rational(1)};
  const auto yk_e = yk_euler(yk_req);
  const bool yk_main_is_euler = !first_mismatch(yk_as<Rational>(yk_req, euler.y_mode), yk_e, opts.order);
  bool euler_pass = yk_main_is_euler;
  json euler_seeds = json::array();
  for (const auto seed : opts.seeds) {
    SeedLog log;
    const auto run = with_resampling(opts.rank, seed, euler.y_mode, opts.max_resamples, log,
                                     [&](const Specialization& spec) { return compute_blowup<Rational>(euler, spec, opts.mode); });
    const auto product = compare(run.zhat.series, yk_e * run.z.series, opts.order);
    // At y = 1 every theta factor is 1, so coefficients count fixed points.
    bool counts_ok = true;
    for (const auto& [e, n] : run.z.fixed_points) counts_ok = counts_ok && run.z.series.coefficient(e) == Rational(static_cast<long>(n));
    for (const auto& [e, n] : run.zhat.fixed_points)
      counts_ok = counts_ok && run.zhat.series.coefficient(e) == Rational(static_cast<long>(n));
    euler_pass = euler_pass && product.pass && counts_ok;
    json entry = log.to_json();
    entry["product_check"] = product.detail;
    entry["coefficients_count_fixed_points"] = counts_ok;
    euler_seeds.push_back(std::move(entry));
  }

  // Holomorphic Euler characteristic branch, y = 0.
  VerifyOptions hol = opts;
  hol.y_mode = NumericY{Rational(0)};
  const auto hol_factor = yk_hol(yk_req);
  bool hol_pass = true;
  json hol_seeds = json::array();
  for (const auto seed : opts.seeds) {
    SeedLog log;
    const auto run = with_resampling(opts.rank, seed, hol.y_mode, opts.max_resamples, log,
                                     [&](const Specialization& spec) { return compute_blowup<Rational>(hol, spec, opts.mode); });
    const auto quotient = compare(run.quotient, hol_factor.computed, opts.order);
    hol_pass = hol_pass && quotient.pass;
    json entry = log.to_json();
    entry["quotient_is_yk_at_y0"] = quotient.detail;
    hol_seeds.push_back(std::move(entry));
  }

  rep.pass = euler_pass && hol_pass;
  rep.details = {
      {"euler",
       {{"pass", euler_pass},
        {"yk_main_at_y1_equals_yk_euler", yk_main_is_euler},
        {"yk_euler", series_to_json(yk_e)},
        {"seeds", std::move(euler_seeds)}}},
      {"holomorphic",
       {{"pass", hol_pass},
        {"stated_value", hol_factor.stated.to_string()},
        {"computed_yk_at_y0", series_to_json(hol_factor.computed)},
        {"computed_terms", series_terms(hol_factor.computed)},
        {"documented_discrepancy", !hol_factor.agrees()},
        {"seeds", std::move(hol_seeds)}}}};
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace chiy
