#include "cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "chiy/blowup_factor.hpp"
#include "chiy/fixed_point_cache.hpp"
#include "chiy/genera.hpp"
#include "chiy/json_io.hpp"
#include "chiy/rank1.hpp"
#include "chiy/verify.hpp"

namespace chiy::cli {

namespace {

constexpr const char* kSeriesSchema = "chiy.series/1";
constexpr const char* kSuiteSchema = "chiy.suite/1";

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Context {
  CliConfig cfg;
  YMode y_mode;
  LocalizationMode mode = LocalizationMode::Equivariant;
  std::unique_ptr<FixedPointCache> cache;
  int order = 0;
};

void add_common(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--rank,-r", cfg.rank, "Rank r >= 1 (default 1)");
  sub->add_option("--k,-k", cfg.k, "Exceptional-curve degree, 0 <= k < r (default 0)");
  sub->add_option("--order,-N", cfg.order, "Highest q-exponent compared or printed (inclusive)");
  sub->add_option("--seeds", cfg.seed_count, "Number of seeds base, base+1, ... (default 5)");
  sub->add_option("--base-seed", cfg.base_seed, "First seed (default 1)");
  sub->add_option("--seed-list", cfg.seed_list, "Explicit comma-separated seeds")->delimiter(',');
  sub->add_option("--y", cfg.y, "'symbolic' or a rational value of y (default symbolic)");
  sub->add_option("--mode", cfg.mode, "equivariant | limit (default equivariant)")
      ->check(CLI::IsMember({"equivariant", "limit"}));
  sub->add_option("--output,-o", cfg.output, "Write JSON here instead of stdout");
  sub->add_option("--cache-dir", cfg.cache_dir, "Fixed-point cache directory")->envname("CHIY_CACHE_DIR");
  sub->add_option("--threads,-j", cfg.threads, "Worker threads (default 1)")->check(CLI::PositiveNumber);
  sub->add_flag("--timing", cfg.timing, "Include elapsed_ms in the JSON output");
}

Context make_context(const CliConfig& cfg) {
  Context ctx;
  ctx.cfg = cfg;
  if (cfg.rank < 1) throw UsageError("--rank must be at least 1");
  if (cfg.k < 0 || cfg.k >= cfg.rank) throw UsageError("--k must satisfy 0 <= k < rank");
  if (cfg.order < -1) throw UsageError("--order must be nonnegative");
  if (cfg.seed_list.empty() && cfg.seed_count == 0) throw UsageError("--seeds must be positive");
  try {
    ctx.y_mode = parse_y_mode(cfg.y);
  } catch (const std::exception&) {
    throw UsageError("--y must be 'symbolic' or a rational number, got '" + cfg.y + "'");
  }
  ctx.mode = parse_localization_mode(cfg.mode);
  if (!cfg.cache_dir.empty()) ctx.cache = std::make_unique<FixedPointCache>(cfg.cache_dir);
  ctx.order = cfg.order >= 0 ? cfg.order : default_order(cfg.subcommand, cfg.rank, cfg.k);
  return ctx;
}

VerifyOptions verify_options(const Context& ctx) {
  VerifyOptions o;
  o.rank = ctx.cfg.rank;
  o.k = ctx.cfg.k;
  o.order = ctx.order;
  o.seeds = ctx.cfg.seeds();
  o.y_mode = ctx.y_mode;
  o.mode = ctx.mode;
  o.threads = ctx.cfg.threads;
  o.cache = ctx.cache.get();
  return o;
}

json series_parameters(const Context& ctx) {
  return {{"rank", ctx.cfg.rank}, {"k", ctx.cfg.k}, {"order", ctx.order}, {"y", to_string(ctx.y_mode)},
          {"mode", to_string(ctx.mode)}};
}

template <CoefficientRing C>
json series_document(const std::string& kind, json parameters, const QSeries<C>& s) {
  return {{"schema", kSeriesSchema}, {"kind", kind},          {"parameters", std::move(parameters)},
          {"series", series_to_json(s)}, {"terms", series_terms(s)}};
}

template <CoefficientField C>
json generating_series(const Context& ctx, bool blowup) {
  const Specialization spec = sample_specialization(ctx.cfg.rank, ctx.cfg.seeds().front(), ctx.y_mode);
  SeriesRequest req{ctx.cfg.rank, ctx.cfg.k, 0, spec, ctx.mode, ctx.cfg.threads, ctx.cache.get(), {}};
  req.max_n = blowup ? zhat_max_n_for_order(req.rank, req.k, ctx.order) : z_max_n_for_order(req.rank, ctx.order);
  auto out = blowup ? zhat_series<C>(req) : z_series<C>(req);
  auto doc = series_document(blowup ? "zhat" : "z", series_parameters(ctx), out.series.truncated(ctx.order + 1));
  doc["parameters"]["max_n"] = req.max_n;
  doc["specialization"] = specialization_to_json(spec);
  doc["fixed_points"] = counts_to_json(out.fixed_points);
  return doc;
}

json compute_z(const Context& ctx, bool blowup) {
  return is_symbolic(ctx.y_mode) ? generating_series<YRat>(ctx, blowup) : generating_series<Rational>(ctx, blowup);
}

template <CoefficientField C>
json w_document(const Context& ctx) {
  const Specialization spec = sample_specialization(1, ctx.cfg.seeds().front(), ctx.y_mode);
  WRequest req{spec, parse_w_substitution(ctx.cfg.substitution), ctx.order, ctx.cfg.threads, {}};
  json params = {{"order", ctx.order}, {"y", to_string(ctx.y_mode)}, {"substitution", ctx.cfg.substitution}};
  auto doc = series_document("w", std::move(params), w_series<C>(req));
  doc["specialization"] = specialization_to_json(spec);
  return doc;
}

json compute_w(const Context& ctx) {
  return is_symbolic(ctx.y_mode) ? w_document<YRat>(ctx) : w_document<Rational>(ctx);
}

json compute_yk(const Context& ctx) {
  const YkRequest req{ctx.cfg.rank, ctx.cfg.k, ctx.order, YSign::Plus};
  json params = {{"rank", req.rank}, {"k", req.k}, {"order", req.order}, {"form", ctx.cfg.form}};
  const std::string& form = ctx.cfg.form;
  if (form == "main") return series_document("yk", std::move(params), yk_main(req));
  if (form == "gottsche") return series_document("yk", std::move(params), yk_gottsche(req));
  if (form == "euler") return series_document("yk", std::move(params), yk_euler(req));
  const auto hol = yk_hol(req);
  auto doc = series_document("yk", std::move(params), hol.computed);
  doc["stated_value"] = hol.stated.to_string();
  doc["documented_discrepancy"] = !hol.agrees();
  return doc;
}

VerificationReport run_check(const std::string& name, const VerifyOptions& o) {
  if (name == "verify-blowup") return verify_main_theorem(o);
  if (name == "verify-rank1") return verify_rank1(o);
  if (name == "verify-corollary") return verify_corollary(o);
  return verify_limit_consistency(o);
}

void summarize(std::ostream& err, const VerificationReport& rep) {
  err << "chiy: " << rep.check << " " << rep.parameters.dump() << ": " << (rep.pass ? "PASS" : "FAIL") << " ("
      << static_cast<long long>(rep.elapsed_ms) << " ms)\n";
}

void emit(const CliConfig& cfg, const json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + cfg.output);
  file << text;
}

int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const Context ctx = make_context(cfg);
  const std::string& sub = cfg.subcommand;
  if (sub == "compute-z" || sub == "compute-zhat") {
    emit(cfg, compute_z(ctx, sub == "compute-zhat"), out);
    return kExitPass;
  }
  if (sub == "compute-yk") {
    emit(cfg, compute_yk(ctx), out);
    return kExitPass;
  }
  if (sub == "compute-w") {
    emit(cfg, compute_w(ctx), out);
    return kExitPass;
  }
  const VerifyOptions opts = verify_options(ctx);
  if (sub == "verify-all") {
    json reports = json::array();
    bool pass = true;
    for (const char* name : {"verify-blowup", "verify-rank1", "verify-corollary", "verify-limits"}) {
      const auto rep = run_check(name, opts);
      summarize(err, rep);
      pass = pass && rep.pass;
      reports.push_back(rep.to_json(cfg.timing));
    }
    emit(cfg, {{"schema", kSuiteSchema}, {"outcome", pass ? "pass" : "fail"}, {"reports", std::move(reports)}}, out);
    return pass ? kExitPass : kExitFail;
  }
  const auto rep = run_check(sub, opts);
  summarize(err, rep);
  emit(cfg, rep.to_json(cfg.timing), out);
  return rep.pass ? kExitPass : kExitFail;
}

}  // namespace

std::vector<std::uint64_t> CliConfig::seeds() const { return seed_list.empty() ? default_seeds(seed_count, base_seed) : seed_list; }

int default_order(const std::string& subcommand, int rank, int k) {
  if (subcommand == "verify-rank1") return 8;
  if (subcommand != "verify-blowup" && subcommand != "verify-all") return 8;
  switch (rank) {
    case 1:
      return 16;
    case 2:
      return 16 + k;
    case 3:
      return 12 + k * (3 - k);
    default:
      return 4 * rank + k * (rank - k);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact verification of blow-up formulas for equivariant virtual chi_y-genera of framed sheaves", "chiy"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> subcommands = {
      {"compute-z", "Generating series Z on P^2 at one seeded specialization"},
      {"compute-zhat", "Generating series Zhat on the blow-up at one seeded specialization"},
      {"compute-yk", "Blow-up factor Y_k"},
      {"compute-w", "Rank-one series W with an optional (t1, t2) substitution"},
      {"verify-blowup", "Zhat = Y_k Z at every seed"},
      {"verify-rank1", "Rank-one product identity at every seed"},
      {"verify-corollary", "Euler characteristic (y = 1) and holomorphic (y = 0) branches"},
      {"verify-limits", "Equivariant and limit localization agree"},
      {"verify-all", "verify-blowup, verify-rank1, verify-corollary and verify-limits"},
  };
  for (const auto& [name, help] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, cfg);
    if (name == "compute-yk")
      sub->add_option("--form", cfg.form, "main | gottsche | euler | hol (default main)")
          ->check(CLI::IsMember({"main", "gottsche", "euler", "hol"}));
    if (name == "compute-w")
      sub->add_option("--substitution", cfg.substitution, "identity | t2/t1 | t1/t2 (default identity)")
          ->check(CLI::IsMember({"identity", "t2/t1", "t1/t2"}));
    sub->callback([&cfg, name = name] { cfg.subcommand = name; });
  }

  std::vector<const char*> argv{"chiy"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    return dispatch(cfg, out, err);
  } catch (const std::invalid_argument& e) {
    err << "chiy: usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "chiy: error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace chiy::cli
