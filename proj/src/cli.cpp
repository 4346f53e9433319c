#include "homonym/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <map>
#include <memory>
#include <numeric>
#include <optional>

#include <boost/math/distributions/chi_squared.hpp>
#include <CLI11.hpp>
#include <json.hpp>

#include "homonym/collision.hpp"
#include "homonym/distcore.hpp"
#include "homonym/error.hpp"
#include "homonym/extrapolate.hpp"
#include "homonym/ingest.hpp"
#include "homonym/io.hpp"
#include "homonym/pairs.hpp"

namespace homonym::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::vector<std::uint64_t> parse_grid(std::string_view spec) {
  auto bad = [&] { return Error(Errc::InvalidArgument, "bad grid spec '" + std::string(spec) + "'"); };
  auto number = [&](std::string_view text) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size()) throw bad();
    return v;
  };
  auto as_count = [&](double v) {
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e18) throw bad();
    return static_cast<std::uint64_t>(v);
  };

  std::vector<std::uint64_t> grid;
  if (spec.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    for (std::size_t pos = 0;;) {
      const std::size_t colon = spec.find(':', pos);
      parts.push_back(spec.substr(pos, colon - pos));
      if (colon == std::string_view::npos) break;
      pos = colon + 1;
    }
    if (parts.size() != 3) throw bad();
    const double start = as_count(number(parts[0]));
    const double stop = as_count(number(parts[1]));
    const std::uint64_t points = as_count(number(parts[2]));
    if (stop < start) throw bad();
    if (points == 1) {
      grid.push_back(static_cast<std::uint64_t>(start));
    } else {
      const double lo = std::log(start), hi = std::log(stop);
      for (std::uint64_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        const auto n = static_cast<std::uint64_t>(std::llround(std::exp(lo + t * (hi - lo))));
        if (grid.empty() || n > grid.back()) grid.push_back(n);
      }
      // Rounding must not move the end points.
      grid.front() = static_cast<std::uint64_t>(start);
      grid.back() = static_cast<std::uint64_t>(stop);
    }
  } else {
    for (std::size_t pos = 0;;) {
      const std::size_t comma = spec.find(',', pos);
      grid.push_back(as_count(number(spec.substr(pos, comma - pos))));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  }
  if (grid.empty()) throw bad();
  return grid;
}

namespace {

/// Run manifest. Records everything that determines the outputs; the output
/// directory and worker count are deliberately absent since neither does.
class Manifest {
 public:
  Manifest(std::string subcommand, std::uint64_t seed) {
    doc_["tool"] = "homonym";
    doc_["subcommand"] = std::move(subcommand);
    doc_["seed"] = seed;
    doc_["config"] = json::object();
    doc_["inputs"] = json::array();
    doc_["outputs"] = json::array();
  }

  json& config() { return doc_["config"]; }

  void input(const fs::path& path) {
    doc_["inputs"].push_back({{"path", path.string()}, {"sha256", sha256_file(path)}});
  }

  void output(const fs::path& dir, const std::string& name, std::string_view text) {
    write_text(dir / name, text);
    doc_["outputs"].push_back(name);
  }

  void finish(const fs::path& dir) { write_text(dir / "manifest.json", doc_.dump(2) + "\n"); }

 private:
  json doc_;
};

void prepare_out(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::FileUnreadable, "cannot create " + dir.string() + ": " + ec.message());
}

std::vector<std::uint64_t> sorted_desc(std::vector<std::uint64_t> counts, std::vector<std::size_t>* order) {
  std::vector<std::size_t> idx(counts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
  std::vector<std::uint64_t> out(counts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = counts[idx[i]];
  if (order) *order = std::move(idx);
  return out;
}

// ---------------------------------------------------------------- fit-zipf

struct FitZipfArgs {
  std::string freq;
  std::string out;
  std::uint64_t seed = 1;
};

int fit_zipf_cmd(const FitZipfArgs& args, std::ostream& out) {
  prepare_out(args.out);
  Manifest manifest("fit-zipf", args.seed);
  manifest.input(args.freq);

  FrequencyTable table = load_frequency_table(args.freq);
  manifest.output(args.out, "ingest_report.json", report_json(table.report));

  std::vector<std::size_t> order;
  const auto counts = sorted_desc(table.counts, &order);
  const ZipfFit fit = fit_zipf(counts);
  const LogLogFit loglog = fit_zipf_loglog(counts);

  json j;
  j["seed"] = args.seed;
  j["alpha"] = fit.alpha;
  j["k"] = fit.k;
  j["log_likelihood"] = fit.log_likelihood;
  j["normalizer"] = fit.normalizer;
  j["total"] = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  j["loglog_alpha"] = loglog.alpha;
  j["loglog_r_squared"] = loglog.r_squared;
  manifest.output(args.out, "zipf_fit.json", j.dump(2) + "\n");

  const double total = static_cast<double>(j["total"].get<std::uint64_t>());
  std::string csv = "rank,label,count,empirical,fitted\n";
  for (std::size_t r = 0; r < counts.size(); ++r) {
    csv += std::to_string(r + 1) + ',' + csv_field(table.labels[order[r]]) + ',' +
           std::to_string(counts[r]) + ',' + format_double(static_cast<double>(counts[r]) / total) +
           ',' + format_double(fit.pmf(r + 1)) + '\n';
  }
  manifest.output(args.out, "rank_frequency.csv", csv);
  manifest.config() = {{"freq", args.freq}};
  manifest.finish(args.out);
  out << "alpha=" << format_double(fit.alpha) << " k=" << fit.k << '\n';
  return kOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string pairs;
  std::string freq;
  std::vector<double> zipf;
  std::uint64_t uniform = 0;
  std::string mode = "pair";
  std::string grid = "10:100000:25";
  std::size_t replicates = 200;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  bool long_form = false;
  std::string out;
};

int simulate_cmd(const SimulateArgs& args, std::ostream& out) {
  const int sources = !args.pairs.empty() + !args.freq.empty() + !args.zipf.empty() + (args.uniform > 0);
  if (sources != 1) {
    throw Error(Errc::InvalidArgument, "give exactly one of --pairs, --freq, --zipf, --uniform");
  }
  if (!args.pairs.empty() && args.mode != "pair" && args.mode != "independent") {
    throw Error(Errc::InvalidArgument, "--mode must be 'pair' or 'independent'");
  }
  SimulationPlan plan;
  plan.n_grid = parse_grid(args.grid);
  plan.replicates = args.replicates;
  plan.seed = args.seed;
  plan.validate();

  prepare_out(args.out);
  Manifest manifest("simulate", args.seed);
  json& config = manifest.config();

  std::unique_ptr<LabelSource> source;
  if (!args.pairs.empty()) {
    manifest.input(args.pairs);
    PairRecords records = load_pair_records(args.pairs);
    manifest.output(args.out, "ingest_report.json", report_json(records.report));
    source = args.mode == "pair" ? empirical_pair_sampler(records.joint)
                                 : independent_product_sampler(records.joint);
    config["pairs"] = args.pairs;
    config["mode"] = args.mode;
  } else if (!args.freq.empty()) {
    manifest.input(args.freq);
    FrequencyTable table = load_frequency_table(args.freq);
    manifest.output(args.out, "ingest_report.json", report_json(table.report));
    auto dist = std::make_shared<const CategoricalDist>(
        table.labels, std::vector<double>(table.counts.begin(), table.counts.end()));
    source = std::make_unique<CategoricalSource>(dist, "freq(k=" + std::to_string(dist->size()) + ")");
    config["freq"] = args.freq;
  } else if (!args.zipf.empty()) {
    const double alpha = args.zipf[0];
    const double k = args.zipf[1];
    if (!(k >= 1.0) || k != std::floor(k)) throw Error(Errc::InvalidArgument, "--zipf k must be a positive integer");
    auto dist = std::make_shared<const CategoricalDist>(zipf_pmf(alpha, static_cast<std::size_t>(k)));
    source = std::make_unique<CategoricalSource>(
        dist, "zipf(alpha=" + format_double(alpha) + ",k=" + std::to_string(dist->size()) + ")");
    config["zipf"] = {{"alpha", alpha}, {"k", static_cast<std::uint64_t>(k)}};
  } else {
    auto dist = std::make_shared<const CategoricalDist>(uniform_dist(args.uniform));
    source = std::make_unique<CategoricalSource>(dist, "uniform(k=" + std::to_string(args.uniform) + ")");
    config["uniform"] = args.uniform;
  }
  config["grid"] = args.grid;
  config["n_grid"] = plan.n_grid;
  config["replicates"] = plan.replicates;
  config["source"] = source->describe();

  const CollisionCurve curve = estimate_curve(plan, *source, args.workers);
  manifest.output(args.out, "curve.csv", curve_csv(curve));
  if (args.long_form) manifest.output(args.out, "replicates.csv", curve_long_csv(curve));
  manifest.finish(args.out);
  out << "simulated " << curve.points.size() << " grid points from " << curve.source << '\n';
  return kOk;
}

// ------------------------------------------------------------- extrapolate

struct ExtrapolateArgs {
  std::string curve;
  std::string transform = "probit";
  std::vector<double> window{5000.0, 50000.0};
  std::vector<double> targets;
  bool weighted = false;
  std::uint64_t seed = 1;
  std::string out;
};

int extrapolate_cmd(const ExtrapolateArgs& args, std::ostream& out) {
  const auto transform = parse_transform(args.transform);
  if (!transform) throw Error(Errc::InvalidArgument, "--transform must be 'logit' or 'probit'");
  prepare_out(args.out);
  Manifest manifest("extrapolate", args.seed);
  manifest.input(args.curve);

  const CollisionCurve curve = read_curve_csv(args.curve);
  const FitWindow window{args.window[0], args.window[1]};
  const TransformFit fit = fit_transformed(curve, *transform, window, {.weighted = args.weighted});

  json j;
  j["seed"] = args.seed;
  j["transform"] = std::string(transform_name(fit.transform));
  j["a"] = fit.intercept;
  j["b"] = fit.slope;
  j["n_min"] = fit.window.n_min;
  j["n_max"] = fit.window.n_max;
  j["r_squared"] = fit.r_squared;
  j["points_used"] = fit.points_used;
  j["clamp_epsilon"] = fit.clamp_epsilon;
  j["weighted"] = args.weighted;
  manifest.output(args.out, "fit.json", j.dump(2) + "\n");

  std::vector<double> targets = args.targets;
  if (targets.empty()) {
    for (const auto& p : curve.points) targets.push_back(static_cast<double>(p.n));
  }
  std::string csv = "n,predicted\n";
  for (double n : targets) {
    if (!(n >= 1.0)) throw Error(Errc::InvalidArgument, "targets must be >= 1");
    csv += std::to_string(static_cast<std::uint64_t>(std::llround(n))) + ',' +
           format_double(predict(fit, std::round(n))) + '\n';
  }
  manifest.output(args.out, "predictions.csv", csv);
  manifest.config() = {{"curve", args.curve},      {"transform", args.transform},
                       {"window", args.window},    {"targets", args.targets},
                       {"weighted", args.weighted}};
  manifest.finish(args.out);
  out << "a=" << format_double(fit.intercept) << " b=" << format_double(fit.slope)
      << " r2=" << format_double(fit.r_squared) << '\n';
  return kOk;
}

// ------------------------------------------------------------ independence

struct IndependenceArgs {
  std::string pairs;
  std::size_t top = 20;
  std::uint64_t seed = 1;
  std::string out;
};

int independence_cmd(const IndependenceArgs& args, std::ostream& out, std::ostream& err) {
  prepare_out(args.out);
  Manifest manifest("independence", args.seed);
  manifest.input(args.pairs);
  PairRecords records = load_pair_records(args.pairs);
  manifest.output(args.out, "ingest_report.json", report_json(records.report));
  const auto& joint = records.joint;

  std::size_t rows = args.top, cols = args.top;
  if (rows > joint.first_labels().size()) {
    rows = joint.first_labels().size();
    err << "warning: --top " << args.top << " exceeds " << rows << " first names; clipped\n";
  }
  if (cols > joint.last_labels().size()) {
    cols = joint.last_labels().size();
    err << "warning: --top " << args.top << " exceeds " << cols << " last names; clipped\n";
  }
  const ResidualTable table = pearson_residuals(joint, rows, cols);

  std::string csv = "first,last,observed,expected,residual\n";
  for (const auto& e : table.entries) {
    csv += csv_field(joint.first_labels()[e.first]) + ',' + csv_field(joint.last_labels()[e.last]) +
           ',' + std::to_string(e.observed) + ',' + format_double(e.expected) + ',' +
           format_double(e.residual) + '\n';
  }
  manifest.output(args.out, "residuals.csv", csv);

  json j;
  j["seed"] = args.seed;
  j["chi_square"] = table.chi_square;
  j["dof"] = table.dof;
  j["rows"] = table.rows.size();
  j["cols"] = table.cols.size();
  if (table.dof > 0) {
    boost::math::chi_squared dist(static_cast<double>(table.dof));
    j["p_value"] = boost::math::cdf(boost::math::complement(dist, table.chi_square));
    j["critical_999"] = boost::math::quantile(dist, 0.999);
  } else {
    j["p_value"] = 1.0;
    j["critical_999"] = nullptr;
  }
  manifest.output(args.out, "chi_square.json", j.dump(2) + "\n");
  manifest.config() = {{"pairs", args.pairs}, {"top", args.top}, {"rows", rows}, {"cols", cols}};
  manifest.finish(args.out);
  out << "chi_square=" << format_double(table.chi_square) << " dof=" << table.dof << '\n';
  return kOk;
}

// ----------------------------------------------------------- period-report

struct PeriodArgs {
  std::vector<std::string> first;
  std::vector<std::string> last;
  std::string grid = "10000:200000:12";
  std::size_t replicates = 200;
  std::vector<std::size_t> top{10, 100};
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string out;
};

std::vector<std::pair<std::string, std::string>> split_periods(const std::vector<std::string>& specs,
                                                               std::string_view flag) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) {
      throw Error(Errc::InvalidArgument, std::string(flag) + " expects PERIOD=PATH, got '" + s + "'");
    }
    std::string period = s.substr(0, eq);
    if (std::any_of(out.begin(), out.end(), [&](const auto& p) { return p.first == period; })) {
      throw Error(Errc::InvalidArgument, "period '" + period + "' given twice to " + std::string(flag));
    }
    out.emplace_back(std::move(period), s.substr(eq + 1));
  }
  return out;
}

int period_report_cmd(const PeriodArgs& args, std::ostream& out) {
  const auto firsts = split_periods(args.first, "--first");
  const auto lasts = split_periods(args.last, "--last");
  if (firsts.empty()) throw Error(Errc::InvalidArgument, "no periods given");
  if (firsts.size() != lasts.size()) {
    throw Error(Errc::InvalidArgument, "--first and --last must name the same periods");
  }
  for (std::size_t m : args.top) {
    if (m == 0) throw Error(Errc::InvalidArgument, "--top values must be >= 1");
  }
  SimulationPlan plan;
  plan.n_grid = parse_grid(args.grid);
  plan.replicates = args.replicates;
  plan.validate();

  prepare_out(args.out);
  Manifest manifest("period-report", args.seed);

  std::string shares = "period,kind,total,labels";
  for (std::size_t m : args.top) shares += ",top_" + std::to_string(m);
  shares += '\n';
  std::string curves = "period,n,mean,stderr,replicates\n";
  json reports = json::object();
  json periods = json::array();

  const Stream root(args.seed);
  for (std::size_t p = 0; p < firsts.size(); ++p) {
    const auto& [period, first_path] = firsts[p];
    auto match = std::find_if(lasts.begin(), lasts.end(), [&](const auto& l) { return l.first == period; });
    if (match == lasts.end()) throw Error(Errc::InvalidArgument, "no --last file for period '" + period + "'");
    const std::string& last_path = match->second;
    manifest.input(first_path);
    manifest.input(last_path);

    std::shared_ptr<const CategoricalDist> dists[2];
    const std::pair<const char*, const std::string*> kinds[2] = {{"first", &first_path}, {"last", &last_path}};
    for (int i = 0; i < 2; ++i) {
      FrequencyTable table = load_frequency_table(*kinds[i].second);
      reports[period][kinds[i].first] = json::parse(report_json(table.report));
      const std::uint64_t total = std::accumulate(table.counts.begin(), table.counts.end(), std::uint64_t{0});
      shares += csv_field(period) + ',' + kinds[i].first + ',' + std::to_string(total) + ',' +
                std::to_string(table.labels.size());
      for (std::size_t m : args.top) shares += ',' + format_double(top_share(table.counts, m));
      shares += '\n';
      dists[i] = std::make_shared<const CategoricalDist>(
          table.labels, std::vector<double>(table.counts.begin(), table.counts.end()));
    }

    ProductSource source(dists[0], dists[1], "independent(" + period + ")");
    SimulationPlan period_plan = plan;
    period_plan.seed = root.derive({p}).seed();
    const CollisionCurve curve = estimate_curve(period_plan, source, args.workers);
    for (const auto& pt : curve.points) {
      curves += csv_field(period) + ',' + std::to_string(pt.n) + ',' + format_double(pt.mean) + ',' +
                format_double(pt.std_error) + ',' + std::to_string(pt.replicates) + '\n';
    }
    periods.push_back({{"period", period}, {"first", first_path}, {"last", last_path},
                       {"seed", period_plan.seed}});
  }

  manifest.output(args.out, "top_share.csv", shares);
  manifest.output(args.out, "period_curves.csv", curves);
  manifest.output(args.out, "ingest_report.json", reports.dump(2) + "\n");
  manifest.config() = {{"periods", periods},          {"grid", args.grid},
                       {"n_grid", plan.n_grid},       {"replicates", plan.replicates},
                       {"top", args.top}};
  manifest.finish(args.out);
  out << "reported " << firsts.size() << " periods\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homonym collision estimation: Monte Carlo birthday problem over name distributions"};
  app.name(args.empty() ? "homonym" : args.front());
  app.require_subcommand(1);

  FitZipfArgs fz;
  auto* fit_zipf_app = app.add_subcommand("fit-zipf", "Fit a Zipf law to a label,count table");
  fit_zipf_app->add_option("--freq", fz.freq, "Frequency CSV (label,count)")->required();
  fit_zipf_app->add_option("--out", fz.out, "Output directory")->required();
  fit_zipf_app->add_option("--seed", fz.seed, "Seed recorded in the run artifacts");

  SimulateArgs sim;
  auto* sim_app = app.add_subcommand("simulate", "Monte Carlo homonym curve");
  auto* o_pairs = sim_app->add_option("--pairs", sim.pairs, "Pair records CSV (first,last)");
  auto* o_freq = sim_app->add_option("--freq", sim.freq, "Frequency CSV (label,count)");
  auto* o_zipf = sim_app->add_option("--zipf", sim.zipf, "Synthetic Zipf law: ALPHA K")->expected(2);
  auto* o_unif = sim_app->add_option("--uniform", sim.uniform, "Synthetic uniform law on K labels");
  o_pairs->excludes(o_freq, o_zipf, o_unif);
  o_freq->excludes(o_zipf, o_unif);
  o_zipf->excludes(o_unif);
  sim_app->add_option("--mode", sim.mode, "pair | independent (with --pairs)")
      ->check(CLI::IsMember({"pair", "independent"}));
  sim_app->add_option("--grid", sim.grid, "START:STOP:POINTS (log-spaced) or N1,N2,...");
  sim_app->add_option("--replicates", sim.replicates, "Replicates per grid point")->check(CLI::PositiveNumber);
  sim_app->add_option("--seed", sim.seed, "64-bit seed");
  sim_app->add_option("--workers", sim.workers, "Worker threads (0 = all cores)");
  sim_app->add_flag("--long", sim.long_form, "Also write per-replicate values");
  sim_app->add_option("--out", sim.out, "Output directory")->required();

  ExtrapolateArgs ex;
  auto* ex_app = app.add_subcommand("extrapolate", "Fit a transformed line on log n and extrapolate");
  ex_app->add_option("--curve", ex.curve, "Curve CSV (n,mean,stderr,replicates)")->required();
  ex_app->add_option("--transform", ex.transform, "probit | logit")
      ->check(CLI::IsMember({"probit", "logit"}));
  ex_app->add_option("--window", ex.window, "N_MIN N_MAX")->expected(2);
  ex_app->add_option("--targets", ex.targets, "Group sizes to predict");
  ex_app->add_flag("--weighted", ex.weighted, "Inverse-variance weighted least squares");
  ex_app->add_option("--seed", ex.seed, "Seed recorded in the run artifacts");
  ex_app->add_option("--out", ex.out, "Output directory")->required();

  IndependenceArgs ind;
  auto* ind_app = app.add_subcommand("independence", "Pearson residuals of first vs last names");
  ind_app->add_option("--pairs", ind.pairs, "Pair records CSV (first,last)")->required();
  ind_app->add_option("--top", ind.top, "Restrict to the M most frequent names on each axis")
      ->check(CLI::PositiveNumber);
  ind_app->add_option("--seed", ind.seed, "Seed recorded in the run artifacts");
  ind_app->add_option("--out", ind.out, "Output directory")->required();

  PeriodArgs per;
  auto* per_app = app.add_subcommand("period-report", "Concentration and independent-product curves per period");
  per_app->add_option("--first", per.first, "PERIOD=PATH first-name frequency CSV")->required();
  per_app->add_option("--last", per.last, "PERIOD=PATH last-name frequency CSV")->required();
  per_app->add_option("--grid", per.grid, "START:STOP:POINTS (log-spaced) or N1,N2,...");
  per_app->add_option("--replicates", per.replicates, "Replicates per grid point")->check(CLI::PositiveNumber);
  per_app->add_option("--top", per.top, "Top-m shares to report");
  per_app->add_option("--seed", per.seed, "64-bit seed");
  per_app->add_option("--workers", per.workers, "Worker threads (0 = all cores)");
  per_app->add_option("--out", per.out, "Output directory")->required();

  std::vector<char*> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"homonym"} : args;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (fit_zipf_app->parsed()) return fit_zipf_cmd(fz, out);
    if (sim_app->parsed()) return simulate_cmd(sim, out);
    if (ex_app->parsed()) return extrapolate_cmd(ex, out);
    if (ind_app->parsed()) return independence_cmd(ind, out, err);
    if (per_app->parsed()) return period_report_cmd(per, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace homonym::cli
