#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "attnscope/counts.hpp"
#include "attnscope/csv.hpp"
#include "attnscope/diversity.hpp"
#include "attnscope/econometrics.hpp"
#include "attnscope/error.hpp"
#include "attnscope/ingest.hpp"
#include "attnscope/public_suffix.hpp"
#include "attnscope/rank_share.hpp"
#include "attnscope/survival.hpp"
#include "attnscope/tail_fit.hpp"
#include "attnscope/validation.hpp"

namespace attnscope::cli {

namespace fs = std::filesystem;

namespace {

struct Global {
  std::uint64_t seed = 42;
  unsigned workers = 1;
  std::string out_dir = ".";
};

struct SuffixArgs {
  std::string psl_file;
  bool psl_private = false;
  std::optional<PublicSuffixList> loaded;

  const PublicSuffixList* resolve() {
    const auto sections = psl_private ? PublicSuffixList::Sections::IcannAndPrivate
                                      : PublicSuffixList::Sections::IcannOnly;
    if (psl_file.empty()) return &PublicSuffixList::bundled(sections);
    loaded = PublicSuffixList::load_file(psl_file, sections);
    return &*loaded;
  }
};

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return in;
}

void write_output(const Global& g, const std::string& name, const std::string& content) {
  const fs::path dir(g.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::Io, "cannot create " + dir.string() + ": " + ec.message());
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
}

/// The posts file defaults to posts.csv next to the counts file.
std::vector<MonthlyDomainCounts> read_counts(const fs::path& counts, const std::string& posts) {
  auto in = open_input(counts);
  auto months = read_domain_counts_csv(in);
  fs::path posts_path = posts.empty() ? counts.parent_path() / "posts.csv" : fs::path(posts);
  if (!posts.empty() || fs::exists(posts_path)) {
    auto pin = open_input(posts_path);
    apply_posts_csv(pin, months);
  }
  return months;
}

template <class T>
void require_ascending(const std::vector<T>& ns) {
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == 0) throw Error(Errc::InvalidArgument, "--top-ns values must be positive");
    if (i > 0 && !(ns[i - 1] < ns[i])) throw Error(Errc::InvalidArgument, "--top-ns values must be ascending");
  }
}

PathPrefixRule parse_path_rule(std::string_view spec) {
  const auto slash = spec.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == spec.size()) {
    throw Error(Errc::InvalidArgument, "--retain-path expects DOMAIN/PREFIX, got " + std::string(spec));
  }
  std::string domain(spec.substr(0, slash));
  std::transform(domain.begin(), domain.end(), domain.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::string prefix(spec.substr(slash + 1));
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {std::move(domain), std::move(prefix)};
}

std::string stem_label(const std::string& path) { return fs::path(path).stem().string(); }

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concentration of online attention: link ingestion and analysis"};
  app.name("attnscope");
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--seed", g.seed, "Master seed for simulation-based checks")->capture_default_str();
  app.add_option("--workers", g.workers, "Parallel ingestion workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out-dir", g.out_dir, "Directory for output files")->capture_default_str();

  std::function<void()> action;

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Tally links per month and domain from NDJSON posts");
  std::vector<std::string> ingest_inputs;
  IngestOptions ingest_opts;
  std::vector<std::string> retain_specs;
  std::string retain_map;
  SuffixArgs ingest_psl;
  ingest->add_option("inputs", ingest_inputs, "NDJSON files, optionally gzip or bzip2 compressed")->required();
  ingest->add_option("--time-field", ingest_opts.time_field, "Epoch-seconds field")->capture_default_str();
  ingest->add_option("--body-field", ingest_opts.body_field, "Text field scanned for URLs")->capture_default_str();
  ingest->add_flag("--keep-host", ingest_opts.keep_host, "Keep full hosts instead of registrable domains");
  ingest->add_flag("--dedupe-per-post", ingest_opts.dedupe_per_post, "Count a repeated URL once per post");
  ingest->add_option("--retain-paths-for", retain_map,
                     "Tally the path patterns of this function map separately ('bundled' for the built-in map)");
  ingest->add_option("--retain-path", retain_specs, "Tally DOMAIN/PREFIX links separately");
  ingest->add_option("--psl", ingest_psl.psl_file, "Public suffix list file (default: bundled)");
  ingest->add_flag("--psl-private", ingest_psl.psl_private, "Include the private-domain section");
  ingest->callback([&] {
    action = [&] {
      ingest_opts.suffixes = ingest_psl.resolve();
      for (const auto& s : retain_specs) ingest_opts.retained_paths.push_back(parse_path_rule(s));
      if (!retain_map.empty()) {
        const FunctionMap map = retain_map == "bundled" ? FunctionMap::bundled() : FunctionMap::load_file(retain_map);
        for (auto& r : map.path_rules({ingest_opts.keep_host, ingest_opts.suffixes})) {
          ingest_opts.retained_paths.push_back(std::move(r));
        }
      }
      std::vector<fs::path> paths(ingest_inputs.begin(), ingest_inputs.end());
      const auto result = ingest_files(paths, ingest_opts, g.workers);
      std::ostringstream counts, posts, stats;
      write_domain_counts_csv(counts, result.months);
      write_posts_csv(posts, result.months);
      const auto& s = result.stats;
      stats << "posts_read,links_extracted,urls_rejected,posts_skipped_malformed\n"
            << s.posts_read << ',' << s.links_extracted << ',' << s.urls_rejected << ','
            << s.posts_skipped_malformed << '\n';
      write_output(g, "domain_counts.csv", counts.str());
      write_output(g, "posts.csv", posts.str());
      write_output(g, "ingest_stats.csv", stats.str());
      out << "posts read:        " << s.posts_read << "\nlinks extracted:   " << s.links_extracted
          << "\nurls rejected:     " << s.urls_rejected << "\nmalformed posts:   "
          << s.posts_skipped_malformed << "\nmonths:            " << result.months.size() << '\n';
    };
  });

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Monthly concentration metrics");
  std::string counts_path, posts_path;
  SummaryOptions summary;
  std::optional<std::size_t> restrict_top;
  metrics->add_option("counts", counts_path, "domain_counts.csv")->required();
  metrics->add_option("--posts", posts_path, "posts.csv (default: next to the counts file)");
  metrics->add_option("--top-ns", summary.top_ns, "Top-n share columns")->delimiter(',')->capture_default_str();
  metrics->add_option("--restrict-top", restrict_top, "Compute HHI over the top K domains only");
  metrics->callback([&] {
    action = [&] {
      require_ascending(summary.top_ns);
      if (restrict_top && *restrict_top == 0) throw Error(Errc::InvalidArgument, "--restrict-top must be positive");
      summary.restrict_top = restrict_top;
      const auto months = read_counts(counts_path, posts_path);
      std::ostringstream csv;
      write_diversity_csv(csv, months, summary);
      write_output(g, "diversity.csv", csv.str());
    };
  });

  // tailfit
  auto* tailfit = app.add_subcommand("tailfit", "Power-law tail fits with likelihood-ratio comparisons");
  std::string granularity = "year";
  PowerLawOptions pl_opts;
  tailfit->add_option("counts", counts_path, "domain_counts.csv")->required();
  tailfit->add_option("--granularity", granularity, "Pool counts per year or fit each month")
      ->check(CLI::IsMember({"year", "month"}))
      ->capture_default_str();
  tailfit->add_flag("--exact-zeta", pl_opts.exact_zeta, "Exact discrete MLE via the Hurwitz zeta function");
  tailfit->add_option("--min-tail", pl_opts.min_tail, "Smallest tail considered for xmin")->capture_default_str();
  tailfit->callback([&] {
    action = [&] {
      const auto months = read_counts(counts_path, "");
      const auto gran = granularity == "year" ? Granularity::Year : Granularity::Month;
      const auto fits = fit_all_periods(months, gran, pl_opts);
      std::ostringstream csv;
      write_tailfit_csv(csv, fits, gran);
      write_output(g, "tailfit.csv", csv.str());
      for (const auto& f : fits) {
        if (!f.report && !f.note.empty()) err << "warning: " << f.period << ": " << f.note << '\n';
      }
    };
  });

  // survival
  auto* survival = app.add_subcommand("survival", "Cohort survival by years since first link");
  std::string window = "calendar";
  SurvivalOptions surv_opts;
  survival->add_option("counts", counts_path, "domain_counts.csv")->required();
  survival->add_option("--window", window, "Calendar years or rolling 12-month windows")
      ->check(CLI::IsMember({"calendar", "rolling"}))
      ->capture_default_str();
  survival->add_option("--horizon", surv_opts.horizon_years, "Largest age in years")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  survival->callback([&] {
    action = [&] {
      surv_opts.window = window == "rolling" ? SurvivalWindow::Rolling : SurvivalWindow::Calendar;
      const auto months = read_counts(counts_path, "");
      const auto cohorts = assign_cohorts(months);
      const auto table = survival_curve(cohorts, months, surv_opts);
      std::ostringstream csv;
      write_survival_csv(csv, table);
      write_output(g, "survival.csv", csv.str());
    };
  });

  // functions
  auto* functions = app.add_subcommand("functions", "Monthly links per market function");
  std::string map_path;
  bool fn_keep_host = false;
  SuffixArgs fn_psl;
  functions->add_option("counts", counts_path, "domain_counts.csv")->required();
  functions->add_option("--map", map_path, "Function map TSV (default: bundled)");
  functions->add_flag("--keep-host", fn_keep_host, "Counts were ingested with --keep-host");
  functions->add_option("--psl", fn_psl.psl_file, "Public suffix list used at ingestion");
  functions->add_flag("--psl-private", fn_psl.psl_private, "Private section was used at ingestion");
  functions->callback([&] {
    action = [&] {
      const FunctionMap map = map_path.empty() ? FunctionMap::bundled() : FunctionMap::load_file(map_path);
      const auto months = read_counts(counts_path, "");
      const auto series = function_attention(months, map, {fn_keep_host, fn_psl.resolve()});
      std::ostringstream csv;
      write_function_csv(csv, series);
      write_output(g, "functions.csv", csv.str());
    };
  });

  // econ
  auto* econ = app.add_subcommand("econ", "Stationarity, co-integration, Granger and VAR lag choice");
  std::string attention_path, value_path, regression = "c";
  EconOptions econ_opts;
  econ->add_option("attention", attention_path, "month,value CSV of link counts")->required();
  econ->add_option("value", value_path, "month,value CSV of the valuation series")->required();
  econ->add_option("--max-lag", econ_opts.max_lag, "Largest Granger/VAR lag")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  econ->add_option("--regression", regression, "ADF deterministic terms: n, c or ct")
      ->check(CLI::IsMember({"n", "c", "ct"}))
      ->capture_default_str();
  econ->add_flag("--difference-all", econ_opts.difference_all,
                 "Difference both series even when stationary in levels");
  econ->callback([&] {
    action = [&] {
      econ_opts.regression = regression == "n"    ? AdfRegression::None
                             : regression == "ct" ? AdfRegression::ConstantTrend
                                                  : AdfRegression::Constant;
      auto ain = open_input(attention_path);
      auto vin = open_input(value_path);
      const auto a = read_series_csv(ain, stem_label(attention_path));
      const auto v = read_series_csv(vin, stem_label(value_path));
      const auto report = run_two_step_pipeline(a, v, econ_opts);
      std::ostringstream csv, text;
      write_econ_csv(csv, report);
      write_econ_report(text, report);
      write_output(g, "econ.csv", csv.str());
      write_output(g, "econ_report.txt", text.str());
      out << text.str();
    };
  });

  // rankshare
  auto* rankshare = app.add_subcommand("rankshare", "Top-n PageRank mass per snapshot");
  std::vector<std::string> snapshots;
  std::vector<std::size_t> rank_ns{1000, 10000, 1000000};
  rankshare->add_option("snapshots", snapshots, "domain,pagerank CSV files; the file stem is the period")
      ->required();
  rankshare->add_option("--top-ns", rank_ns, "n values")->delimiter(',')->capture_default_str();
  rankshare->callback([&] {
    action = [&] {
      require_ascending(rank_ns);
      std::vector<RankSnapshot> loaded;
      for (const auto& s : snapshots) loaded.push_back(load_rank_snapshot(fs::path(s)));
      std::ostringstream csv, meta;
      write_rankshare_csv(csv, loaded, rank_ns);
      write_rankshare_meta_csv(meta, loaded);
      write_output(g, "rankshare.csv", csv.str());
      write_output(g, "rankshare_meta.csv", meta.str());
    };
  });

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Monte-Carlo checks of the estimators");
  std::size_t trials = 200;
  selftest->add_option("--trials", trials, "Trials per check")->check(CLI::PositiveNumber)->capture_default_str();
  selftest->callback([&] {
    action = [&] {
      namespace v = validation;
      const auto s = g.seed;
      struct Row {
        const char* name;
        const char* target;
        std::function<v::Rate()> run;
      };
      const std::vector<Row> rows{
          {"power-law 3-SE coverage", ">= 0.95", [&] { return v::power_law_coverage(trials, 20000, 2.5, 5, s); }},
          {"LLR favours power law", ">= 0.90", [&] { return v::llr_favours_power_law(trials, 2000, 2.5, 5, s); }},
          {"ADF size (random walk)", "0.02-0.08", [&] { return v::adf_rejections(trials, 200, 1.0, s); }},
          {"ADF power (AR 0.5)", ">= 0.90", [&] { return v::adf_rejections(trials, 200, 0.5, s); }},
          {"Engle-Granger power", ">= 0.90", [&] { return v::engle_granger_detections(trials, 200, true, s); }},
          {"Engle-Granger size", "<= 0.10", [&] { return v::engle_granger_detections(trials, 200, false, s); }},
          {"Granger power (lags 3-12)", ">= 0.95", [&] { return v::granger_power(trials, 200, 12, s); }},
          {"Granger size (lag 3)", "0.02-0.08", [&] { return v::granger_size(trials, 200, 3, s); }},
          {"pipeline picks lag 3", ">= 0.90", [&] { return v::pipeline_picks_lag3(trials, 200, s); }},
      };
      out << "seed " << s << ", " << trials << " trials per check\n";
      for (const auto& r : rows) {
        const auto rate = r.run();
        out << std::left << std::setw(28) << r.name << ' ' << std::setw(6) << std::fixed
            << std::setprecision(3) << rate.value() << "  target " << r.target << '\n';
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const Error& e) {
    err << "attnscope: " << e.what() << '\n';
    return e.code() == Errc::Io ? kExitIo : kExitValidation;
  } catch (const fs::filesystem_error& e) {
    err << "attnscope: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "attnscope: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace attnscope::cli
