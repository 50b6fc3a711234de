#pragma once

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

// End-to-end CLI invocations whose outputs are committed under tests/golden.
// Inputs under "F:" resolve to the fixture tree, "G:" to the golden tree.
namespace golden {

struct Run {
  std::string dir;  // golden sub-directory
  std::vector<std::string> args;
  std::vector<std::string> files;
};

inline const std::vector<Run>& runs() {
  static const std::vector<Run> r{
      {"ingest", {"ingest", "F:corpus/posts_500.ndjson"}, {"domain_counts.csv", "posts.csv", "ingest_stats.csv"}},
      {"ingest", {"ingest", "F:corpus/part_a.ndjson.gz", "F:corpus/part_b.ndjson.bz2"},
       {"domain_counts.csv", "posts.csv", "ingest_stats.csv"}},
      {"ingest_keep_host", {"ingest", "--keep-host", "--dedupe-per-post", "--retain-paths-for", "bundled",
                            "F:corpus/posts_500.ndjson"},
       {"domain_counts.csv", "posts.csv", "ingest_stats.csv"}},
      {"metrics", {"metrics", "G:ingest/domain_counts.csv", "--top-ns", "1,10,100"}, {"diversity.csv"}},
      {"metrics_restricted", {"metrics", "G:ingest/domain_counts.csv", "--restrict-top", "5"}, {"diversity.csv"}},
      {"tailfit", {"tailfit", "G:ingest/domain_counts.csv"}, {"tailfit.csv"}},
      {"tailfit_month", {"tailfit", "G:ingest/domain_counts.csv", "--granularity", "month", "--exact-zeta",
                         "--min-tail", "3"},
       {"tailfit.csv"}},
      {"survival", {"survival", "G:ingest/domain_counts.csv"}, {"survival.csv"}},
      {"survival_rolling", {"survival", "G:ingest/domain_counts.csv", "--window", "rolling", "--horizon", "4"},
       {"survival.csv"}},
      {"functions", {"functions", "G:ingest/domain_counts.csv"}, {"functions.csv"}},
      {"functions_keep_host", {"functions", "G:ingest_keep_host/domain_counts.csv", "--keep-host"},
       {"functions.csv"}},
      {"econ", {"econ", "F:econ/attention.csv", "F:econ/value.csv"}, {"econ.csv", "econ_report.txt"}},
      {"rankshare", {"rankshare", "F:rank/2019.csv", "F:rank/2020.csv", "--top-ns", "10,100,1000"},
       {"rankshare.csv", "rankshare_meta.csv"}},
  };
  return r;
}

inline std::string resolve(const std::string& arg) {
  if (arg.starts_with("F:")) return (std::filesystem::path(ATTNSCOPE_FIXTURE_DIR) / arg.substr(2)).string();
  if (arg.starts_with("G:")) return (std::filesystem::path(ATTNSCOPE_GOLDEN_DIR) / arg.substr(2)).string();
  return arg;
}

/// Runs one golden invocation with outputs in `out_dir`; returns the exit code.
inline int execute(const Run& run, const std::filesystem::path& out_dir, std::string* diagnostics = nullptr,
                   unsigned workers = 1) {
  std::vector<std::string> args{"--out-dir", out_dir.string(), "--workers", std::to_string(workers)};
  for (const auto& a : run.args) args.push_back(resolve(a));
  std::ostringstream out, err;
  const int code = attnscope::cli::run(args, out, err);
  if (diagnostics) *diagnostics = err.str();
  return code;
}

inline bool update_requested() {
  const char* v = std::getenv("ATTNSCOPE_UPDATE_GOLDEN");
  return v && *v && std::string(v) != "0";
}

}  // namespace golden
