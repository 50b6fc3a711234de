#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "attnscope/counts.hpp"
#include "attnscope/ingest.hpp"
#include "attnscope/url.hpp"

namespace attnscope {

/// Herfindahl-Hirschman index: sum of squared link shares. Lies in [1/N, 1].
/// Throws Errc::EmptyMonth when the month has no links.
double hhi(const MonthlyDomainCounts& month);

/// HHI over the `top_k` most-linked domains only, shares taken relative to
/// their combined links.
double hhi_top(const MonthlyDomainCounts& month, std::size_t top_k);

/// Active domains per link, in (0, 1].
double link_originality(const MonthlyDomainCounts& month);

/// Fraction of links held by the n most-linked domains. Reaches exactly 1
/// once n covers every active domain.
double top_n_share(const MonthlyDomainCounts& month, std::uint64_t n);

struct Moments {
  double skewness;         // g1 = m3 / m2^1.5
  double excess_kurtosis;  // g2 = m4 / m2^2 - 3
};

/// Sample moments of the per-domain counts with 1/N central moments.
/// Throws Errc::DegenerateSample for fewer than three domains or zero variance.
Moments moment_stats(const MonthlyDomainCounts& month);

struct DiversitySummary {
  Month month;
  std::uint64_t n_posts = 0;
  std::uint64_t n_links = 0;
  std::size_t n_active_domains = 0;
  double hhi = 0.0;
  double originality = 0.0;
  std::optional<Moments> moments;
  std::vector<std::pair<std::uint64_t, double>> top_shares;
};

struct SummaryOptions {
  std::vector<std::uint64_t> top_ns{10, 50, 100, 500, 1000};
  /// Replace the all-domain HHI by hhi_top(restrict_top).
  std::optional<std::size_t> restrict_top;
};

/// Never fails on a degenerate sample (moments are left empty); throws
/// Errc::EmptyMonth when there are no links.
DiversitySummary summarize_month(const MonthlyDomainCounts& month,
                                 const SummaryOptions& options = {});

/// `month,n_posts,n_links,n_active_domains,hhi,originality,skewness,
/// excess_kurtosis,top<n>...` with one column per requested n. Months without
/// links are written with empty metric fields.
void write_diversity_csv(std::ostream& out, std::span<const MonthlyDomainCounts> months,
                         const SummaryOptions& options = {});

struct FunctionMapEntry {
  std::string pattern;  // host or host/path-prefix
  std::string function;
  std::string company;
  int year_started = 0;
};

/// Curated mapping from domains to the function (market segment) they serve.
class FunctionMap {
 public:
  /// Throws Errc::InvalidArgument on duplicate patterns or empty labels.
  explicit FunctionMap(std::vector<FunctionMapEntry> entries);

  /// TSV `pattern<TAB>function<TAB>company<TAB>year_started`, '#' comments.
  static FunctionMap parse(std::istream& in);
  static FunctionMap load_file(const std::filesystem::path& path);
  /// The curated table compiled into the library.
  static const FunctionMap& bundled();

  const std::vector<FunctionMapEntry>& entries() const noexcept { return entries_; }

  /// Count keys a pattern stands for under the given normalization: the
  /// lowercased pattern, plus its normalized form when the pattern host is a
  /// registrable domain or hosts are kept. Subdomain patterns therefore only
  /// match counts ingested with keep_host.
  std::vector<std::string> keys_for(const FunctionMapEntry& entry,
                                    const NormalizeOptions& options = {}) const;
  /// Path-prefix rules ingestion needs so that path patterns can match.
  std::vector<PathPrefixRule> path_rules(const NormalizeOptions& options = {}) const;

 private:
  std::vector<FunctionMapEntry> entries_;
};

struct FunctionAttentionSeries {
  std::string function;
  /// One entry per input month; empty when the function was never linked.
  std::vector<std::pair<Month, std::uint64_t>> totals;
  std::optional<Month> first_seen;
};

/// Links per function per month, ordered by function label.
std::vector<FunctionAttentionSeries> function_attention(
    std::span<const MonthlyDomainCounts> months, const FunctionMap& map,
    const NormalizeOptions& options = {});

/// `function,first_seen,month,links`
void write_function_csv(std::ostream& out, std::span<const FunctionAttentionSeries> series);

}  // namespace attnscope
