#include "attnscope/diversity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "attnscope/csv.hpp"
#include "attnscope/error.hpp"

namespace attnscope::data {
extern const std::string_view kFunctionMap;
}

namespace attnscope {

namespace {

void require_links(const MonthlyDomainCounts& month) {
  if (month.n_links == 0 || month.counts.empty()) {
    throw Error(Errc::EmptyMonth, month.month.to_string() + " has no links");
  }
}

__extension__ using u128 = unsigned __int128;

long double sum_of_squares_ratio(std::span<const std::uint64_t> counts) {
  u128 squares = 0;
  u128 total = 0;
  for (std::uint64_t c : counts) {
    squares += static_cast<u128>(c) * c;
    total += c;
  }
  const long double t = static_cast<long double>(total);
  return static_cast<long double>(squares) / (t * t);
}

std::vector<std::uint64_t> values_desc(const MonthlyDomainCounts& month) {
  std::vector<std::uint64_t> v;
  v.reserve(month.counts.size());
  for (const auto& [_, n] : month.counts) v.push_back(n);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

double share_of_top(std::span<const std::uint64_t> desc, std::uint64_t n, std::uint64_t total) {
  if (n >= desc.size()) return 1.0;
  std::uint64_t top = 0;
  for (std::size_t i = 0; i < n; ++i) top += desc[i];
  return static_cast<double>(top) / static_cast<double>(total);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

double hhi(const MonthlyDomainCounts& month) {
  require_links(month);
  std::vector<std::uint64_t> v;
  v.reserve(month.counts.size());
  for (const auto& [_, n] : month.counts) v.push_back(n);
  return static_cast<double>(sum_of_squares_ratio(v));
}

double hhi_top(const MonthlyDomainCounts& month, std::size_t top_k) {
  require_links(month);
  if (top_k == 0) throw Error(Errc::InvalidArgument, "restrict-top must be positive");
  auto v = values_desc(month);
  if (v.size() > top_k) v.resize(top_k);
  return static_cast<double>(sum_of_squares_ratio(v));
}

double link_originality(const MonthlyDomainCounts& month) {
  require_links(month);
  return static_cast<double>(month.n_active_domains()) / static_cast<double>(month.n_links);
}

double top_n_share(const MonthlyDomainCounts& month, std::uint64_t n) {
  require_links(month);
  if (n == 0) throw Error(Errc::InvalidArgument, "top-n requires n >= 1");
  return share_of_top(values_desc(month), n, month.n_links);
}

Moments moment_stats(const MonthlyDomainCounts& month) {
  const std::size_t n = month.counts.size();
  if (n < 3) throw Error(Errc::DegenerateSample, "fewer than three active domains");
  long double mean = 0;
  for (const auto& [_, c] : month.counts) mean += c;
  mean /= n;
  long double m2 = 0, m3 = 0, m4 = 0;
  for (const auto& [_, c] : month.counts) {
    const long double d = c - mean;
    const long double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 == 0) throw Error(Errc::DegenerateSample, "all counts equal");
  return {static_cast<double>(m3 / std::pow(m2, 1.5L)), static_cast<double>(m4 / (m2 * m2) - 3)};
}

DiversitySummary summarize_month(const MonthlyDomainCounts& month, const SummaryOptions& options) {
  require_links(month);
  DiversitySummary s;
  s.month = month.month;
  s.n_posts = month.n_posts;
  s.n_links = month.n_links;
  s.n_active_domains = month.n_active_domains();
  s.hhi = options.restrict_top ? hhi_top(month, *options.restrict_top) : hhi(month);
  s.originality = link_originality(month);
  try {
    s.moments = moment_stats(month);
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateSample) throw;
  }
  if (!options.top_ns.empty()) {
    const auto desc = values_desc(month);
    for (std::uint64_t n : options.top_ns) {
      if (n == 0) throw Error(Errc::InvalidArgument, "top-n requires n >= 1");
      s.top_shares.emplace_back(n, share_of_top(desc, n, month.n_links));
    }
  }
  return s;
}

void write_diversity_csv(std::ostream& out, std::span<const MonthlyDomainCounts> months,
                         const SummaryOptions& options) {
  out << "month,n_posts,n_links,n_active_domains,hhi,originality,skewness,excess_kurtosis";
  for (std::uint64_t n : options.top_ns) out << ",top" << n;
  out << '\n';
  for (const auto& m : months) {
    out << m.month.to_string() << ',' << m.n_posts << ',' << m.n_links << ','
        << m.n_active_domains();
    if (m.n_links == 0) {
      out << ",,,,";
      for (std::size_t i = 0; i < options.top_ns.size(); ++i) out << ',';
      out << '\n';
      continue;
    }
    const DiversitySummary s = summarize_month(m, options);
    out << ',' << csv::format_double(s.hhi) << ',' << csv::format_double(s.originality) << ','
        << (s.moments ? csv::format_double(s.moments->skewness) : "") << ','
        << (s.moments ? csv::format_double(s.moments->excess_kurtosis) : "");
    for (const auto& [_, share] : s.top_shares) out << ',' << csv::format_double(share);
    out << '\n';
  }
}

FunctionMap::FunctionMap(std::vector<FunctionMapEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (e.pattern.empty() || e.function.empty()) {
      throw Error(Errc::InvalidArgument, "function map entry with empty pattern or label");
    }
    if (!seen.insert(e.pattern).second) {
      throw Error(Errc::InvalidArgument, "duplicate function map pattern " + e.pattern);
    }
  }
}

FunctionMap FunctionMap::parse(std::istream& in) {
  std::vector<FunctionMapEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    const auto f = csv::split(row, '\t');
    if (f.size() != 4) {
      throw Error(Errc::ParseError, "function map line " + std::to_string(line_no) +
                                        ": expected 4 tab-separated fields");
    }
    FunctionMapEntry e{std::string(trim(f[0])), std::string(trim(f[1])), std::string(trim(f[2])), 0};
    const std::string_view year = trim(f[3]);
    const auto [ptr, ec] = std::from_chars(year.data(), year.data() + year.size(), e.year_started);
    if (ec != std::errc{} || ptr != year.data() + year.size()) {
      throw Error(Errc::ParseError, "function map line " + std::to_string(line_no) + ": bad year");
    }
    entries.push_back(std::move(e));
  }
  return FunctionMap(std::move(entries));
}

FunctionMap FunctionMap::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return parse(in);
}

const FunctionMap& FunctionMap::bundled() {
  static const FunctionMap map = [] {
    std::istringstream in{std::string(data::kFunctionMap)};
    return parse(in);
  }();
  return map;
}

std::vector<std::string> FunctionMap::keys_for(const FunctionMapEntry& entry,
                                               const NormalizeOptions& options) const {
  std::string_view pattern = entry.pattern;
  const std::size_t slash = pattern.find('/');
  const std::string_view host = pattern.substr(0, slash);
  std::string path;
  if (slash != std::string_view::npos) {
    std::string_view p = pattern.substr(slash);
    while (p.size() > 1 && p.back() == '/') p.remove_suffix(1);
    path = std::string(p);
  }
  std::vector<std::string> keys;
  std::string lowered(host);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  keys.push_back(lowered + path);
  // The normalized key is added only when the pattern names a registrable
  // domain (up to "www."). A subdomain pattern such as drive.google.com would
  // otherwise absorb every link to its parent domain.
  try {
    const std::string normalized = normalize_host(host, options);
    std::string_view bare = lowered;
    if (bare.starts_with("www.")) bare.remove_prefix(4);
    if (options.keep_host || normalized == bare) {
      std::string key = normalized + path;
      if (key != keys.front()) keys.push_back(std::move(key));
    }
  } catch (const Error& e) {
    if (e.code() != Errc::MalformedUrl) throw;
  }
  return keys;
}

std::vector<PathPrefixRule> FunctionMap::path_rules(const NormalizeOptions& options) const {
  std::vector<PathPrefixRule> rules;
  for (const auto& e : entries_) {
    const std::size_t slash = e.pattern.find('/');
    if (slash == std::string::npos) continue;
    std::string prefix = e.pattern.substr(slash + 1);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    if (prefix.empty()) continue;
    rules.push_back({normalize_host(e.pattern.substr(0, slash), options), std::move(prefix)});
  }
  // Longer prefixes first so that the most specific rule wins.
  std::stable_sort(rules.begin(), rules.end(), [](const auto& a, const auto& b) {
    return a.prefix.size() > b.prefix.size();
  });
  return rules;
}

std::vector<FunctionAttentionSeries> function_attention(
    std::span<const MonthlyDomainCounts> months, const FunctionMap& map,
    const NormalizeOptions& options) {
  std::map<std::string, std::set<std::string>> keys_by_function;
  for (const auto& e : map.entries()) {
    auto& keys = keys_by_function[e.function];
    for (auto& k : map.keys_for(e, options)) keys.insert(std::move(k));
  }

  std::vector<FunctionAttentionSeries> out;
  for (const auto& [function, keys] : keys_by_function) {
    FunctionAttentionSeries series{function, {}, std::nullopt};
    for (const auto& m : months) {
      std::uint64_t total = 0;
      for (const auto& k : keys) {
        if (const auto it = m.counts.find(k); it != m.counts.end()) total += it->second;
      }
      if (total > 0 && !series.first_seen) series.first_seen = m.month;
      series.totals.emplace_back(m.month, total);
    }
    if (!series.first_seen) series.totals.clear();
    out.push_back(std::move(series));
  }
  return out;
}

void write_function_csv(std::ostream& out, std::span<const FunctionAttentionSeries> series) {
  out << "function,first_seen,month,links\n";
  for (const auto& s : series) {
    if (s.totals.empty()) {
      out << s.function << ",,,\n";
      continue;
    }
    const std::string first = s.first_seen->to_string();
    for (const auto& [month, links] : s.totals) {
      out << s.function << ',' << first << ',' << month.to_string() << ',' << links << '\n';
    }
  }
}

}  // namespace attnscope
