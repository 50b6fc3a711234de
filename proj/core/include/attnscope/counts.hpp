#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "attnscope/month.hpp"

namespace attnscope {

using DomainTally = std::unordered_map<std::string, std::uint64_t>;

/// Link tallies per domain for one calendar month. A domain present in
/// `counts` is active in that month; every tally is at least one and
/// n_links is their sum.
struct MonthlyDomainCounts {
  Month month;
  DomainTally counts;
  std::uint64_t n_posts = 0;
  std::uint64_t n_links = 0;

  std::size_t n_active_domains() const noexcept { return counts.size(); }
  void add(std::string_view domain, std::uint64_t links = 1);

  friend bool operator==(const MonthlyDomainCounts&, const MonthlyDomainCounts&) = default;
};

/// Pointwise sum; throws Errc::MonthMismatch when the months differ.
MonthlyDomainCounts merge_counts(const MonthlyDomainCounts& a, const MonthlyDomainCounts& b);
void merge_into(MonthlyDomainCounts& into, const MonthlyDomainCounts& from);

/// Merges two month-sorted lists; months present in only one side pass
/// through. The result is sorted ascending.
std::vector<MonthlyDomainCounts> merge_monthly(std::vector<MonthlyDomainCounts> a,
                                               std::vector<MonthlyDomainCounts> b);

using RankedDomain = std::pair<std::string_view, std::uint64_t>;
/// Count descending, then domain ascending.
std::vector<RankedDomain> ranked_domains(const MonthlyDomainCounts& month);

// "domain-counts" CSV: header `month,domain,count`, rows sorted by
// (month asc, count desc, domain asc), LF line endings.
void write_domain_counts_csv(std::ostream& out, std::span<const MonthlyDomainCounts> months);
/// n_posts is left at zero; it travels in the posts CSV.
std::vector<MonthlyDomainCounts> read_domain_counts_csv(std::istream& in);

// Companion "posts" CSV: header `month,n_posts`.
void write_posts_csv(std::ostream& out, std::span<const MonthlyDomainCounts> months);
/// Sets n_posts on matching months and inserts link-less months, keeping
/// the list sorted.
void apply_posts_csv(std::istream& in, std::vector<MonthlyDomainCounts>& months);

}  // namespace attnscope
