#include "attnscope/counts.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>

#include "attnscope/csv.hpp"
#include "attnscope/error.hpp"

namespace attnscope {

namespace {

std::uint64_t parse_count(std::string_view field, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": bad count '" + std::string(field) + "'");
  }
  return value;
}

void expect_header(std::istream& in, std::string_view header) {
  std::string line;
  if (!std::getline(in, line) || csv::chomp(line) != header) {
    throw Error(Errc::ParseError, "expected header '" + std::string(header) + "'");
  }
}

}  // namespace

void MonthlyDomainCounts::add(std::string_view domain, std::uint64_t links) {
  if (links == 0) return;
  auto [it, inserted] = counts.try_emplace(std::string(domain), 0);
  it->second += links;
  n_links += links;
}

void merge_into(MonthlyDomainCounts& into, const MonthlyDomainCounts& from) {
  if (into.month != from.month) {
    throw Error(Errc::MonthMismatch, into.month.to_string() + " vs " + from.month.to_string());
  }
  for (const auto& [domain, n] : from.counts) into.counts[domain] += n;
  into.n_posts += from.n_posts;
  into.n_links += from.n_links;
}

MonthlyDomainCounts merge_counts(const MonthlyDomainCounts& a, const MonthlyDomainCounts& b) {
  MonthlyDomainCounts out = a;
  merge_into(out, b);
  return out;
}

std::vector<MonthlyDomainCounts> merge_monthly(std::vector<MonthlyDomainCounts> a,
                                               std::vector<MonthlyDomainCounts> b) {
  std::vector<MonthlyDomainCounts> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->month < ib->month)) {
      out.push_back(std::move(*ia++));
    } else if (ia == a.end() || ib->month < ia->month) {
      out.push_back(std::move(*ib++));
    } else {
      merge_into(*ia, *ib++);
      out.push_back(std::move(*ia++));
    }
  }
  return out;
}

std::vector<RankedDomain> ranked_domains(const MonthlyDomainCounts& month) {
  std::vector<RankedDomain> ranked(month.counts.begin(), month.counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const RankedDomain& x, const RankedDomain& y) {
    return x.second != y.second ? x.second > y.second : x.first < y.first;
  });
  return ranked;
}

void write_domain_counts_csv(std::ostream& out, std::span<const MonthlyDomainCounts> months) {
  std::vector<const MonthlyDomainCounts*> sorted;
  for (const auto& m : months) sorted.push_back(&m);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](auto* x, auto* y) { return x->month < y->month; });
  out << "month,domain,count\n";
  for (const MonthlyDomainCounts* m : sorted) {
    const std::string key = m->month.to_string();
    for (const auto& [domain, n] : ranked_domains(*m)) {
      out << key << ',' << domain << ',' << n << '\n';
    }
  }
}

std::vector<MonthlyDomainCounts> read_domain_counts_csv(std::istream& in) {
  expect_header(in, "month,domain,count");
  std::map<Month, MonthlyDomainCounts> by_month;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = csv::chomp(line);
    if (row.empty()) continue;
    const auto fields = csv::split(row);
    if (fields.size() != 3 || fields[1].empty()) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 3 fields");
    }
    const Month month = Month::parse(fields[0]);
    const std::uint64_t n = parse_count(fields[2], line_no);
    if (n == 0) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": zero count");
    }
    auto& bucket = by_month[month];
    bucket.month = month;
    if (bucket.counts.contains(std::string(fields[1]))) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": duplicate domain");
    }
    bucket.add(fields[1], n);
  }
  std::vector<MonthlyDomainCounts> out;
  out.reserve(by_month.size());
  for (auto& [_, m] : by_month) out.push_back(std::move(m));
  return out;
}

void write_posts_csv(std::ostream& out, std::span<const MonthlyDomainCounts> months) {
  std::map<Month, std::uint64_t> posts;
  for (const auto& m : months) posts[m.month] += m.n_posts;
  out << "month,n_posts\n";
  for (const auto& [month, n] : posts) out << month.to_string() << ',' << n << '\n';
}

void apply_posts_csv(std::istream& in, std::vector<MonthlyDomainCounts>& months) {
  expect_header(in, "month,n_posts");
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = csv::chomp(line);
    if (row.empty()) continue;
    const auto fields = csv::split(row);
    if (fields.size() != 2) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 2 fields");
    }
    const Month month = Month::parse(fields[0]);
    const std::uint64_t n = parse_count(fields[1], line_no);
    auto it = std::lower_bound(months.begin(), months.end(), month,
                               [](const MonthlyDomainCounts& m, Month key) { return m.month < key; });
    if (it == months.end() || it->month != month) {
      it = months.insert(it, MonthlyDomainCounts{});
      it->month = month;
    }
    it->n_posts = n;
  }
}

}  // namespace attnscope
