#include "attnscope/survival.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <unordered_map>

#include "attnscope/csv.hpp"
#include "attnscope/error.hpp"

namespace attnscope {

std::vector<CohortAssignment> assign_cohorts(std::span<const MonthlyDomainCounts> monthly) {
  std::unordered_map<std::string_view, Month> first;
  for (const auto& m : monthly) {
    for (const auto& [domain, n] : m.counts) {
      if (n == 0) continue;
      auto [it, inserted] = first.try_emplace(domain, m.month);
      if (!inserted && m.month < it->second) it->second = m.month;
    }
  }
  if (first.empty()) throw Error(Errc::EmptyCorpus, "no linked domains in the corpus");
  std::vector<CohortAssignment> out;
  out.reserve(first.size());
  for (const auto& [domain, month] : first) out.push_back({std::string(domain), month, month.year()});
  std::sort(out.begin(), out.end(),
            [](const CohortAssignment& a, const CohortAssignment& b) { return a.domain < b.domain; });
  return out;
}

std::vector<CohortSurvival> survival_curve(std::span<const CohortAssignment> cohorts,
                                           std::span<const MonthlyDomainCounts> monthly,
                                           const SurvivalOptions& options) {
  if (options.horizon_years < 1) throw Error(Errc::InvalidArgument, "horizon must be at least one year");
  if (cohorts.empty()) return {};

  // Active month indices per domain, ascending.
  std::unordered_map<std::string_view, std::vector<int>> active;
  int last_month = cohorts.front().birth_month.index();
  for (const auto& c : cohorts) active.try_emplace(c.domain);
  for (const auto& m : monthly) {
    last_month = std::max(last_month, m.month.index());
    for (const auto& [domain, n] : m.counts) {
      if (n == 0) continue;
      if (auto it = active.find(domain); it != active.end()) it->second.push_back(m.month.index());
    }
  }
  for (auto& [_, months] : active) std::sort(months.begin(), months.end());

  auto active_between = [](const std::vector<int>& months, int lo, int hi) {
    auto it = std::lower_bound(months.begin(), months.end(), lo);
    return it != months.end() && *it <= hi;
  };

  std::map<int, std::vector<const CohortAssignment*>> by_year;
  for (const auto& c : cohorts) by_year[c.birth_year].push_back(&c);

  std::vector<CohortSurvival> table;
  for (const auto& [year, members] : by_year) {
    CohortSurvival row{year, members.size(), {1.0}};
    for (int age = 1; age <= options.horizon_years; ++age) {
      std::size_t alive = 0;
      bool observed = true;
      for (const CohortAssignment* c : members) {
        int lo, hi;
        if (options.window == SurvivalWindow::Calendar) {
          lo = (year + age) * 12;
        } else {
          lo = c->birth_month.index() + 12 * age;
        }
        hi = lo + 11;
        if (hi > last_month) {
          observed = false;
          break;
        }
        alive += active_between(active.at(c->domain), lo, hi);
      }
      if (!observed) break;
      row.survival.push_back(static_cast<double>(alive) / static_cast<double>(members.size()));
    }
    table.push_back(std::move(row));
  }
  return table;
}

void write_survival_csv(std::ostream& out, std::span<const CohortSurvival> table) {
  out << "birth_year,cohort_size,age,fraction\n";
  for (const auto& row : table) {
    for (std::size_t age = 0; age < row.survival.size(); ++age) {
      out << row.birth_year << ',' << row.cohort_size << ',' << age << ','
          << csv::format_double(row.survival[age]) << '\n';
    }
  }
}

}  // namespace attnscope
