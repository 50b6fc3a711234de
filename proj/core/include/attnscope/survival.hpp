#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "attnscope/counts.hpp"
#include "attnscope/month.hpp"

namespace attnscope {

struct CohortAssignment {
  std::string domain;
  Month birth_month;
  int birth_year = 0;

  friend bool operator==(const CohortAssignment&, const CohortAssignment&) = default;
};

/// One assignment per distinct domain, sorted by domain; the birth month is
/// the first month with a nonzero tally. Throws Errc::EmptyCorpus when no
/// month has any link.
std::vector<CohortAssignment> assign_cohorts(std::span<const MonthlyDomainCounts> monthly);

enum class SurvivalWindow {
  /// Age a covers calendar year birth_year + a.
  Calendar,
  /// Age a covers the twelve months starting 12a months after the domain's
  /// own birth month.
  Rolling,
};

struct CohortSurvival {
  int birth_year = 0;
  std::size_t cohort_size = 0;
  /// Indexed by age; survival[0] == 1. Ages not fully observed before the
  /// end of the corpus are absent.
  std::vector<double> survival;
};

struct SurvivalOptions {
  int horizon_years = 20;  // largest age reported
  SurvivalWindow window = SurvivalWindow::Calendar;
};

/// Cohorts ascending by birth year. Throws Errc::InvalidArgument for a
/// horizon below one.
std::vector<CohortSurvival> survival_curve(std::span<const CohortAssignment> cohorts,
                                           std::span<const MonthlyDomainCounts> monthly,
                                           const SurvivalOptions& options = {});

/// `birth_year,cohort_size,age,fraction`, one row per reported age.
void write_survival_csv(std::ostream& out, std::span<const CohortSurvival> table);

}  // namespace attnscope
