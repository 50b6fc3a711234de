#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attnscope/counts.hpp"

namespace attnscope {

struct CcdfPoint {
  std::uint64_t x;
  double p;  // fraction of observations >= x
};
using CcdfCurve = std::vector<CcdfPoint>;

/// One point per distinct value, ascending; the first point has p = 1.
/// Throws Errc::EmptyInput.
CcdfCurve empirical_ccdf(std::span<const std::uint64_t> values);

struct PowerLawFit {
  double alpha = 0.0;
  std::uint64_t xmin = 0;
  double ks_distance = 0.0;
  std::size_t n_tail = 0;
};

struct PowerLawOptions {
  /// Candidate cutoffs with fewer tail observations are skipped unless no
  /// candidate has enough.
  std::size_t min_tail = 10;
  /// Exact discrete MLE through the Hurwitz zeta function instead of the
  /// continuous approximation with the 0.5 offset.
  bool exact_zeta = false;
};

/// Discrete power-law fit with xmin chosen by minimum KS distance (ties go
/// to the smaller xmin). Throws Errc::DegenerateInput for fewer than two
/// distinct values.
PowerLawFit fit_power_law(std::span<const std::uint64_t> values, const PowerLawOptions& options = {});

/// alpha = 1 + n / sum(ln(x / (xmin - 0.5))) over x >= xmin.
double power_law_alpha(std::span<const std::uint64_t> values, std::uint64_t xmin);

/// KS distance between the tail's empirical CDF and the fitted discrete CDF,
/// evaluated over every integer in [xmin, max].
double power_law_ks(std::span<const std::uint64_t> values, std::uint64_t xmin, double alpha,
                    bool exact_zeta = false);

/// Hurwitz zeta(s, q) = sum_{k>=0} (q + k)^-s for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

struct LognormalFit {
  double mu = 0.0;
  double sigma = 0.0;
  double loglik = 0.0;
};

struct ExponentialFit {
  double lambda = 0.0;
  double loglik = 0.0;
};

/// MLE of a lognormal truncated below at `lower` (numeric maximization).
LognormalFit fit_lognormal_tail(std::span<const double> x, double lower);
/// MLE of an exponential shifted to start at `lower`: 1 / (mean - lower).
ExponentialFit fit_exponential_tail(std::span<const double> x, double lower);

struct AlternativeFits {
  LognormalFit lognormal;
  ExponentialFit exponential;
};

/// Both alternatives on the tail x >= xmin, continuous approximation with
/// the truncation point at xmin - 0.5. Throws Errc::DegenerateTail.
AlternativeFits fit_alternatives(std::span<const std::uint64_t> values, std::uint64_t xmin);

enum class Family { PowerLaw, Lognormal, Exponential };
std::string_view to_string(Family family) noexcept;

struct LlrComparison {
  Family family_a;
  Family family_b;
  double ratio = 0.0;    // R > 0 favours family_a
  double p_value = 1.0;  // Vuong, two-sided
};

/// Fits both families on the same tail and compares per-observation
/// log-likelihoods.
LlrComparison loglik_ratio(std::span<const std::uint64_t> values, std::uint64_t xmin, Family a,
                           Family b);

struct TailFitReport {
  PowerLawFit power_law;
  double loglik_powerlaw = 0.0;
  AlternativeFits alternatives;
  LlrComparison pl_vs_lognormal{Family::PowerLaw, Family::Lognormal};
  LlrComparison pl_vs_exponential{Family::PowerLaw, Family::Exponential};
};

TailFitReport fit_tail(std::span<const std::uint64_t> values, const PowerLawOptions& options = {});

enum class Granularity { Month, Year };

struct PeriodTailFit {
  std::string period;
  std::optional<TailFitReport> report;
  std::string note;  // set when the period was skipped or failed
};

/// Per calendar year (per-domain totals pooled over the year's months) or
/// per month. Failures are recorded per period; empty periods are skipped.
std::vector<PeriodTailFit> fit_all_periods(std::span<const MonthlyDomainCounts> months,
                                           Granularity granularity,
                                           const PowerLawOptions& options = {});

/// `year,alpha,xmin,ks,n_tail,R_pl_ln,p_pl_ln,R_pl_exp,p_pl_exp`; the first
/// column is named `month` at monthly granularity. Failed periods keep their
/// row with empty numeric fields.
void write_tailfit_csv(std::ostream& out, std::span<const PeriodTailFit> fits,
                       Granularity granularity);

}  // namespace attnscope
