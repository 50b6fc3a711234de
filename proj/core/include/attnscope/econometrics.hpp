#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "attnscope/month.hpp"

namespace attnscope {

struct Observation {
  Month month;
  double value = 0.0;

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct MonthlySeries {
  std::string label;
  std::vector<Observation> observations;  // strictly increasing months

  std::vector<double> values() const;
  std::size_t size() const noexcept { return observations.size(); }
};

/// `month,value` with a header row. Months must be strictly increasing.
/// Throws Errc::ParseError.
MonthlySeries read_series_csv(std::istream& in, std::string label);

/// Inner join on months. Throws Errc::AlignmentGap when the common months
/// are not contiguous and Errc::TooShort when there are none.
std::pair<MonthlySeries, MonthlySeries> align(const MonthlySeries& a, const MonthlySeries& b);

/// x_t - x_{t-1}, labelled with the later month. Throws Errc::TooShort.
MonthlySeries difference(const MonthlySeries& series);
std::vector<double> difference(std::span<const double> x);

enum class AdfRegression { None, Constant, ConstantTrend };
std::string_view to_string(AdfRegression r) noexcept;

struct AdfOptions {
  AdfRegression regression = AdfRegression::Constant;
  /// Largest augmentation lag; default floor(12 (T/100)^(1/4)), capped so
  /// the regression keeps half the sample.
  std::optional<int> max_lag;
  /// Pick the lag by AIC over 0..max_lag on a common sample; otherwise use
  /// max_lag as given.
  bool autolag = true;
};

struct AdfResult {
  double statistic = 0.0;
  double p_value = 1.0;
  int lags_used = 0;
  std::size_t nobs = 0;  // observations in the final regression
  AdfRegression regression = AdfRegression::Constant;
  std::array<double, 3> critical{};  // 1%, 5%, 10%
};

/// Augmented Dickey-Fuller test; the null is a unit root. Throws
/// Errc::TooShort below 20 observations and Errc::SingularRegression.
AdfResult adf_test(std::span<const double> x, const AdfOptions& options = {});

struct EngleGrangerResult {
  AdfResult residual;          // p-value and critical values for two series
  bool co_integrated = false;  // statistic below the 5% critical value
  bool collinear = false;      // y is an exact affine function of x
};

/// Regresses y on x with an intercept and tests the residuals for a unit
/// root without deterministic terms.
EngleGrangerResult engle_granger(std::span<const double> x, std::span<const double> y,
                                 std::optional<int> max_lag = std::nullopt);

struct GrangerResult {
  int lag = 0;
  double f_statistic = 0.0;
  double p_value = 1.0;
  int df_num = 0;
  int df_den = 0;
  bool significant = false;  // p < 0.05
};

/// F-test that lags 1..lag of `cause` add explanatory power for `effect`
/// beyond its own lags. Throws Errc::TooShort when T - 3 lag - 1 < 5 and
/// Errc::SingularRegression.
GrangerResult granger_test(std::span<const double> cause, std::span<const double> effect, int lag);

struct VarFit {
  int lag = 0;
  std::size_t nobs = 0;
  std::array<double, 2> intercept{};
  std::vector<std::array<std::array<double, 2>, 2>> coefficients;  // [lag-1][eq][var]
  std::array<std::array<double, 2>, 2> sigma{};                    // MLE residual covariance
  double aic = 0.0;
};

/// Bivariate VAR by equation-wise OLS with an intercept, estimated on
/// observations sample_start..T-1 (sample_start defaults to lag).
/// AIC = ln det(sigma) + 2 (4 p + 2) / n. Throws Errc::TooShort when
/// n < 4 lag + 2 and Errc::SingularRegression.
VarFit fit_var(std::span<const double> y1, std::span<const double> y2, int lag,
               std::optional<std::size_t> sample_start = std::nullopt);

/// Argmin of aic_by_lag[lag] over the significant lags; ties go to the
/// smaller lag. Throws Errc::NoSignificantLag.
int select_lag(std::span<const double> aic_by_lag, std::span<const int> significant_lags);

/// Fits VAR(0..max_lag) on the common sample starting at max_lag and
/// selects among the significant Granger lags.
int select_lag(std::span<const double> y1, std::span<const double> y2, int max_lag,
               std::span<const GrangerResult> granger);

struct EconOptions {
  int max_lag = 12;
  AdfRegression regression = AdfRegression::Constant;
  /// Difference both series even when the level test already rejects a
  /// unit root.
  bool difference_all = false;
};

struct SeriesStationarity {
  std::string label;
  std::optional<AdfResult> levels;
  std::optional<AdfResult> differences;
  bool differenced = false;
  bool stationary = false;  // the series used downstream rejects a unit root
};

struct EconPipelineReport {
  std::size_t n_common = 0;
  Month first_month;
  Month last_month;
  SeriesStationarity attention;
  SeriesStationarity value;
  std::optional<EngleGrangerResult> cointegration;
  std::vector<GrangerResult> granger;  // successful lags only
  std::vector<VarFit> var;             // lags 0..max_lag on a common sample
  std::optional<int> chosen_lag;
  int max_lag = 12;
  std::vector<std::string> flags;  // machine-readable failure markers
  std::vector<std::string> notes;

  bool has_flag(std::string_view flag) const;
};

/// ADF on levels and differences, differencing of non-stationary series,
/// Engle-Granger on levels, Granger tests for lags 1..max_lag on the
/// transformed pair, VAR AIC and lag choice. Failures in later stages are
/// recorded as flags rather than thrown. Throws Errc::TooShort when fewer
/// than 24 months align, plus alignment errors.
EconPipelineReport run_two_step_pipeline(const MonthlySeries& attention, const MonthlySeries& value,
                                         const EconOptions& options = {});

/// `lag,granger_p,significant,aic,chosen` for lags 0..max_lag.
void write_econ_csv(std::ostream& out, const EconPipelineReport& report);
void write_econ_report(std::ostream& out, const EconPipelineReport& report);

}  // namespace attnscope
