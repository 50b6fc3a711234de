#include "attnscope/econometrics.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include <boost/math/distributions/fisher_f.hpp>

#include "attnscope/csv.hpp"
#include "attnscope/error.hpp"
#include "mackinnon.hpp"
#include "ols.hpp"

namespace attnscope {

using detail::ols;
using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr double kSignificance = 0.05;
constexpr std::size_t kMinAdfLength = 20;
constexpr std::size_t kMinPipelineMonths = 24;

detail::DfCase df_case(AdfRegression r) {
  switch (r) {
    case AdfRegression::None: return detail::DfCase::None;
    case AdfRegression::Constant: return detail::DfCase::Constant;
    case AdfRegression::ConstantTrend: return detail::DfCase::ConstantTrend;
  }
  return detail::DfCase::Constant;
}

int n_trend(AdfRegression r) {
  return r == AdfRegression::None ? 0 : r == AdfRegression::Constant ? 1 : 2;
}

/// Dickey-Fuller design for augmentation lag `lags` on the sample that
/// starts after `trim` differences: columns x_{t-1}, lagged differences,
/// then deterministic terms.
void df_design(std::span<const double> x, std::span<const double> dx, int trim, int lags,
               AdfRegression r, MatrixXd& design, VectorXd& target) {
  const Index nobs = static_cast<Index>(dx.size()) - trim;
  const int nt = n_trend(r);
  design.resize(nobs, 1 + lags + nt);
  target.resize(nobs);
  for (Index i = 0; i < nobs; ++i) {
    const Index j = i + trim;
    target(i) = dx[j];
    design(i, 0) = x[j];
    for (int l = 1; l <= lags; ++l) design(i, l) = dx[j - l];
    if (nt >= 1) design(i, 1 + lags) = 1.0;
    if (nt == 2) design(i, 2 + lags) = static_cast<double>(i + 1);
  }
}

std::string fmt(double v, int digits = 4) {
  if (!std::isfinite(v)) return v < 0 ? "-inf" : (v > 0 ? "inf" : "nan");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::vector<double> MonthlySeries::values() const {
  std::vector<double> out;
  out.reserve(observations.size());
  for (const auto& o : observations) out.push_back(o.value);
  return out;
}

MonthlySeries read_series_csv(std::istream& in, std::string label) {
  MonthlySeries series{std::move(label), {}};
  std::string line;
  if (!std::getline(in, line) || csv::chomp(line) != "month,value") {
    throw Error(Errc::ParseError, "series CSV must start with the header month,value");
  }
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
    double value = 0;
    try {
      std::size_t used = 0;
      const std::string text(fields[1]);
      value = std::stod(text, &used);
      if (used != text.size() || !std::isfinite(value)) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad value");
    }
    if (!series.observations.empty() && !(series.observations.back().month < month)) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": months not increasing");
    }
    series.observations.push_back({month, value});
  }
  return series;
}

std::pair<MonthlySeries, MonthlySeries> align(const MonthlySeries& a, const MonthlySeries& b) {
  std::pair<MonthlySeries, MonthlySeries> out{{a.label, {}}, {b.label, {}}};
  auto ia = a.observations.begin(), ib = b.observations.begin();
  while (ia != a.observations.end() && ib != b.observations.end()) {
    if (ia->month < ib->month) {
      ++ia;
    } else if (ib->month < ia->month) {
      ++ib;
    } else {
      out.first.observations.push_back(*ia++);
      out.second.observations.push_back(*ib++);
    }
  }
  const auto& joined = out.first.observations;
  if (joined.empty()) throw Error(Errc::TooShort, "series share no months");
  for (std::size_t i = 1; i < joined.size(); ++i) {
    if (joined[i].month - joined[i - 1].month != 1) {
      throw Error(Errc::AlignmentGap, "common months have a gap after " + joined[i - 1].month.to_string());
    }
  }
  return out;
}

std::vector<double> difference(std::span<const double> x) {
  if (x.size() < 2) throw Error(Errc::TooShort, "differencing needs at least two observations");
  std::vector<double> d(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) d[i - 1] = x[i] - x[i - 1];
  return d;
}

MonthlySeries difference(const MonthlySeries& series) {
  if (series.size() < 2) throw Error(Errc::TooShort, "differencing needs at least two observations");
  MonthlySeries out{series.label, {}};
  out.observations.reserve(series.size() - 1);
  for (std::size_t i = 1; i < series.size(); ++i) {
    out.observations.push_back(
        {series.observations[i].month, series.observations[i].value - series.observations[i - 1].value});
  }
  return out;
}

std::string_view to_string(AdfRegression r) noexcept {
  switch (r) {
    case AdfRegression::None: return "none";
    case AdfRegression::Constant: return "constant";
    case AdfRegression::ConstantTrend: return "constant+trend";
  }
  return "unknown";
}

AdfResult adf_test(std::span<const double> x, const AdfOptions& options) {
  const std::size_t t = x.size();
  if (t < kMinAdfLength) throw Error(Errc::TooShort, "ADF needs at least 20 observations");
  const int nt = n_trend(options.regression);
  const int cap = static_cast<int>(t / 2) - nt - 1;
  int max_lag;
  if (options.max_lag) {
    max_lag = *options.max_lag;
    if (max_lag < 0 || max_lag > cap) throw Error(Errc::InvalidArgument, "ADF max_lag out of range");
  } else {
    max_lag = std::min(cap, static_cast<int>(std::floor(12.0 * std::pow(static_cast<double>(t) / 100.0, 0.25))));
  }

  const std::vector<double> dx = difference(x);
  MatrixXd design;
  VectorXd target;
  int lags = max_lag;
  if (options.autolag) {
    // All candidate lags share the sample trimmed for the largest one.
    df_design(x, dx, max_lag, max_lag, options.regression, design, target);
    double best_aic = std::numeric_limits<double>::infinity();
    const int nt_cols = nt;
    for (int l = 0; l <= max_lag; ++l) {
      MatrixXd sub(design.rows(), 1 + l + nt_cols);
      sub.leftCols(1 + l) = design.leftCols(1 + l);
      sub.rightCols(nt_cols) = design.rightCols(nt_cols);
      const auto fit = ols(sub, target);
      const double aic = -2.0 * detail::ols_loglik(fit.ssr, sub.rows()) + 2.0 * static_cast<double>(sub.cols());
      if (aic < best_aic) {
        best_aic = aic;
        lags = l;
      }
    }
  }
  df_design(x, dx, lags, lags, options.regression, design, target);
  const auto fit = ols(design, target, true);

  AdfResult r;
  r.statistic = fit.beta(0) / fit.std_err(0);
  r.regression = options.regression;
  r.lags_used = lags;
  r.nobs = static_cast<std::size_t>(design.rows());
  r.p_value = detail::mackinnon_p(r.statistic, df_case(options.regression), 1);
  r.critical = detail::mackinnon_crit(df_case(options.regression), 1, static_cast<double>(r.nobs));
  return r;
}

EngleGrangerResult engle_granger(std::span<const double> x, std::span<const double> y,
                                 std::optional<int> max_lag) {
  if (x.size() != y.size()) throw Error(Errc::InvalidArgument, "series lengths differ");
  if (x.size() < kMinAdfLength) throw Error(Errc::TooShort, "Engle-Granger needs at least 20 observations");
  const Index n = static_cast<Index>(x.size());
  MatrixXd design(n, 2);
  VectorXd target(n);
  for (Index i = 0; i < n; ++i) {
    design(i, 0) = x[static_cast<std::size_t>(i)];
    design(i, 1) = 1.0;
    target(i) = y[static_cast<std::size_t>(i)];
  }
  const auto fit = ols(design, target);
  const double tss = (target.array() - target.mean()).square().sum();
  const double r2 = tss > 0 ? 1.0 - fit.ssr / tss : 1.0;

  EngleGrangerResult out;
  out.residual.regression = AdfRegression::None;
  if (r2 < 1.0 - 100.0 * std::sqrt(std::numeric_limits<double>::epsilon())) {
    const std::vector<double> resid(fit.resid.data(), fit.resid.data() + fit.resid.size());
    out.residual = adf_test(resid, {AdfRegression::None, max_lag, true});
  } else {
    // An exact linear relation: the residual is numerically zero.
    out.collinear = true;
    out.residual.statistic = -std::numeric_limits<double>::infinity();
    out.residual.nobs = x.size();
  }
  out.residual.p_value = detail::mackinnon_p(out.residual.statistic, detail::DfCase::Constant, 2);
  out.residual.critical =
      detail::mackinnon_crit(detail::DfCase::Constant, 2, static_cast<double>(x.size() - 1));
  out.co_integrated = out.residual.statistic < out.residual.critical[1];
  return out;
}

GrangerResult granger_test(std::span<const double> cause, std::span<const double> effect, int lag) {
  if (cause.size() != effect.size()) throw Error(Errc::InvalidArgument, "series lengths differ");
  if (lag < 1) throw Error(Errc::InvalidArgument, "Granger lag must be at least one");
  const Index t = static_cast<Index>(effect.size());
  const Index df = t - 3 * lag - 1;
  if (df < 5) throw Error(Errc::TooShort, "too few observations for Granger lag " + std::to_string(lag));

  const Index n = t - lag;
  MatrixXd restricted(n, lag + 1), full(n, 2 * lag + 1);
  VectorXd target(n);
  for (Index i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i + lag);
    target(i) = effect[s];
    for (int l = 1; l <= lag; ++l) {
      restricted(i, l - 1) = full(i, l - 1) = effect[s - static_cast<std::size_t>(l)];
      full(i, lag + l - 1) = cause[s - static_cast<std::size_t>(l)];
    }
    restricted(i, lag) = full(i, 2 * lag) = 1.0;
  }
  const double ssr_r = ols(restricted, target).ssr;
  const double ssr_u = ols(full, target).ssr;
  if (!(ssr_u > 0.0)) throw Error(Errc::SingularRegression, "unrestricted Granger model fits exactly");

  GrangerResult g;
  g.lag = lag;
  g.df_num = lag;
  g.df_den = static_cast<int>(df);
  g.f_statistic = std::max(0.0, (ssr_r - ssr_u) / lag / (ssr_u / static_cast<double>(df)));
  const boost::math::fisher_f dist(g.df_num, g.df_den);
  g.p_value = std::clamp(boost::math::cdf(boost::math::complement(dist, g.f_statistic)), 0.0, 1.0);
  g.significant = g.p_value < kSignificance;
  return g;
}

VarFit fit_var(std::span<const double> y1, std::span<const double> y2, int lag,
               std::optional<std::size_t> sample_start) {
  if (y1.size() != y2.size()) throw Error(Errc::InvalidArgument, "series lengths differ");
  if (lag < 0) throw Error(Errc::InvalidArgument, "VAR lag must be non-negative");
  const std::size_t start = sample_start.value_or(static_cast<std::size_t>(lag));
  if (start < static_cast<std::size_t>(lag)) throw Error(Errc::InvalidArgument, "sample starts before the first usable lag");
  if (y1.size() < start + 4 * static_cast<std::size_t>(lag) + 2) {
    throw Error(Errc::TooShort, "too few observations for VAR lag " + std::to_string(lag));
  }
  const Index n = static_cast<Index>(y1.size() - start);
  MatrixXd design(n, 1 + 2 * lag);
  MatrixXd target(n, 2);
  for (Index i = 0; i < n; ++i) {
    const std::size_t s = start + static_cast<std::size_t>(i);
    target(i, 0) = y1[s];
    target(i, 1) = y2[s];
    design(i, 0) = 1.0;
    for (int l = 1; l <= lag; ++l) {
      design(i, 2 * l - 1) = y1[s - static_cast<std::size_t>(l)];
      design(i, 2 * l) = y2[s - static_cast<std::size_t>(l)];
    }
  }

  VarFit v;
  v.lag = lag;
  v.nobs = static_cast<std::size_t>(n);
  v.coefficients.resize(static_cast<std::size_t>(lag));
  MatrixXd resid(n, 2);
  for (int eq = 0; eq < 2; ++eq) {
    const auto fit = ols(design, target.col(eq));
    resid.col(eq) = fit.resid;
    v.intercept[eq] = fit.beta(0);
    for (int l = 1; l <= lag; ++l) {
      v.coefficients[static_cast<std::size_t>(l - 1)][eq] = {fit.beta(2 * l - 1), fit.beta(2 * l)};
    }
  }
  const MatrixXd sigma = resid.transpose() * resid / static_cast<double>(n);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) v.sigma[r][c] = sigma(r, c);
  }
  v.sigma[0][1] = v.sigma[1][0] = 0.5 * (sigma(0, 1) + sigma(1, 0));
  const double det = v.sigma[0][0] * v.sigma[1][1] - v.sigma[0][1] * v.sigma[1][0];
  if (!(det > 0.0)) throw Error(Errc::SingularRegression, "VAR residual covariance is singular");
  v.aic = std::log(det) + 2.0 * (4.0 * lag + 2.0) / static_cast<double>(n);
  return v;
}

int select_lag(std::span<const double> aic_by_lag, std::span<const int> significant_lags) {
  std::vector<int> lags(significant_lags.begin(), significant_lags.end());
  std::sort(lags.begin(), lags.end());
  std::optional<int> best;
  for (int lag : lags) {
    if (lag < 0 || static_cast<std::size_t>(lag) >= aic_by_lag.size()) {
      throw Error(Errc::InvalidArgument, "significant lag without an AIC value");
    }
    if (!std::isfinite(aic_by_lag[static_cast<std::size_t>(lag)])) continue;
    if (!best || aic_by_lag[static_cast<std::size_t>(lag)] < aic_by_lag[static_cast<std::size_t>(*best)]) {
      best = lag;
    }
  }
  if (!best) throw Error(Errc::NoSignificantLag, "no Granger-significant lag to choose from");
  return *best;
}

int select_lag(std::span<const double> y1, std::span<const double> y2, int max_lag,
               std::span<const GrangerResult> granger) {
  std::vector<double> aic;
  for (int lag = 0; lag <= max_lag; ++lag) {
    aic.push_back(fit_var(y1, y2, lag, static_cast<std::size_t>(max_lag)).aic);
  }
  std::vector<int> significant;
  for (const auto& g : granger) {
    if (g.significant && g.lag <= max_lag) significant.push_back(g.lag);
  }
  return select_lag(aic, significant);
}

bool EconPipelineReport::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

EconPipelineReport run_two_step_pipeline(const MonthlySeries& attention, const MonthlySeries& value,
                                         const EconOptions& options) {
  if (options.max_lag < 1) throw Error(Errc::InvalidArgument, "max_lag must be at least one");
  auto [a, v] = align(attention, value);
  if (a.size() < kMinPipelineMonths) {
    throw Error(Errc::TooShort, "pipeline needs at least 24 common months, got " + std::to_string(a.size()));
  }

  EconPipelineReport report;
  report.max_lag = options.max_lag;
  report.n_common = a.size();
  report.first_month = a.observations.front().month;
  report.last_month = a.observations.back().month;

  auto flag = [&](std::string f) {
    if (!report.has_flag(f)) report.flags.push_back(std::move(f));
  };

  const AdfOptions adf_opts{options.regression, std::nullopt, true};
  auto stationarity = [&](const MonthlySeries& s) {
    SeriesStationarity st;
    st.label = s.label;
    const std::vector<double> levels = s.values();
    try {
      st.levels = adf_test(levels, adf_opts);
    } catch (const Error& e) {
      flag("adf_levels_failed:" + s.label);
      report.notes.push_back("ADF on levels of " + s.label + " failed: " + e.what());
    }
    try {
      st.differences = adf_test(difference(std::span<const double>(levels)), adf_opts);
    } catch (const Error& e) {
      flag("adf_differences_failed:" + s.label);
      report.notes.push_back("ADF on differences of " + s.label + " failed: " + e.what());
    }
    st.differenced = options.difference_all || !st.levels || st.levels->p_value >= kSignificance;
    const auto& used = st.differenced ? st.differences : st.levels;
    st.stationary = used && used->p_value < kSignificance;
    if (!st.stationary) flag("not_stationary:" + s.label);
    return st;
  };
  report.attention = stationarity(a);
  report.value = stationarity(v);

  try {
    report.cointegration = engle_granger(a.values(), v.values());
    if (report.cointegration->collinear) {
      flag("collinear_pair");
      report.notes.push_back("the value series is an exact linear function of the attention series");
    }
  } catch (const Error& e) {
    flag("cointegration_failed");
    report.notes.push_back(std::string("Engle-Granger step failed: ") + e.what());
  }

  // Transformed pair on common months: a level series loses its first
  // observation when the other one is differenced.
  std::vector<double> xa = report.attention.differenced ? difference(a.values()) : a.values();
  std::vector<double> xv = report.value.differenced ? difference(v.values()) : v.values();
  if (xa.size() > xv.size()) xa.erase(xa.begin());
  if (xv.size() > xa.size()) xv.erase(xv.begin());

  for (int lag = 1; lag <= options.max_lag; ++lag) {
    try {
      report.granger.push_back(granger_test(xa, xv, lag));
    } catch (const Error& e) {
      flag(e.code() == Errc::SingularRegression ? "granger_degenerate" : "granger_failed");
    }
  }

  try {
    for (int lag = 0; lag <= options.max_lag; ++lag) {
      report.var.push_back(fit_var(xa, xv, lag, static_cast<std::size_t>(options.max_lag)));
    }
  } catch (const Error& e) {
    flag("var_failed");
    report.notes.push_back(std::string("VAR fitting failed: ") + e.what());
  }

  std::vector<double> aic(static_cast<std::size_t>(options.max_lag) + 1,
                          std::numeric_limits<double>::quiet_NaN());
  for (const auto& fit : report.var) aic[static_cast<std::size_t>(fit.lag)] = fit.aic;
  std::vector<int> significant;
  for (const auto& g : report.granger) {
    if (g.significant) significant.push_back(g.lag);
  }
  try {
    report.chosen_lag = select_lag(aic, significant);
  } catch (const Error&) {
    flag("no_significant_lag");
  }

  report.notes.push_back(
      "chosen lag = lowest VAR AIC among lags whose Granger test has p < 0.05");
  if (report.chosen_lag && significant.front() != *report.chosen_lag) {
    report.notes.push_back("the smallest significant lag is " + std::to_string(significant.front()) +
                           ", which differs from the chosen lag " + std::to_string(*report.chosen_lag));
  }
  if (report.var.size() == aic.size()) {
    const auto overall = static_cast<int>(std::min_element(aic.begin(), aic.end()) - aic.begin());
    if (!report.chosen_lag || overall != *report.chosen_lag) {
      report.notes.push_back("unrestricted AIC minimum is at lag " + std::to_string(overall));
    }
  }
  return report;
}

void write_econ_csv(std::ostream& out, const EconPipelineReport& report) {
  out << "lag,granger_p,significant,aic,chosen\n";
  for (int lag = 0; lag <= report.max_lag; ++lag) {
    out << lag << ',';
    auto g = std::find_if(report.granger.begin(), report.granger.end(),
                          [lag](const GrangerResult& r) { return r.lag == lag; });
    if (g != report.granger.end()) {
      out << csv::format_double(g->p_value) << ',' << (g->significant ? 1 : 0);
    } else {
      out << ',';
    }
    out << ',';
    auto vf = std::find_if(report.var.begin(), report.var.end(),
                           [lag](const VarFit& f) { return f.lag == lag; });
    if (vf != report.var.end()) out << csv::format_double(vf->aic);
    out << ',' << (report.chosen_lag == lag ? 1 : 0) << '\n';
  }
}

void write_econ_report(std::ostream& out, const EconPipelineReport& report) {
  out << "common months: " << report.n_common << " (" << report.first_month.to_string() << " to "
      << report.last_month.to_string() << ")\n\n";
  auto adf_line = [&](std::string_view what, const std::optional<AdfResult>& r) {
    out << "  " << what << ": ";
    if (!r) {
      out << "not available\n";
      return;
    }
    out << "stat " << fmt(r->statistic) << ", p " << fmt(100.0 * r->p_value, 2) << "%, lags "
        << r->lags_used << ", 5% cv " << fmt(r->critical[1]) << '\n';
  };
  for (const auto* s : {&report.attention, &report.value}) {
    out << "ADF (" << (s->levels ? to_string(s->levels->regression) : "constant") << ") " << s->label << '\n';
    adf_line("levels", s->levels);
    adf_line("first difference", s->differences);
    out << "  used downstream: " << (s->differenced ? "first difference" : "levels")
        << (s->stationary ? "" : " (unit root not rejected)") << '\n';
  }
  out << "\nEngle-Granger residual test\n";
  if (report.cointegration) {
    const auto& c = *report.cointegration;
    out << "  stat " << fmt(c.residual.statistic) << ", p " << fmt(100.0 * c.residual.p_value, 2)
        << "%, 5% cv " << fmt(c.residual.critical[1]) << " -> "
        << (c.co_integrated ? "co-integrated" : "not co-integrated") << '\n';
  } else {
    out << "  not available\n";
  }
  out << "\nlag  granger_p  F        aic\n";
  for (int lag = 0; lag <= report.max_lag; ++lag) {
    auto g = std::find_if(report.granger.begin(), report.granger.end(),
                          [lag](const GrangerResult& r) { return r.lag == lag; });
    auto vf = std::find_if(report.var.begin(), report.var.end(),
                           [lag](const VarFit& f) { return f.lag == lag; });
    char buf[128];
    std::snprintf(buf, sizeof buf, "%3d  %-9s  %-7s  %s%s%s\n", lag,
                  g != report.granger.end() ? (fmt(100.0 * g->p_value, 2) + "%").c_str() : "-",
                  g != report.granger.end() ? fmt(g->f_statistic, 3).c_str() : "-",
                  vf != report.var.end() ? fmt(vf->aic, 4).c_str() : "-",
                  g != report.granger.end() && g->significant ? " sig" : "",
                  report.chosen_lag == lag ? " *" : "");
    out << buf;
  }
  out << "\nchosen lag: " << (report.chosen_lag ? std::to_string(*report.chosen_lag) : "none") << '\n';
  if (!report.flags.empty()) {
    out << "flags:";
    for (const auto& f : report.flags) out << ' ' << f;
    out << '\n';
  }
  for (const auto& n : report.notes) out << "note: " << n << '\n';
}

}  // namespace attnscope
