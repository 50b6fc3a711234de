#include "attnscope/tail_fit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>

#include <boost/math/tools/minima.hpp>

#include "attnscope/csv.hpp"
#include "attnscope/error.hpp"
#include "optimize.hpp"

namespace attnscope {

namespace {

constexpr double kLn2Pi = 1.8378770664093454835606594728112;

/// Distinct values ascending with multiplicities.
struct Histogram {
  std::vector<std::uint64_t> value;
  std::vector<std::size_t> count;
};

Histogram histogram(std::span<const std::uint64_t> values) {
  std::vector<std::uint64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  Histogram h;
  for (std::uint64_t v : sorted) {
    if (v == 0) throw Error(Errc::InvalidArgument, "tail fitting needs positive values");
    if (h.value.empty() || h.value.back() != v) {
      h.value.push_back(v);
      h.count.push_back(1);
    } else {
      ++h.count.back();
    }
  }
  return h;
}

/// ln of the standard normal survival function, stable far into the tail.
double log_normal_sf(double u) {
  if (u < 25.0) return std::log(0.5 * std::erfc(u / std::sqrt(2.0)));
  const double u2 = u * u;
  return -0.5 * u2 - std::log(u) - 0.5 * kLn2Pi +
         std::log1p(-1.0 / u2 + 3.0 / (u2 * u2) - 15.0 / (u2 * u2 * u2));
}

double lognormal_logpdf(double x, double mu, double sigma, double log_norm) {
  const double z = (std::log(x) - mu) / sigma;
  return -std::log(x) - std::log(sigma) - 0.5 * kLn2Pi - 0.5 * z * z - log_norm;
}

double powerlaw_logpdf(double x, double alpha, double lower) {
  return std::log(alpha - 1.0) - std::log(lower) - alpha * std::log(x / lower);
}

double exponential_logpdf(double x, double lambda, double lower) {
  return std::log(lambda) - lambda * (x - lower);
}

std::vector<double> tail_of(std::span<const std::uint64_t> values, std::uint64_t xmin) {
  std::vector<double> tail;
  for (std::uint64_t v : values) {
    if (v >= xmin) tail.push_back(static_cast<double>(v));
  }
  return tail;
}

double exact_alpha(double sum_log, std::size_t n, std::uint64_t xmin) {
  const double q = static_cast<double>(xmin);
  auto neg_loglik = [&](double a) {
    return a * sum_log + static_cast<double>(n) * std::log(hurwitz_zeta(a, q));
  };
  return boost::math::tools::brent_find_minima(neg_loglik, 1.0 + 1e-6, 30.0, 50).first;
}

/// Model CDF P(X <= x) of the fitted discrete power law.
struct PowerLawCdf {
  double alpha;
  std::uint64_t xmin;
  bool exact;
  double zeta_min = 0.0;

  PowerLawCdf(double a, std::uint64_t xm, bool ex) : alpha(a), xmin(xm), exact(ex) {
    if (exact) zeta_min = hurwitz_zeta(alpha, static_cast<double>(xmin));
  }

  double operator()(std::uint64_t x) const {
    if (exact) return 1.0 - hurwitz_zeta(alpha, static_cast<double>(x + 1)) / zeta_min;
    return 1.0 - std::pow((static_cast<double>(x) + 0.5) / (static_cast<double>(xmin) - 0.5),
                          1.0 - alpha);
  }
};

/// KS distance of the tail starting at h.value[first]. Between consecutive
/// observed values the empirical CDF is flat and the model CDF increasing, so
/// both ends of each gap bound the supremum.
double ks_from_histogram(const Histogram& h, std::size_t first, std::size_t n_tail,
                         const PowerLawCdf& cdf) {
  double d = 0.0;
  std::size_t below = 0;
  for (std::size_t k = first; k < h.value.size(); ++k) {
    below += h.count[k];
    const double emp = static_cast<double>(below) / static_cast<double>(n_tail);
    d = std::max(d, std::abs(emp - cdf(h.value[k])));
    if (k + 1 < h.value.size() && h.value[k + 1] - 1 > h.value[k]) {
      d = std::max(d, std::abs(emp - cdf(h.value[k + 1] - 1)));
    }
  }
  return d;
}

}  // namespace

CcdfCurve empirical_ccdf(std::span<const std::uint64_t> values) {
  if (values.empty()) throw Error(Errc::EmptyInput, "CCDF of an empty sample");
  const Histogram h = histogram(values);
  CcdfCurve curve;
  curve.reserve(h.value.size());
  std::size_t at_or_above = values.size();
  for (std::size_t k = 0; k < h.value.size(); ++k) {
    curve.push_back({h.value[k], static_cast<double>(at_or_above) / static_cast<double>(values.size())});
    at_or_above -= h.count[k];
  }
  return curve;
}

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw Error(Errc::InvalidArgument, "hurwitz_zeta needs s > 1, q > 0");
  // Euler-Maclaurin summation: direct sum of the first terms, then the
  // integral, half-term and Bernoulli corrections at q + N.
  constexpr int kDirect = 12;
  static constexpr double kBernoulliOverFactorial[] = {
      1.0 / 12.0,                  // B2 / 2!
      -1.0 / 720.0,                // B4 / 4!
      1.0 / 30240.0,               // B6 / 6!
      -1.0 / 1209600.0,            // B8 / 8!
      1.0 / 47900160.0,            // B10 / 10!
      -691.0 / 1307674368000.0,    // B12 / 12!
      1.0 / 74724249600.0,         // B14 / 14!
  };
  double sum = 0.0;
  for (int k = 0; k < kDirect; ++k) sum += std::pow(q + k, -s);
  const double a = q + kDirect;
  sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  double rising = s;  // s (s+1) ... (s + 2j - 2)
  double power = std::pow(a, -s - 1.0);
  for (int j = 0; j < 7; ++j) {
    sum += kBernoulliOverFactorial[j] * rising * power;
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
    power /= a * a;
  }
  return sum;
}

double power_law_alpha(std::span<const std::uint64_t> values, std::uint64_t xmin) {
  if (xmin == 0) throw Error(Errc::InvalidArgument, "xmin must be positive");
  const double lower = static_cast<double>(xmin) - 0.5;
  double sum = 0.0;
  std::size_t n = 0;
  for (std::uint64_t v : values) {
    if (v >= xmin) {
      sum += std::log(static_cast<double>(v) / lower);
      ++n;
    }
  }
  if (n < 2) throw Error(Errc::DegenerateTail, "fewer than two tail observations");
  return 1.0 + static_cast<double>(n) / sum;
}

double power_law_ks(std::span<const std::uint64_t> values, std::uint64_t xmin, double alpha,
                    bool exact_zeta) {
  const Histogram h = histogram(values);
  const auto first = static_cast<std::size_t>(
      std::lower_bound(h.value.begin(), h.value.end(), xmin) - h.value.begin());
  std::size_t n_tail = 0;
  for (std::size_t k = first; k < h.value.size(); ++k) n_tail += h.count[k];
  if (n_tail == 0) throw Error(Errc::DegenerateTail, "empty tail");
  return ks_from_histogram(h, first, n_tail, PowerLawCdf(alpha, xmin, exact_zeta));
}

PowerLawFit fit_power_law(std::span<const std::uint64_t> values, const PowerLawOptions& options) {
  const Histogram h = histogram(values);
  const std::size_t m = h.value.size();
  if (m < 2) throw Error(Errc::DegenerateInput, "fewer than two distinct values");

  // Suffix sums give every candidate's tail size and log-sum in O(1).
  std::vector<std::size_t> tail_n(m + 1, 0);
  std::vector<double> tail_log(m + 1, 0.0);
  for (std::size_t k = m; k-- > 0;) {
    tail_n[k] = tail_n[k + 1] + h.count[k];
    tail_log[k] = tail_log[k + 1] + static_cast<double>(h.count[k]) * std::log(static_cast<double>(h.value[k]));
  }

  // Candidates need at least two distinct tail values; the floor on the tail
  // size is dropped only if it would leave no candidate.
  std::size_t last_candidate = m - 1;  // exclusive
  bool any_floor = false;
  for (std::size_t j = 0; j < last_candidate; ++j) any_floor |= tail_n[j] >= options.min_tail;

  PowerLawFit best;
  bool have_best = false;
  for (std::size_t j = 0; j < last_candidate; ++j) {
    if (any_floor && tail_n[j] < options.min_tail) continue;
    const std::uint64_t xmin = h.value[j];
    const double n = static_cast<double>(tail_n[j]);
    double alpha;
    if (options.exact_zeta) {
      alpha = exact_alpha(tail_log[j], tail_n[j], xmin);
    } else {
      alpha = 1.0 + n / (tail_log[j] - n * std::log(static_cast<double>(xmin) - 0.5));
    }
    const double ks = ks_from_histogram(h, j, tail_n[j], PowerLawCdf(alpha, xmin, options.exact_zeta));
    // Relative slack keeps ties stable under re-weighting of the sample.
    if (!have_best || ks < best.ks_distance - 1e-12) {
      best = {alpha, xmin, ks, tail_n[j]};
      have_best = true;
    }
  }
  return best;
}

LognormalFit fit_lognormal_tail(std::span<const double> x, double lower) {
  if (x.size() < 2) throw Error(Errc::DegenerateTail, "fewer than two tail observations");
  if (!(lower > 0.0)) throw Error(Errc::InvalidArgument, "lognormal truncation point must be positive");
  std::vector<double> logs;
  logs.reserve(x.size());
  for (double v : x) {
    if (!(v >= lower)) throw Error(Errc::InvalidArgument, "value below truncation point");
    logs.push_back(std::log(v));
  }
  const double n = static_cast<double>(logs.size());
  const double mean = std::accumulate(logs.begin(), logs.end(), 0.0) / n;
  double ss = 0.0;
  for (double l : logs) ss += (l - mean) * (l - mean);
  const double sd = std::sqrt(ss / n);
  if (!(sd > 1e-12 * std::max(1.0, std::abs(mean)))) {
    throw Error(Errc::DegenerateTail, "zero variance of log values");
  }
  const double log_lower = std::log(lower);

  // Sufficient statistics: sum ln x and sum (ln x)^2.
  double s1 = 0.0, s2 = 0.0;
  for (double l : logs) {
    s1 += l;
    s2 += l * l;
  }
  auto loglik = [&](double mu, double sigma) {
    const double quad = (s2 - 2.0 * mu * s1 + n * mu * mu) / (sigma * sigma);
    return -s1 - n * std::log(sigma) - 0.5 * n * kLn2Pi - 0.5 * quad -
           n * log_normal_sf((log_lower - mu) / sigma);
  };
  // Parameter box: the likelihood can keep rising as mu -> -inf with a
  // growing sigma (the power-law limit), so the search is bounded.
  const double mu_lo = log_lower - 200.0, mu_hi = mean + 50.0 * sd + 10.0;
  auto objective = [&](const std::array<double, 2>& p) {
    const double sigma = std::exp(p[1]);
    if (p[0] < mu_lo || p[0] > mu_hi || p[1] < std::log(1e-6) || p[1] > std::log(1e3)) return HUGE_VAL;
    return -loglik(p[0], sigma);
  };
  auto best = detail::nelder_mead_2d(objective, {mean, std::log(sd)}, {0.5 * sd + 0.1, 0.3});
  // A restart from the first optimum guards against simplex collapse.
  best = detail::nelder_mead_2d(objective, best, {0.1 * sd + 0.01, 0.05});
  const double sigma = std::exp(best[1]);
  return {best[0], sigma, loglik(best[0], sigma)};
}

ExponentialFit fit_exponential_tail(std::span<const double> x, double lower) {
  if (x.size() < 2) throw Error(Errc::DegenerateTail, "fewer than two tail observations");
  double excess = 0.0;
  for (double v : x) {
    if (!(v >= lower)) throw Error(Errc::InvalidArgument, "value below truncation point");
    excess += v - lower;
  }
  const double n = static_cast<double>(x.size());
  if (!(excess > 0.0)) throw Error(Errc::DegenerateTail, "all values at the truncation point");
  const double lambda = n / excess;
  return {lambda, n * std::log(lambda) - lambda * excess};
}

AlternativeFits fit_alternatives(std::span<const std::uint64_t> values, std::uint64_t xmin) {
  if (xmin == 0) throw Error(Errc::InvalidArgument, "xmin must be positive");
  const std::vector<double> tail = tail_of(values, xmin);
  if (tail.size() < 2) throw Error(Errc::DegenerateTail, "fewer than two tail observations");
  if (std::adjacent_find(tail.begin(), tail.end(), std::not_equal_to<>()) == tail.end()) {
    throw Error(Errc::DegenerateTail, "all tail values identical");
  }
  const double lower = static_cast<double>(xmin) - 0.5;
  return {fit_lognormal_tail(tail, lower), fit_exponential_tail(tail, lower)};
}

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::PowerLaw: return "power_law";
    case Family::Lognormal: return "lognormal";
    case Family::Exponential: return "exponential";
  }
  return "unknown";
}

LlrComparison loglik_ratio(std::span<const std::uint64_t> values, std::uint64_t xmin, Family a,
                           Family b) {
  const std::vector<double> tail = tail_of(values, xmin);
  if (tail.size() < 2) throw Error(Errc::DegenerateTail, "fewer than two tail observations");
  const double lower = static_cast<double>(xmin) - 0.5;

  std::optional<AlternativeFits> alt;
  double alpha = 0.0;
  auto logpdf_for = [&](Family f) -> std::function<double(double)> {
    switch (f) {
      case Family::PowerLaw:
        if (alpha == 0.0) alpha = power_law_alpha(values, xmin);
        return [alpha = alpha, lower](double x) { return powerlaw_logpdf(x, alpha, lower); };
      case Family::Lognormal: {
        if (!alt) alt = fit_alternatives(values, xmin);
        const auto ln = alt->lognormal;
        const double log_norm = log_normal_sf((std::log(lower) - ln.mu) / ln.sigma);
        return [ln, log_norm](double x) { return lognormal_logpdf(x, ln.mu, ln.sigma, log_norm); };
      }
      case Family::Exponential: {
        if (!alt) alt = fit_alternatives(values, xmin);
        const double lambda = alt->exponential.lambda;
        return [lambda, lower](double x) { return exponential_logpdf(x, lambda, lower); };
      }
    }
    throw Error(Errc::InvalidArgument, "unknown family");
  };
  const auto la = logpdf_for(a);
  const auto lb = logpdf_for(b);

  std::vector<double> diff(tail.size());
  for (std::size_t i = 0; i < tail.size(); ++i) diff[i] = la(tail[i]) - lb(tail[i]);
  const double n = static_cast<double>(diff.size());
  const double r = std::accumulate(diff.begin(), diff.end(), 0.0);
  const double mean = r / n;
  double var = 0.0;
  for (double d : diff) var += (d - mean) * (d - mean);
  var /= n;

  LlrComparison out{a, b, r, 1.0};
  if (var > 0.0) out.p_value = std::erfc(std::abs(r) / std::sqrt(2.0 * n * var));
  return out;
}

TailFitReport fit_tail(std::span<const std::uint64_t> values, const PowerLawOptions& options) {
  TailFitReport report;
  report.power_law = fit_power_law(values, options);
  const std::uint64_t xmin = report.power_law.xmin;
  const double lower = static_cast<double>(xmin) - 0.5;
  const double alpha_cont = power_law_alpha(values, xmin);
  for (std::uint64_t v : values) {
    if (v >= xmin) report.loglik_powerlaw += powerlaw_logpdf(static_cast<double>(v), alpha_cont, lower);
  }
  report.alternatives = fit_alternatives(values, xmin);
  report.pl_vs_lognormal = loglik_ratio(values, xmin, Family::PowerLaw, Family::Lognormal);
  report.pl_vs_exponential = loglik_ratio(values, xmin, Family::PowerLaw, Family::Exponential);
  return report;
}

std::vector<PeriodTailFit> fit_all_periods(std::span<const MonthlyDomainCounts> months,
                                           Granularity granularity,
                                           const PowerLawOptions& options) {
  // Period label -> per-domain totals.
  std::map<std::string, std::map<std::string_view, std::uint64_t>> pooled;
  for (const auto& m : months) {
    const std::string label =
        granularity == Granularity::Year ? std::to_string(m.month.year()) : m.month.to_string();
    auto& totals = pooled[label];
    for (const auto& [domain, n] : m.counts) totals[domain] += n;
  }

  std::vector<PeriodTailFit> out;
  for (const auto& [label, totals] : pooled) {
    PeriodTailFit fit{label, std::nullopt, {}};
    if (totals.empty()) {
      fit.note = "skipped: no links";
      out.push_back(std::move(fit));
      continue;
    }
    std::vector<std::uint64_t> values;
    values.reserve(totals.size());
    for (const auto& [_, n] : totals) values.push_back(n);
    try {
      fit.report = fit_tail(values, options);
    } catch (const Error& e) {
      fit.note = e.what();
    }
    out.push_back(std::move(fit));
  }
  return out;
}

void write_tailfit_csv(std::ostream& out, std::span<const PeriodTailFit> fits,
                       Granularity granularity) {
  out << (granularity == Granularity::Year ? "year" : "month")
      << ",alpha,xmin,ks,n_tail,R_pl_ln,p_pl_ln,R_pl_exp,p_pl_exp\n";
  for (const auto& f : fits) {
    if (!f.report) {
      if (f.note.starts_with("skipped")) continue;
      out << f.period << ",,,,,,,,\n";
      continue;
    }
    const auto& r = *f.report;
    out << f.period << ',' << csv::format_double(r.power_law.alpha) << ',' << r.power_law.xmin
        << ',' << csv::format_double(r.power_law.ks_distance) << ',' << r.power_law.n_tail << ','
        << csv::format_double(r.pl_vs_lognormal.ratio) << ','
        << csv::format_double(r.pl_vs_lognormal.p_value) << ','
        << csv::format_double(r.pl_vs_exponential.ratio) << ','
        << csv::format_double(r.pl_vs_exponential.p_value) << '\n';
  }
}

}  // namespace attnscope
