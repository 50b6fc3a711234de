#include "attnscope/validation.hpp"

#include <cmath>

#include "attnscope/econometrics.hpp"
#include "attnscope/error.hpp"
#include "attnscope/simulate.hpp"
#include "attnscope/tail_fit.hpp"

namespace attnscope::validation {

namespace {

MonthlySeries as_series(std::string label, const std::vector<double>& v) {
  MonthlySeries s{std::move(label), {}};
  const Month start = Month::from_year_month(2000, 1);
  for (std::size_t i = 0; i < v.size(); ++i) s.observations.push_back({start + static_cast<int>(i), v[i]});
  return s;
}

template <class F>
Rate count(std::size_t trials, F&& trial) {
  Rate r{0, trials};
  for (std::size_t i = 0; i < trials; ++i) r.hits += trial(i) ? 1 : 0;
  return r;
}

}  // namespace

PowerLawRecovery power_law_recovery(std::size_t n, double alpha, std::uint64_t xmin, std::uint64_t seed) {
  auto rng = sim::trial_rng(seed, 0);
  const auto sample = sim::discrete_power_law(n, alpha, xmin, rng);
  const auto fit = fit_power_law(sample);
  return {fit.alpha, fit.xmin, fit.n_tail};
}

Rate power_law_coverage(std::size_t trials, std::size_t n, double alpha, std::uint64_t xmin,
                        std::uint64_t seed) {
  return count(trials, [&](std::size_t i) {
    auto rng = sim::trial_rng(seed, i);
    const auto fit = fit_power_law(sim::discrete_power_law(n, alpha, xmin, rng));
    const double se = (fit.alpha - 1.0) / std::sqrt(static_cast<double>(fit.n_tail));
    return std::abs(fit.alpha - alpha) <= 3.0 * se;
  });
}

Rate llr_favours_power_law(std::size_t trials, std::size_t n, double alpha, std::uint64_t xmin,
                           std::uint64_t seed) {
  return count(trials, [&](std::size_t i) {
    auto rng = sim::trial_rng(seed, i);
    const auto report = fit_tail(sim::discrete_power_law(n, alpha, xmin, rng));
    return report.pl_vs_exponential.ratio > 0.0 && report.pl_vs_exponential.p_value < 0.1;
  });
}

Rate adf_rejections(std::size_t trials, std::size_t t, double phi, std::uint64_t seed) {
  return count(trials, [&](std::size_t i) {
    auto rng = sim::trial_rng(seed, i);
    const auto x = phi == 1.0 ? sim::random_walk(t, rng) : sim::ar1(t, phi, rng);
    return adf_test(x).p_value < 0.05;
  });
}

Rate engle_granger_detections(std::size_t trials, std::size_t t, bool cointegrated, std::uint64_t seed) {
  return count(trials, [&](std::size_t i) {
    auto rng = sim::trial_rng(seed, i);
    if (cointegrated) {
      const auto [x, y] = sim::cointegrated_pair(t, 2.0, 1.0, rng);
      return engle_granger(x, y).co_integrated;
    }
    const auto x = sim::random_walk(t, rng);
    const auto y = sim::random_walk(t, rng);
    return engle_granger(x, y).co_integrated;
  });
}

Rate granger_power(std::size_t trials, std::size_t t, int max_lag, std::uint64_t seed) {
  return count(trials, [&](std::size_t i) {
    auto rng = sim::trial_rng(seed, i);
    const auto [x, y] = sim::lagged_cause_pair(t, 0.8, 3, rng);
    for (int lag = 3; lag <= max_lag; ++lag) {
      if (!(granger_test(x, y, lag).p_value < 0.05)) return false;
    }
    return true;
  });
}

Rate granger_size(std::size_t trials, std::size_t t, int lag, std::uint64_t seed) {
  return count(trials, [&](std::size_t i) {
    auto rng = sim::trial_rng(seed, i);
    const auto x = sim::white_noise(t, rng);
    const auto y = sim::white_noise(t, rng);
    return granger_test(x, y, lag).p_value < 0.05;
  });
}

Rate pipeline_picks_lag3(std::size_t trials, std::size_t t, std::uint64_t seed) {
  return count(trials, [&](std::size_t i) {
    auto rng = sim::trial_rng(seed, i);
    const auto [x, y] = sim::lagged_cause_pair(t, 0.8, 3, rng);
    const auto report = run_two_step_pipeline(as_series("x", x), as_series("y", y));
    return report.chosen_lag == 3;
  });
}

}  // namespace attnscope::validation
