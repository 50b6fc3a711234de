#pragma once

#include <cstddef>
#include <cstdint>

// Monte-Carlo checks of the estimators on seeded synthetic data. Trial i
// draws from sim::trial_rng(seed, i), so every rate is reproducible.
namespace attnscope::validation {

struct Rate {
  std::size_t hits = 0;
  std::size_t trials = 0;
  double value() const noexcept { return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0; }
};

struct PowerLawRecovery {
  double alpha_hat = 0.0;
  std::uint64_t xmin_hat = 0;
  std::size_t n_tail = 0;
};

/// Single fit of n discrete power-law draws.
PowerLawRecovery power_law_recovery(std::size_t n, double alpha, std::uint64_t xmin, std::uint64_t seed);
/// Fraction of trials with |alpha_hat - alpha| <= 3 (alpha_hat - 1) / sqrt(n_tail).
Rate power_law_coverage(std::size_t trials, std::size_t n, double alpha, std::uint64_t xmin,
                        std::uint64_t seed);
/// Power-law samples compared against the exponential: R > 0 and p < 0.1.
Rate llr_favours_power_law(std::size_t trials, std::size_t n, double alpha, std::uint64_t xmin,
                           std::uint64_t seed);

/// ADF (constant) rejections at 5% on random walks (phi = 1) or AR(1).
Rate adf_rejections(std::size_t trials, std::size_t t, double phi, std::uint64_t seed);
/// Engle-Granger detections on y = 2x + noise (cointegrated) or on two
/// independent random walks.
Rate engle_granger_detections(std::size_t trials, std::size_t t, bool cointegrated, std::uint64_t seed);
/// Lag-3 causal pair: every Granger lag in 3..max_lag has p < 0.05.
Rate granger_power(std::size_t trials, std::size_t t, int max_lag, std::uint64_t seed);
/// Independent white noise: Granger rejections at 5% for the given lag.
Rate granger_size(std::size_t trials, std::size_t t, int lag, std::uint64_t seed);
/// Full pipeline on the lag-3 causal pair picks lag 3.
Rate pipeline_picks_lag3(std::size_t trials, std::size_t t, std::uint64_t seed);

}  // namespace attnscope::validation
