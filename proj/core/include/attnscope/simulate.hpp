#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

// Seeded generators behind the statistical self-checks and benchmarks.
namespace attnscope::sim {

using Rng = std::mt19937_64;

/// Independent stream for one Monte-Carlo trial derived from a master seed.
Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial);

/// Discrete power law by rounding a continuous Pareto draw:
/// x = floor((xmin - 0.5) (1 - u)^(-1/(alpha - 1)) + 0.5).
std::vector<std::uint64_t> discrete_power_law(std::size_t n, double alpha, std::uint64_t xmin, Rng& rng);
/// Rounded exponential starting at xmin: floor(xmin - 0.5 + E / lambda + 0.5).
std::vector<std::uint64_t> discrete_exponential(std::size_t n, double lambda, std::uint64_t xmin, Rng& rng);
/// Rounded lognormal, values below one clamped to one.
std::vector<std::uint64_t> discrete_lognormal(std::size_t n, double mu, double sigma, Rng& rng);

std::vector<double> white_noise(std::size_t t, Rng& rng, double sd = 1.0);
std::vector<double> random_walk(std::size_t t, Rng& rng);
/// x_t = phi x_{t-1} + e_t started from the stationary distribution.
std::vector<double> ar1(std::size_t t, double phi, Rng& rng);

using Matrix2 = std::array<std::array<double, 2>, 2>;
/// y_t = c + A y_{t-1} + e_t with unit-variance independent shocks and a
/// burn-in of 100 draws.
std::pair<std::vector<double>, std::vector<double>> var1(std::size_t t, const Matrix2& a,
                                                          std::array<double, 2> c, Rng& rng);

/// x white noise, y_t = coef x_{t-lag} + e_t.
std::pair<std::vector<double>, std::vector<double>> lagged_cause_pair(std::size_t t, double coef,
                                                                      int lag, Rng& rng);
/// x a random walk, y = beta x + N(0, noise_sd^2).
std::pair<std::vector<double>, std::vector<double>> cointegrated_pair(std::size_t t, double beta,
                                                                      double noise_sd, Rng& rng);

/// NDJSON posts with `created_utc` and `body` fields spread over 2006-2015.
/// Bodies carry zero to four links to Zipf-distributed domains over
/// `n_domains` sites, with occasional subdomains, paths and malformed URLs.
std::vector<std::string> synthetic_posts(std::size_t n_posts, std::size_t n_domains, Rng& rng);

}  // namespace attnscope::sim
