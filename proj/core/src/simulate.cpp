#include "attnscope/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "attnscope/error.hpp"

namespace attnscope::sim {

Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

std::vector<std::uint64_t> discrete_power_law(std::size_t n, double alpha, std::uint64_t xmin, Rng& rng) {
  if (!(alpha > 1.0) || xmin == 0) throw Error(Errc::InvalidArgument, "power law needs alpha > 1, xmin >= 1");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double lower = static_cast<double>(xmin) - 0.5;
  std::vector<std::uint64_t> out(n);
  for (auto& v : out) {
    const double x = lower * std::pow(1.0 - unif(rng), -1.0 / (alpha - 1.0));
    v = static_cast<std::uint64_t>(std::floor(std::min(x, 1e18) + 0.5));
  }
  return out;
}

std::vector<std::uint64_t> discrete_exponential(std::size_t n, double lambda, std::uint64_t xmin, Rng& rng) {
  std::exponential_distribution<double> expo(lambda);
  std::vector<std::uint64_t> out(n);
  for (auto& v : out) v = static_cast<std::uint64_t>(std::floor(static_cast<double>(xmin) + expo(rng)));
  return out;
}

std::vector<std::uint64_t> discrete_lognormal(std::size_t n, double mu, double sigma, Rng& rng) {
  std::lognormal_distribution<double> ln(mu, sigma);
  std::vector<std::uint64_t> out(n);
  for (auto& v : out) v = static_cast<std::uint64_t>(std::max(1.0, std::floor(std::min(ln(rng), 1e18) + 0.5)));
  return out;
}

std::vector<double> white_noise(std::size_t t, Rng& rng, double sd) {
  std::normal_distribution<double> norm(0.0, sd);
  std::vector<double> out(t);
  for (auto& v : out) v = norm(rng);
  return out;
}

std::vector<double> random_walk(std::size_t t, Rng& rng) {
  std::vector<double> out = white_noise(t, rng);
  for (std::size_t i = 1; i < t; ++i) out[i] += out[i - 1];
  return out;
}

std::vector<double> ar1(std::size_t t, double phi, Rng& rng) {
  std::normal_distribution<double> norm(0.0, 1.0);
  std::vector<double> out(t);
  double prev = norm(rng) / std::sqrt(1.0 - phi * phi);
  for (auto& v : out) {
    v = phi * prev + norm(rng);
    prev = v;
  }
  return out;
}

std::pair<std::vector<double>, std::vector<double>> var1(std::size_t t, const Matrix2& a,
                                                          std::array<double, 2> c, Rng& rng) {
  std::normal_distribution<double> norm(0.0, 1.0);
  constexpr std::size_t kBurn = 100;
  std::vector<double> y1(t), y2(t);
  double p1 = 0.0, p2 = 0.0;
  for (std::size_t i = 0; i < t + kBurn; ++i) {
    const double n1 = c[0] + a[0][0] * p1 + a[0][1] * p2 + norm(rng);
    const double n2 = c[1] + a[1][0] * p1 + a[1][1] * p2 + norm(rng);
    p1 = n1;
    p2 = n2;
    if (i >= kBurn) {
      y1[i - kBurn] = n1;
      y2[i - kBurn] = n2;
    }
  }
  return {std::move(y1), std::move(y2)};
}

std::pair<std::vector<double>, std::vector<double>> lagged_cause_pair(std::size_t t, double coef,
                                                                      int lag, Rng& rng) {
  const auto l = static_cast<std::size_t>(lag);
  std::vector<double> x = white_noise(t + l, rng);
  std::vector<double> e = white_noise(t, rng);
  std::vector<double> y(t);
  for (std::size_t i = 0; i < t; ++i) y[i] = coef * x[i] + e[i];
  x.erase(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(l));
  // x now starts `lag` draws later, so y[i] depends on x[i - lag].
  return {std::move(x), std::move(y)};
}

std::pair<std::vector<double>, std::vector<double>> cointegrated_pair(std::size_t t, double beta,
                                                                      double noise_sd, Rng& rng) {
  std::vector<double> x = random_walk(t, rng);
  std::vector<double> e = white_noise(t, rng, noise_sd);
  std::vector<double> y(t);
  for (std::size_t i = 0; i < t; ++i) y[i] = beta * x[i] + e[i];
  return {std::move(x), std::move(y)};
}

std::vector<std::string> synthetic_posts(std::size_t n_posts, std::size_t n_domains, Rng& rng) {
  if (n_domains == 0) throw Error(Errc::InvalidArgument, "synthetic_posts needs at least one domain");
  // Zipf(1) over domain ranks through the inverse of the harmonic CDF.
  std::vector<double> cdf(n_domains);
  double h = 0;
  for (std::size_t k = 0; k < n_domains; ++k) cdf[k] = (h += 1.0 / static_cast<double>(k + 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> when(1136073600, 1451606399);
  std::uniform_int_distribution<int> n_links(0, 4);
  static constexpr const char* kSuffixes[] = {"com", "org", "net", "co.uk", "de", "io"};
  static constexpr const char* kFiller[] = {"see", "this is great", "lol", "source:", "via", "(old)"};

  std::vector<std::string> lines;
  lines.reserve(n_posts);
  std::string body;
  for (std::size_t i = 0; i < n_posts; ++i) {
    body.clear();
    const int links = n_links(rng);
    for (int l = 0; l < links; ++l) {
      body += kFiller[rng() % 6];
      body += ' ';
      const double u = unit(rng) * h;
      const std::size_t rank = static_cast<std::size_t>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      const std::size_t r = std::min(rank, n_domains - 1);
      const unsigned style = static_cast<unsigned>(rng() % 10);
      if (style == 0) {
        body += "http://.bad";
      } else {
        body += style < 5 ? "https://" : "http://";
        if (style == 6) body += "www.";
        if (style == 7) body += "blog.";
        body += "site" + std::to_string(r) + '.' + kSuffixes[r % 6];
        if (style >= 8) body += "/page/" + std::to_string(rng() % 100);
      }
      body += ' ';
    }
    body += kFiller[rng() % 6];
    lines.push_back("{\"id\":\"s" + std::to_string(i) + "\",\"created_utc\":" + std::to_string(when(rng)) +
                    ",\"body\":\"" + body + "\"}");
  }
  return lines;
}

}  // namespace attnscope::sim
