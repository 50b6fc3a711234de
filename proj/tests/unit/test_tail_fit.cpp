#include "attnscope/tail_fit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "attnscope/simulate.hpp"
#include "oracle_data.hpp"
#include "test_support.hpp"

using namespace attnscope;

namespace {

// Independent KS evaluation: every integer between xmin and the maximum.
double brute_ks(const std::vector<std::uint64_t>& values, std::uint64_t xmin, double alpha) {
  std::vector<std::uint64_t> tail;
  for (auto v : values) {
    if (v >= xmin) tail.push_back(v);
  }
  std::sort(tail.begin(), tail.end());
  const double n = static_cast<double>(tail.size());
  double d = 0;
  std::size_t below = 0;
  for (std::uint64_t x = xmin; x <= tail.back(); ++x) {
    while (below < tail.size() && tail[below] <= x) ++below;
    const double model = 1.0 - std::pow((x + 0.5) / (xmin - 0.5), 1.0 - alpha);
    d = std::max(d, std::abs(static_cast<double>(below) / n - model));
  }
  return d;
}

PowerLawFit brute_fit(const std::vector<std::uint64_t>& values, std::size_t min_tail) {
  std::vector<std::uint64_t> distinct(values);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  distinct.pop_back();  // a candidate needs two distinct tail values
  auto tail_size = [&](std::uint64_t xmin) {
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [&](auto v) { return v >= xmin; }));
  };
  const bool any = std::any_of(distinct.begin(), distinct.end(), [&](auto x) { return tail_size(x) >= min_tail; });
  PowerLawFit best;
  best.ks_distance = INFINITY;
  for (auto xmin : distinct) {
    if (any && tail_size(xmin) < min_tail) continue;
    double s = 0;
    for (auto v : values) {
      if (v >= xmin) s += std::log(v / (xmin - 0.5));
    }
    const double alpha = 1.0 + tail_size(xmin) / s;
    const double ks = brute_ks(values, xmin, alpha);
    if (ks < best.ks_distance - 1e-12) best = {alpha, xmin, ks, tail_size(xmin)};
  }
  return best;
}

}  // namespace

TEST(Ccdf, OnePointPerDistinctValue) {
  const std::vector<std::uint64_t> v{1, 1, 2, 5, 5, 5};
  const auto c = empirical_ccdf(v);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].x, 1u);
  EXPECT_DOUBLE_EQ(c[0].p, 1.0);
  EXPECT_DOUBLE_EQ(c[1].p, 4.0 / 6.0);
  EXPECT_DOUBLE_EQ(c[2].p, 0.5);
  EXPECT_ERRC(empirical_ccdf({}), Errc::EmptyInput);
}

TEST(PowerLaw, AlphaFormula) {
  const std::vector<std::uint64_t> v{1, 2, 3, 4, 8};
  const double s = std::log(2 / 1.5) + std::log(3 / 1.5) + std::log(4 / 1.5) + std::log(8 / 1.5);
  EXPECT_NEAR(power_law_alpha(v, 2), 1.0 + 4 / s, 1e-14);
}

TEST(PowerLaw, DegenerateInputs) {
  EXPECT_ERRC(fit_power_law(std::vector<std::uint64_t>{4, 4, 4}), Errc::DegenerateInput);
  EXPECT_ERRC(fit_power_law(std::vector<std::uint64_t>{}), Errc::DegenerateInput);
  EXPECT_ERRC(power_law_alpha(std::vector<std::uint64_t>{1, 2}, 2), Errc::DegenerateTail);
}

TEST(PowerLaw, KsMatchesBruteForceScan) {
  testing_support::for_all(60, 21, [](std::mt19937_64& rng, std::size_t) {
    sim::Rng r(rng());
    const auto v = sim::discrete_power_law(200 + rng() % 300, 2.0 + (rng() % 100) / 100.0, 1 + rng() % 4, r);
    std::vector<std::uint64_t> capped;
    for (auto x : v) capped.push_back(std::min<std::uint64_t>(x, 3000));
    const auto fit = fit_power_law(capped);
    EXPECT_NEAR(power_law_ks(capped, fit.xmin, fit.alpha), brute_ks(capped, fit.xmin, fit.alpha), 1e-12);
  });
}

TEST(PowerLaw, XminSelectionMatchesBruteForce) {
  testing_support::for_all(30, 22, [](std::mt19937_64& rng, std::size_t) {
    sim::Rng r(rng());
    auto v = sim::discrete_power_law(300, 2.5, 3, r);
    // Contaminate the body so that xmin is not trivially the minimum.
    for (int i = 0; i < 100; ++i) v.push_back(1 + rng() % 3);
    for (auto& x : v) x = std::min<std::uint64_t>(x, 2000);
    const auto fit = fit_power_law(v);
    const auto ref = brute_fit(v, 10);
    EXPECT_EQ(fit.xmin, ref.xmin);
    EXPECT_NEAR(fit.alpha, ref.alpha, 1e-12);
    EXPECT_NEAR(fit.ks_distance, ref.ks_distance, 1e-12);
    EXPECT_EQ(fit.n_tail, ref.n_tail);
  });
}

TEST(PowerLaw, TailFloorDroppedWhenNothingQualifies) {
  const std::vector<std::uint64_t> v{1, 2, 3, 5, 8};
  const auto fit = fit_power_law(v);
  EXPECT_LT(fit.n_tail, 10u);
  PowerLawOptions opts;
  opts.min_tail = 3;
  EXPECT_GE(fit_power_law(v, opts).n_tail, 3u);
}

TEST(PowerLaw, RecoversKnownExponent) {
  sim::Rng rng(42);
  const auto v = sim::discrete_power_law(20000, 2.5, 5, rng);
  const auto fit = fit_power_law(v);
  EXPECT_NEAR(fit.alpha, 2.5, 0.1);
  EXPECT_GE(fit.xmin, 3u);
  EXPECT_LE(fit.xmin, 8u);
}

TEST(HurwitzZeta, MatchesArbitraryPrecisionReference) {
  for (const auto& c : oracle::kZetaCases) {
    EXPECT_NEAR(hurwitz_zeta(c.s, c.q) / c.value, 1.0, 1e-12) << c.s << ' ' << c.q;
  }
  EXPECT_ERRC(hurwitz_zeta(1.0, 1.0), Errc::InvalidArgument);
}

TEST(PowerLaw, ExactZetaSolvesScoreEquation) {
  sim::Rng rng(7);
  const auto v = sim::discrete_power_law(5000, 2.3, 6, rng);
  PowerLawOptions exact;
  exact.exact_zeta = true;
  const auto fit = fit_power_law(v, exact);
  double s = 0;
  for (auto x : v) {
    if (x >= fit.xmin) s += std::log(static_cast<double>(x));
  }
  const double n = static_cast<double>(fit.n_tail);
  const double h = 1e-5;
  const double q = static_cast<double>(fit.xmin);
  const double dlogz = (std::log(hurwitz_zeta(fit.alpha + h, q)) - std::log(hurwitz_zeta(fit.alpha - h, q))) / (2 * h);
  EXPECT_NEAR((-s - n * dlogz) / n, 0.0, 1e-5);
  const double approx = power_law_alpha(v, fit.xmin);
  if (fit.xmin >= 5) EXPECT_LT(std::abs(approx - fit.alpha) / fit.alpha, 0.01);
}

TEST(Alternatives, TruncatedLognormalMatchesReferenceOptimizer) {
  const auto fit = fit_lognormal_tail(oracle::kLognormalSample, oracle::kLognormalLower);
  EXPECT_NEAR(fit.loglik, oracle::kLognormalLoglik, 1e-7);
  EXPECT_NEAR(fit.mu, oracle::kLognormalMu, 1e-3 * std::max(1.0, std::abs(oracle::kLognormalMu)));
  EXPECT_NEAR(fit.sigma, oracle::kLognormalSigma, 1e-3 * oracle::kLognormalSigma);
}

TEST(Alternatives, ExponentialClosedForm) {
  const std::vector<double> x{5, 6, 9, 12};
  const auto fit = fit_exponential_tail(x, 4.5);
  const double lambda = 4.0 / (0.5 + 1.5 + 4.5 + 7.5);
  EXPECT_DOUBLE_EQ(fit.lambda, lambda);
  EXPECT_NEAR(fit.loglik, 4 * std::log(lambda) - lambda * 14.0, 1e-12);
}

TEST(Alternatives, DegenerateTail) {
  EXPECT_ERRC(fit_alternatives(std::vector<std::uint64_t>{5, 5, 5, 5}, 5), Errc::DegenerateTail);
  EXPECT_ERRC(fit_alternatives(std::vector<std::uint64_t>{1, 2, 9}, 9), Errc::DegenerateTail);
}

TEST(LogLikelihoodRatio, AntisymmetricAndFavoursTrueModel) {
  sim::Rng rng(99);
  const auto v = sim::discrete_power_law(3000, 2.2, 4, rng);
  const auto ab = loglik_ratio(v, 4, Family::PowerLaw, Family::Exponential);
  const auto ba = loglik_ratio(v, 4, Family::Exponential, Family::PowerLaw);
  EXPECT_NEAR(ab.ratio, -ba.ratio, 1e-9);
  EXPECT_NEAR(ab.p_value, ba.p_value, 1e-12);
  EXPECT_GT(ab.ratio, 0.0);
  EXPECT_LT(ab.p_value, 0.01);

  sim::Rng rng2(100);
  const auto e = sim::discrete_exponential(3000, 0.3, 4, rng2);
  EXPECT_LT(loglik_ratio(e, 4, Family::PowerLaw, Family::Exponential).ratio, 0.0);
  const auto self = loglik_ratio(v, 4, Family::Lognormal, Family::Lognormal);
  EXPECT_EQ(self.ratio, 0.0);
  EXPECT_EQ(self.p_value, 1.0);
}

TEST(TailFitPeriods, FailuresKeepRowsAndEmptyPeriodsAreSkipped) {
  std::vector<MonthlyDomainCounts> months(4);
  months[0].month = Month::parse("2006-01");
  sim::Rng rng(1);
  const auto v = sim::discrete_power_law(400, 2.5, 2, rng);
  for (std::size_t i = 0; i < v.size(); ++i) months[0].add("d" + std::to_string(i), v[i]);
  months[1].month = Month::parse("2007-03");
  for (int i = 0; i < 20; ++i) months[1].add("e" + std::to_string(i), 3);
  months[2].month = Month::parse("2008-05");
  months[3].month = Month::parse("2006-07");
  months[3].add("d0", 1);

  const auto yearly = fit_all_periods(months, Granularity::Year);
  ASSERT_EQ(yearly.size(), 3u);
  EXPECT_TRUE(yearly[0].report.has_value());
  EXPECT_FALSE(yearly[1].report.has_value());
  EXPECT_FALSE(yearly[1].note.empty());
  std::ostringstream out;
  write_tailfit_csv(out, yearly, Granularity::Year);
  const std::string csv = out.str();
  EXPECT_TRUE(csv.starts_with("year,alpha,xmin,ks,n_tail,R_pl_ln,p_pl_ln,R_pl_exp,p_pl_exp\n2006,"));
  EXPECT_NE(csv.find("\n2007,,,,,,,,\n"), std::string::npos);
  EXPECT_EQ(csv.find("2008"), std::string::npos);

  const auto monthly = fit_all_periods(months, Granularity::Month);
  std::ostringstream mout;
  write_tailfit_csv(mout, monthly, Granularity::Month);
  EXPECT_TRUE(mout.str().starts_with("month,alpha"));
  EXPECT_NE(mout.str().find("\n2006-01,"), std::string::npos);
}
