#include "mackinnon.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "attnscope/csv.hpp"
#include "attnscope/error.hpp"

namespace attnscope::data {
extern const std::string_view kMacKinnonTables;
}

namespace attnscope::detail {

namespace {

struct Surface {
  double tau_min = 0, tau_star = 0, tau_max = 0;
  std::vector<double> small_p, large_p;
  std::map<int, std::vector<double>> crit;  // level in percent -> coefficients
};

using Key = std::pair<DfCase, int>;

DfCase parse_case(std::string_view s) {
  if (s == "n") return DfCase::None;
  if (s == "c") return DfCase::Constant;
  if (s == "ct") return DfCase::ConstantTrend;
  throw Error(Errc::ParseError, "unknown regression case in MacKinnon table: " + std::string(s));
}

double parse_number(std::string_view s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::ParseError, "bad number in MacKinnon table: " + std::string(s));
  }
  return v;
}

std::map<Key, Surface> load() {
  std::map<Key, Surface> out;
  std::string_view text = data::kMacKinnonTables;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = csv::chomp(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    const auto f = csv::split(line, '\t');
    if (f.size() < 4) throw Error(Errc::ParseError, "short MacKinnon record");
    Surface& s = out[{parse_case(f[1]), static_cast<int>(parse_number(f[2]))}];
    std::vector<double> v;
    for (std::size_t i = 3; i < f.size(); ++i) v.push_back(parse_number(f[i]));
    if (f[0] == "bounds" && v.size() == 3) {
      std::tie(s.tau_min, s.tau_star, s.tau_max) = std::tuple(v[0], v[1], v[2]);
    } else if (f[0] == "smallp") {
      s.small_p = v;
    } else if (f[0] == "largep") {
      s.large_p = v;
    } else if (f[0] == "crit" && v.size() == 5) {
      s.crit[static_cast<int>(std::lround(v[0] * 100))] = {v.begin() + 1, v.end()};
    } else {
      throw Error(Errc::ParseError, "malformed MacKinnon record");
    }
  }
  return out;
}

const Surface& surface(DfCase c, int n_series) {
  static const std::map<Key, Surface> table = load();
  auto it = table.find({c, n_series});
  if (it == table.end()) throw Error(Errc::InvalidArgument, "no MacKinnon surface for this case");
  return it->second;
}

double polyval(const std::vector<double>& c, double x) {
  double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

}  // namespace

double mackinnon_p(double tau, DfCase c, int n_series) {
  const Surface& s = surface(c, n_series);
  if (std::isnan(tau)) return std::numeric_limits<double>::quiet_NaN();
  if (tau > s.tau_max) return 1.0;
  if (tau < s.tau_min) return 0.0;
  const auto& coef = tau <= s.tau_star ? s.small_p : s.large_p;
  return boost::math::cdf(boost::math::normal(), polyval(coef, tau));
}

std::array<double, 3> mackinnon_crit(DfCase c, int n_series, double nobs) {
  const Surface& s = surface(c, n_series);
  if (s.crit.size() != 3) throw Error(Errc::InvalidArgument, "no critical values for this case");
  std::array<double, 3> out{};
  std::size_t i = 0;
  for (const auto& [level, coef] : s.crit) out[i++] = polyval(coef, 1.0 / nobs);
  return out;
}

}  // namespace attnscope::detail
