#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace attnscope::detail {

/// Nelder-Mead simplex minimization in two dimensions. Non-finite objective
/// values act as walls.
template <class F>
std::array<double, 2> nelder_mead_2d(F&& f, std::array<double, 2> start,
                                     std::array<double, 2> step, int max_iter = 4000,
                                     double ftol = 1e-12) {
  struct Vertex {
    std::array<double, 2> x;
    double fx;
  };
  auto eval = [&](const std::array<double, 2>& x) {
    const double v = f(x);
    return std::isfinite(v) ? v : HUGE_VAL;
  };
  std::array<Vertex, 3> s{{{start, 0}, {{start[0] + step[0], start[1]}, 0},
                           {{start[0], start[1] + step[1]}, 0}}};
  for (auto& v : s) v.fx = eval(v.x);

  for (int iter = 0; iter < max_iter; ++iter) {
    std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });
    if (std::abs(s[2].fx - s[0].fx) <= ftol * (std::abs(s[0].fx) + ftol) &&
        std::abs(s[2].x[0] - s[0].x[0]) + std::abs(s[2].x[1] - s[0].x[1]) < 1e-10) {
      break;
    }
    const std::array<double, 2> c{(s[0].x[0] + s[1].x[0]) / 2, (s[0].x[1] + s[1].x[1]) / 2};
    auto along = [&](double t) {
      return std::array<double, 2>{c[0] + t * (s[2].x[0] - c[0]), c[1] + t * (s[2].x[1] - c[1])};
    };
    const auto xr = along(-1.0);
    const double fr = eval(xr);
    if (fr < s[0].fx) {
      const auto xe = along(-2.0);
      const double fe = eval(xe);
      s[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < s[1].fx) {
      s[2] = {xr, fr};
    } else {
      const auto xc = fr < s[2].fx ? along(-0.5) : along(0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, s[2].fx)) {
        s[2] = {xc, fc};
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k].x = {s[0].x[0] + 0.5 * (s[k].x[0] - s[0].x[0]),
                    s[0].x[1] + 0.5 * (s[k].x[1] - s[0].x[1])};
          s[k].fx = eval(s[k].x);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });
  return s[0].x;
}

}  // namespace attnscope::detail
