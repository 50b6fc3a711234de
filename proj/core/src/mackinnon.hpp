#pragma once

#include <array>

namespace attnscope::detail {

/// Deterministic terms of a Dickey-Fuller type regression.
enum class DfCase { None, Constant, ConstantTrend };

/// Asymptotic p-value of a tau statistic for `n_series` integrated series
/// (1 for a unit-root test, 2 for an Engle-Granger residual test).
double mackinnon_p(double tau, DfCase c, int n_series);

/// Finite-sample 1%, 5% and 10% critical values.
std::array<double, 3> mackinnon_crit(DfCase c, int n_series, double nobs);

}  // namespace attnscope::detail
