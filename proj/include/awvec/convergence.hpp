#pragma once

// Error tables for limit sweeps: one row per step of the limiting parameter,
// with an empirical order estimated from consecutive errors.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "awvec/errors.hpp"

namespace awvec {

struct LimitSample {
  int step = 0;
  double param = 0;  // lambda, 1 - q, or 1/n depending on the sweep
  double error = 0;
  double order = std::numeric_limits<double>::quiet_NaN();
};

struct LimitReport {
  std::string name;
  std::string param_label;
  std::vector<LimitSample> samples;
  double tolerance = 0;
  int monotone_window = 0;  // trailing steps required to decrease strictly

  double final_error() const { return samples.empty() ? std::numeric_limits<double>::quiet_NaN() : samples.back().error; }
  double final_order() const { return samples.empty() ? std::numeric_limits<double>::quiet_NaN() : samples.back().order; }
  bool below_tolerance() const { return !samples.empty() && final_error() < tolerance; }

  /// Strict decrease over the last monotone_window steps. An error of exactly
  /// zero throughout also counts as converged.
  bool monotone_tail() const {
    const int n = static_cast<int>(samples.size());
    const int start = std::max(1, n - monotone_window);
    for (int i = start; i < n; ++i) {
      const double prev = samples[i - 1].error, cur = samples[i].error;
      if (cur == 0 && prev == 0) continue;
      if (!(cur < prev)) return false;
    }
    return true;
  }
  bool passed() const { return below_tolerance() && monotone_tail(); }
};

/// Appends a sample, estimating the order against the previous one via
/// log(e_prev / e) / log(p_prev / p). Non-finite errors throw.
inline void record_sample(LimitReport& r, int step, double param, double error) {
  if (!std::isfinite(error)) throw NumericalInstability(r.name + ": non-finite error at step " + std::to_string(step));
  LimitSample s{step, param, error, std::numeric_limits<double>::quiet_NaN()};
  if (!r.samples.empty()) {
    const LimitSample& prev = r.samples.back();
    if (prev.error > 0 && error > 0 && prev.param != param)
      s.order = std::log(prev.error / error) / std::log(prev.param / param);
  }
  r.samples.push_back(s);
}

}  // namespace awvec
