#pragma once

#include <map>
#include <vector>

#include "ccc/carfollow.hpp"

namespace ccc {

/// Per-vehicle velocity history sampled at the simulation step, plus the
/// latest positions.  Lookups older than the recorded span hold the oldest
/// sample (constant pre-scenario speed assumption).
class SignalHistory {
 public:
  explicit SignalHistory(double dt = 0.1) : dt_(dt) {}

  double dt() const { return dt_; }

  /// Appends the current sample for one vehicle index.
  void record(int index, double s, double v);

  bool has(int index) const { return velocities_.count(index) != 0; }
  double position(int index) const;

  /// Velocity of vehicle `index` at `age` seconds before the newest sample.
  /// The age is rounded to the nearest sample.
  double velocity_ago(int index, double age) const;

 private:
  double dt_;
  std::map<int, std::vector<double>> velocities_;
  std::map<int, double> positions_;
};

/// RACC law: alpha*(V(h) - v) + beta_1*(W(v1) - v).
double racc_accel(double h, double v, double v1, const OvmParams& p);

/// RCCC law with per-link response delays:
/// alpha*(V(h) - v) + sum_i beta_i*(W(v_i(t - sigma_i)) - v).
/// Every index in p.betas must have history; throws std::invalid_argument
/// otherwise.
double rccc_accel(double h, double v, const SignalHistory& history,
                  const OvmParams& p);

}  // namespace ccc
