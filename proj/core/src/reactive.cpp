#include "ccc/reactive.hpp"

#include <cmath>
#include <stdexcept>

namespace ccc {

void SignalHistory::record(int index, double s, double v) {
  velocities_[index].push_back(v);
  positions_[index] = s;
}

double SignalHistory::position(int index) const {
  auto it = positions_.find(index);
  if (it == positions_.end())
    throw std::invalid_argument("SignalHistory: no samples for vehicle " + std::to_string(index));
  return it->second;
}

double SignalHistory::velocity_ago(int index, double age) const {
  auto it = velocities_.find(index);
  if (it == velocities_.end() || it->second.empty())
    throw std::invalid_argument("SignalHistory: no samples for vehicle " + std::to_string(index));
  const auto& series = it->second;
  auto back = static_cast<long>(std::llround(age / dt_));
  long idx = static_cast<long>(series.size()) - 1 - back;
  if (idx < 0) idx = 0;  // hold the oldest sample until history fills up
  return series[static_cast<std::size_t>(idx)];
}

double racc_accel(double h, double v, double v1, const OvmParams& p) {
  const double beta1 = p.betas.at(1);
  return p.alpha * (range_policy_V(h, p.range) - v) +
         beta1 * (speed_policy_W(v1, p.range) - v);
}

double rccc_accel(double h, double v, const SignalHistory& history,
                  const OvmParams& p) {
  double a = p.alpha * (range_policy_V(h, p.range) - v);
  for (const auto& [index, beta] : p.betas) {
    auto sig = p.sigmas.find(index);
    const double delay = (sig == p.sigmas.end()) ? 0.0 : sig->second;
    const double vi = history.velocity_ago(index, delay);
    a += beta * (speed_policy_W(vi, p.range) - v);
  }
  return a;
}

}  // namespace ccc
