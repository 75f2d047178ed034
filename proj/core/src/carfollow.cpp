#include "ccc/carfollow.hpp"

#include <algorithm>
#include <cmath>

namespace ccc {

double range_policy_V(double h, const RangePolicyParams& p) {
  return std::min(p.v_max, std::max(0.0, (h - p.d) / p.tau));
}

double speed_policy_W(double v1, const RangePolicyParams& p) {
  return std::min(p.v_max, v1);
}

double idm_accel(double h, double v, double v1, const IdmParams& p) {
  if (h <= 0.0) throw std::domain_error("idm_accel: non-positive headway");
  const double dyn = p.tau * v - v * (v1 - v) / std::sqrt(p.a0 * p.b0);
  const double desired = p.d + std::max(0.0, dyn);
  const double ratio = desired / h;
  return p.a0 * (1.0 - std::pow(v / p.v_max, p.delta) - ratio * ratio);
}

double idm_range_simplified(double v, const IdmParams& p) {
  return p.d + p.tau * v;
}

double idm_equilibrium_headway(double v, const IdmParams& p) {
  const double free = 1.0 - std::pow(v / p.v_max, p.delta);
  if (free <= 0.0)
    throw std::domain_error("idm_equilibrium_headway: v >= v_max has no equilibrium");
  return idm_range_simplified(v, p) / std::sqrt(free);
}

}  // namespace ccc
