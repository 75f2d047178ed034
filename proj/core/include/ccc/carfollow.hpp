#pragma once

#include <map>
#include <stdexcept>

namespace ccc {

/// Piecewise-linear range policy V(h) and its inverse H(v) = d + tau*v.
struct RangePolicyParams {
  double tau = 1.67;    // [s]   time headway
  double d = 5.0;       // [m]   stopping distance
  double v_max = 35.0;  // [m/s] free speed
};

/// Optimal velocity model gains.  betas/sigmas are keyed by vehicle index
/// (1 = vehicle immediately ahead); index 1 must be present.
struct OvmParams {
  double alpha = 0.4;              // [1/s] headway gain
  std::map<int, double> betas;     // [1/s] per-vehicle speed gains
  std::map<int, double> sigmas;    // [s]   per-vehicle response delays
  RangePolicyParams range;
};

/// Intelligent driver model parameters.
struct IdmParams {
  double a0 = 2.0;      // [m/s^2] max acceleration
  double b0 = 4.0;      // [m/s^2] deceleration coefficient
  double delta = 4.0;   // [-]     free-speed exponent
  double tau = 1.0;     // [s]     desired time headway
  double d = 5.0;       // [m]     stopping distance
  double v_max = 33.0;  // [m/s]   free speed
};

/// Desired velocity for a given headway: min{v_max, max{0, (h-d)/tau}}.
double range_policy_V(double h, const RangePolicyParams& p);

/// Reference speed min{v_max, v1}.
double speed_policy_W(double v1, const RangePolicyParams& p);

/// IDM acceleration; throws std::domain_error for h <= 0 (collision state).
double idm_accel(double h, double v, double v1, const IdmParams& p);

/// Speed-dependent desired headway of the IDM at steady state: d + tau*v.
double idm_range_simplified(double v, const IdmParams& p);

/// Headway at which idm_accel(h, v, v) == 0, for v < v_max.
double idm_equilibrium_headway(double v, const IdmParams& p);

}  // namespace ccc
