#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>

namespace ccc {

/// Longitudinal plant parameters of the ego vehicle.
///
/// Resistance is the collapsed form c0 + c2*v^2 (rolling + aerodynamic,
/// already divided by effective mass).  The acceleration envelope is
/// min{u_max_cap, m1*v + b1, m2*v + b2} above and u_min below.
struct VehicleParams {
  double c0 = 0.0147;     // [m/s^2]  baseline resistance
  double c2 = 2.75e-4;    // [1/m]    quadratic resistance coefficient
  double u_min = -6.0;    // [m/s^2]  braking limit
  double m1 = 0.285;      // [1/s]    torque-limit line slope
  double b1 = 2.0;        // [m/s^2]  torque-limit line intercept
  double m2 = -0.121;     // [1/s]    power-limit line slope
  double b2 = 4.83;       // [m/s^2]  power-limit line intercept
  std::optional<double> u_max_cap{};  // [m/s^2] optional constant cap
  double length = 5.0;    // [m]      vehicle length l
  double sigma = 0.6;     // [s]      powertrain delay, multiple of dt
};

struct VehicleState {
  double s = 0.0;  // [m]     position
  double v = 0.0;  // [m/s]   velocity
  double a = 0.0;  // [m/s^2] realized acceleration
};

/// Fixed-length FIFO of desired accelerations; models the powertrain delay
/// sigma = q*dt.  With q == 0 it is a pass-through.
class DelayBuffer {
 public:
  DelayBuffer() = default;
  explicit DelayBuffer(std::size_t q, double fill = 0.0) : queue_(q, fill) {}

  std::size_t size() const { return queue_.size(); }
  bool empty() const { return queue_.empty(); }

  /// Pushes a new command and pops the one that becomes active.
  double exchange(double a_desired) {
    if (queue_.empty()) return a_desired;
    double out = queue_.front();
    queue_.pop_front();
    queue_.push_back(a_desired);
    return out;
  }

  /// Committed commands, oldest first: a_d(t-q), ..., a_d(t-1).
  const std::deque<double>& committed() const { return queue_; }

 private:
  std::deque<double> queue_;
};

/// Cumulative tractive energy per unit mass (braking recovers nothing).
struct EnergyLedger {
  double w = 0.0;     // [J/kg]
  double time = 0.0;  // [s] last sample time
};

/// Resistance acceleration c0 + c2*v^2.  Throws std::domain_error for v < 0.
double resistance(double v, const VehicleParams& p);

/// Clips a commanded acceleration to the velocity-dependent envelope.
double saturate(double u, double v, const VehicleParams& p);

/// Upper envelope min{u_max_cap, m1*v + b1, m2*v + b2}.
double envelope_max(double v, const VehicleParams& p);

/// One forward step of the plant at step size dt.
///
/// Pops the delayed command, saturates it at the current speed and
/// integrates the second-order kinematics.  If the speed would cross zero
/// the substep is truncated at v = 0 exactly and the recorded acceleration
/// is the effective (v' - v)/dt so the velocity update stays consistent.
VehicleState step(const VehicleState& state, DelayBuffer& buffer,
                  double a_desired, double dt, const VehicleParams& p);

/// Left-endpoint rectangle rule for w += v * max{a + f(v), 0} * dt.
void accumulate_energy(EnergyLedger& ledger, double v, double a,
                       const VehicleParams& p, double dt);

}  // namespace ccc
