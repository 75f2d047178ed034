#include "ccc/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace ccc {

double resistance(double v, const VehicleParams& p) {
  if (v < 0.0) throw std::domain_error("resistance: negative velocity");
  return p.c0 + p.c2 * v * v;
}

double envelope_max(double v, const VehicleParams& p) {
  double u = std::min(p.m1 * v + p.b1, p.m2 * v + p.b2);
  if (p.u_max_cap) u = std::min(u, *p.u_max_cap);
  return u;
}

double saturate(double u, double v, const VehicleParams& p) {
  return std::min(envelope_max(v, p), std::max(p.u_min, u));
}

VehicleState step(const VehicleState& state, DelayBuffer& buffer,
                  double a_desired, double dt, const VehicleParams& p) {
  if (dt <= 0.0) throw std::invalid_argument("step: dt must be positive");
  const double a_delayed = buffer.exchange(a_desired);
  const double a = saturate(a_delayed, state.v, p);

  VehicleState next;
  const double v_pred = state.v + dt * a;
  if (v_pred >= 0.0) {
    next.s = state.s + dt * state.v + 0.5 * dt * dt * a;
    next.v = v_pred;
    next.a = a;
  } else {
    // truncate the substep where v hits zero, then hold
    const double t_stop = (a < 0.0) ? -state.v / a : 0.0;
    next.s = state.s + state.v * t_stop + 0.5 * a * t_stop * t_stop;
    next.v = 0.0;
    next.a = -state.v / dt;  // effective accel so v' = v + dt*a holds
  }
  return next;
}

void accumulate_energy(EnergyLedger& ledger, double v, double a,
                       const VehicleParams& p, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("accumulate_energy: dt must be positive");
  const double power = v * std::max(a + resistance(v, p), 0.0);
  ledger.w += power * dt;
  ledger.time += dt;
}

}  // namespace ccc
