#ifndef COVSCALE_SCALE_CONVERSION_HPP
#define COVSCALE_SCALE_CONVERSION_HPP

#include "covscale/kinematics.hpp"

// Light-clock periods and the Lorentz factor read as the ratio between a
// covarying (moving) scale and the invariant (rest) scale.
//
// Quantities here are dimensional: d, c and v share whatever length and time
// units the caller picks. Only the ratio v/c crosses into natural units.

namespace covscale {

/// Emitter-to-mirror distance d and light speed c; both positive and finite.
class ClockGeometry
{
  public:
    ClockGeometry(double mirror_distance, double light_speed);

    double mirror_distance() const noexcept { return d_; }
    double light_speed() const noexcept { return c_; }

  private:
    double d_;
    double c_;
};

/// One period of the clock at rest: 2d / c.
double stationary_period(const ClockGeometry& g) noexcept;

/// One period of the clock moving at v: 2d / sqrt(c^2 - v^2).
/// Requires 0 <= v < c; throws DomainError otherwise.
double moving_period(const ClockGeometry& g, double v);

/// moving_period / stationary_period, which equals gamma(v/c) for any d.
LorentzFactor scale_ratio(const ClockGeometry& g, double v);

struct ScaleReport
{
    double stationary_period; // t1
    double moving_period;     // t2
    LorentzFactor ratio;      // t2 / t1
    double covarying_scale;   // t1 * ratio
};

ScaleReport clock_report(const ClockGeometry& g, double v);

struct ScaledInterval
{
    double x_scaled; // r x
    double t_scaled; // r t
    double lhs;      // (r x)^2 - (r t)^2
    double rhs;      // r^2 (x^2 - t^2)
};

/**
 * Scale both coordinates by r and compare the interval of the scaled pair
 * against r^2 times the original interval.
 *
 * The two sides are algebraically identical. lhs is evaluated from the exact
 * products r*x and r*t (error-free transformations), so it stays accurate
 * near the light cone where the squares nearly cancel.
 */
ScaledInterval scaled_interval_relation(double x, double t, RelativeSpeed speed);

/// invariant_scale * gamma(speed); invariant_scale must be positive.
double covarying_scale(double invariant_scale, RelativeSpeed speed);

} // namespace covscale

#endif
