#include "covscale/scale_conversion.hpp"

#include <cmath>

namespace covscale {
namespace {

bool positive_finite(double v)
{
    return std::isfinite(v) && v > 0;
}

void check_clock_speed(const ClockGeometry& g, double v)
{
    if (!(std::isfinite(v) && v >= 0))
    {
        throw DomainError("clock speed must satisfy 0 <= v < c");
    }
    if (!(v < g.light_speed()))
    {
        throw DomainError("clock speed must satisfy 0 <= v < c");
    }
}

} // namespace

ClockGeometry::ClockGeometry(double mirror_distance, double light_speed)
    : d_{mirror_distance}, c_{light_speed}
{
    if (!positive_finite(d_))
        throw DomainError("mirror distance must be positive and finite");
    if (!positive_finite(c_))
        throw DomainError("light speed must be positive and finite");
}

double stationary_period(const ClockGeometry& g) noexcept
{
    return 2 * g.mirror_distance() / g.light_speed();
}

double moving_period(const ClockGeometry& g, double v)
{
    check_clock_speed(g, v);
    double c = g.light_speed();
    return 2 * g.mirror_distance() / std::sqrt((c - v) * (c + v));
}

LorentzFactor scale_ratio(const ClockGeometry& g, double v)
{
    double t2 = moving_period(g, v);
    double t1 = stationary_period(g);
    double ratio = t2 / t1;
    if (!std::isfinite(ratio))
    {
        throw ComputationError("clock period ratio is not finite");
    }
    // t1 and t2 round independently; at tiny v the quotient can land a
    // hair under 1.
    return LorentzFactor{ratio < 1 ? 1.0 : ratio};
}

ScaleReport clock_report(const ClockGeometry& g, double v)
{
    LorentzFactor ratio = scale_ratio(g, v);
    double t1 = stationary_period(g);
    return ScaleReport{t1, moving_period(g, v), ratio, t1 * ratio.value()};
}

ScaledInterval scaled_interval_relation(double x, double t, RelativeSpeed speed)
{
    double r = gamma(speed).value();

    // r*x = xs + xe and r*t = ts + te exactly
    double xs = r * x;
    double xe = std::fma(r, x, -xs);
    double ts = r * t;
    double te = std::fma(r, t, -ts);

    double diff = (xs - ts) + (xe - te);
    double sum = (xs + ts) + (xe + te);

    ScaledInterval out;
    out.x_scaled = xs;
    out.t_scaled = ts;
    out.lhs = diff * sum;
    out.rhs = (r * r) * detail::diff_of_squares(x, t);
    return out;
}

double covarying_scale(double invariant_scale, RelativeSpeed speed)
{
    if (!positive_finite(invariant_scale))
    {
        throw DomainError("invariant scale must be positive and finite");
    }
    return invariant_scale * gamma(speed).value();
}

} // namespace covscale
