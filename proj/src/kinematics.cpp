#include "covscale/kinematics.hpp"

#include <cmath>

namespace covscale {

Event Event::make(double x, double y, double z, double t)
{
    if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(z)
          && std::isfinite(t)))
    {
        throw DomainError("event components must be finite");
    }
    return Event{x, y, z, t};
}

RelativeSpeed::RelativeSpeed(double beta) : beta_{beta}
{
    // NaN fails the comparison as well
    if (!(std::abs(beta) < 1.0))
    {
        throw DomainError("beta must satisfy |beta| < 1");
    }
}

double LorentzFactor::beta() const noexcept
{
    double inv = 1.0 / value_;
    return std::sqrt((1.0 - inv) * (1.0 + inv));
}

LorentzFactor gamma(RelativeSpeed speed) noexcept
{
    double b = speed.beta();
    if (b == 0.0)
    {
        return LorentzFactor{1.0};
    }
    return LorentzFactor{1.0 / std::sqrt((1.0 - b) * (1.0 + b))};
}

namespace detail {

Event boost(const Event& e, double factor, double beta)
{
    Event out{factor * (e.x - beta * e.t),
              e.y,
              e.z,
              factor * (e.t - beta * e.x)};
    if (!std::isfinite(out.x) || !std::isfinite(out.t))
    {
        throw ComputationError("boost overflowed to a non-finite coordinate");
    }
    return out;
}

double diff_of_squares(double a, double b) noexcept
{
    double bb = b * b;
    double err = std::fma(-b, b, bb);
    double head = std::fma(a, a, -bb);
    return head + err;
}

} // namespace detail

Event lorentz_transform(const Event& e, RelativeSpeed speed)
{
    return detail::boost(e, gamma(speed).value(), speed.beta());
}

Event inverse_transform(const Event& e_prime, RelativeSpeed speed)
{
    return detail::boost(e_prime, gamma(speed).value(), -speed.beta());
}

Interval interval(const Event& e) noexcept
{
    return Interval{detail::diff_of_squares(e.x, e.t) + e.y * e.y
                    + e.z * e.z};
}

} // namespace covscale
