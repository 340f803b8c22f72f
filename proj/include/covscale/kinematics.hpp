#ifndef COVSCALE_KINEMATICS_HPP
#define COVSCALE_KINEMATICS_HPP

#include <stdexcept>
#include <string>

/**
 * Boosts along the x axis between a frame F at rest with the observer and a
 * frame F' moving at speed beta (natural units, c = 1).
 *
 * The metric is the real signed form x^2 + y^2 + z^2 - t^2: positive is
 * spacelike, negative timelike, zero lightlike.
 */
namespace covscale {

/// Input outside an operation's domain (|beta| >= 1, NaN, negative energy...).
class DomainError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A result that overflowed to a non-finite value.
class ComputationError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Event
{
    double x{0};
    double y{0};
    double z{0};
    double t{0};

    /// Throws DomainError unless every component is finite.
    static Event make(double x, double y, double z, double t);
    /// Longitudinal-only event with y = z = 0.
    static Event make(double x, double t) { return make(x, 0, 0, t); }

    bool operator==(const Event&) const = default;
};

/// Relative speed as a fraction of light speed, strictly inside (-1, 1).
class RelativeSpeed
{
  public:
    /// Throws DomainError("beta must satisfy |beta| < 1") outside the domain.
    explicit RelativeSpeed(double beta);

    double beta() const noexcept { return beta_; }
    RelativeSpeed reversed() const noexcept { return RelativeSpeed{-beta_, Unchecked{}}; }

  private:
    struct Unchecked
    {};
    RelativeSpeed(double beta, Unchecked) noexcept : beta_{beta} {}

    double beta_;
};

class ClockGeometry;
class LorentzFactor;

LorentzFactor gamma(RelativeSpeed speed) noexcept;
LorentzFactor scale_ratio(const ClockGeometry& geometry, double v);
LorentzFactor gamma_from_kinetic(double kinetic_energy, double rest_energy);

/**
 * Lorentz factor r >= 1.
 *
 * There is no public constructor: values come from gamma(), from the
 * light-clock period ratio, or from the kinetic-energy relation, each of
 * which guarantees r >= 1.
 */
class LorentzFactor
{
  public:
    double value() const noexcept { return value_; }
    /// Speed magnitude sqrt(1 - 1/r^2) recovered from the factor.
    double beta() const noexcept;

    friend bool operator==(LorentzFactor, LorentzFactor) = default;
    friend auto operator<=>(LorentzFactor, LorentzFactor) = default;

  private:
    explicit LorentzFactor(double value) noexcept : value_{value} {}

    friend LorentzFactor gamma(RelativeSpeed) noexcept;
    friend LorentzFactor scale_ratio(const ClockGeometry&, double);
    friend LorentzFactor gamma_from_kinetic(double, double);

    double value_;
};

/// Signed squared interval x^2 + y^2 + z^2 - t^2.
struct Interval
{
    double value{0};

    bool is_spacelike() const noexcept { return value > 0; }
    bool is_timelike() const noexcept { return value < 0; }
    bool is_lightlike() const noexcept { return value == 0; }
};

/// (1 - beta^2)^(-1/2), evaluated as 1/sqrt((1 - beta)(1 + beta)).
LorentzFactor gamma(RelativeSpeed speed) noexcept;

/// F -> F': x' = r(x - Vt), t' = r(t - Vx), y and z unchanged.
Event lorentz_transform(const Event& e, RelativeSpeed speed);

/// F' -> F: x = r(x' + Vt'), t = r(t' + Vx'). Same kernel as
/// lorentz_transform with V negated, so lorentz_transform(e, -V) is
/// bit-identical to inverse_transform(e, V).
Event inverse_transform(const Event& e_prime, RelativeSpeed speed);

Interval interval(const Event& e) noexcept;

namespace detail {
// Shared boost kernel; throws ComputationError on non-finite output.
Event boost(const Event& e, double factor, double beta);
// a*a - b*b with a single rounding error (Kahan's difference of products).
double diff_of_squares(double a, double b) noexcept;
} // namespace detail

} // namespace covscale

#endif
