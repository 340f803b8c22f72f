#ifndef COVSCALE_TESTS_ORACLE_HPP
#define COVSCALE_TESTS_ORACLE_HPP

// Test-only reference formulas. They take a different route from the
// library (rapidity/hyperbolic form, extended precision) so agreement is
// evidence rather than tautology. Nothing here may call into covscale.

#include <cmath>

namespace oracle {

using Real = long double;

inline Real gamma(Real beta)
{
    return 1.0L / std::sqrt(1.0L - beta * beta);
}

struct Boosted
{
    Real x;
    Real t;
};

// Boost by rapidity phi = atanh(beta): x' = x cosh(phi) - t sinh(phi).
inline Boosted rapidity_boost(Real x, Real t, Real beta)
{
    Real phi = std::atanh(beta);
    Real ch = std::cosh(phi);
    Real sh = std::sinh(phi);
    return {x * ch - t * sh, t * ch - x * sh};
}

inline Real interval(Real x, Real y, Real z, Real t)
{
    return x * x + y * y + z * z - t * t;
}

// Light clock period by geometry: in half a period T/2 the photon runs the
// diagonal sqrt(d^2 + (v T/2)^2) at speed c. Solved by bisection on T.
inline Real moving_clock_period(Real d, Real c, Real v)
{
    auto excess = [&](Real period) {
        Real half = period / 2;
        return c * half - std::sqrt(d * d + v * half * v * half);
    };
    Real lo = 2 * d / c; // excess(lo) <= 0
    Real hi = lo;
    while (excess(hi) < 0)
        hi *= 2;
    for (int i = 0; i < 200; ++i)
    {
        Real mid = (lo + hi) / 2;
        (excess(mid) < 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

} // namespace oracle

#endif
