#ifndef COVSCALE_SWEEP_HPP
#define COVSCALE_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "covscale/kinematics.hpp"

// Batched kernels over many events. The OpenMP versions in `covscale` and the
// plain loops in `covscale::serial` must produce bit-identical results; the
// serial ones are the reference the tests compare against.

namespace covscale {

enum class Direction
{
    forward, ///< lorentz_transform
    inverse, ///< inverse_transform
};

struct SweepSample
{
    Event event;
    double beta;
};

/// Uniform samples: every component in [-max_component, max_component] and
/// beta in [-max_beta, max_beta]. Deterministic for a given seed.
std::vector<SweepSample> make_samples(std::size_t count,
                                      std::uint64_t seed,
                                      double max_component = 1e6,
                                      double max_beta = 0.999999);

/// Worst-case errors over a batch of samples.
struct SweepStats
{
    std::size_t count{0};
    /// max |I(LT e) - I(e)| / (1 + |I(e)|)
    double interval_error{0};
    /// max componentwise relative error of IT(LT e) against e, and of
    /// LT(IT e) against e
    double roundtrip_error{0};
    /// max componentwise relative difference between LT(e, -b) and IT(e, b)
    double duality_error{0};
    /// max |lhs - rhs| / |rhs| of scaled_interval_relation(x, t); zero rhs
    /// compares absolutely
    double scaled_interval_error{0};

    bool operator==(const SweepStats&) const = default;
};

/// |a - b| / |b|, or |a - b| when b == 0.
double relative_error(double a, double b) noexcept;

/// Worst componentwise relative_error(a, b) over x, y, z, t.
double relative_error(const Event& a, const Event& b) noexcept;

SweepStats sweep(std::span<const SweepSample> samples);

void transform_all(std::span<const Event> in,
                   RelativeSpeed speed,
                   Direction dir,
                   std::span<Event> out);

namespace serial {
SweepStats sweep(std::span<const SweepSample> samples);
void transform_all(std::span<const Event> in,
                   RelativeSpeed speed,
                   Direction dir,
                   std::span<Event> out);
} // namespace serial

/// Number of OpenMP threads a parallel region would use (1 without OpenMP).
int max_threads() noexcept;

} // namespace covscale

#endif
