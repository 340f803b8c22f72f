#include "covscale/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "covscale/scale_conversion.hpp"

#ifdef _OPENMP
#    include <omp.h>
#endif

namespace covscale {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SampleErrors
{
    double interval{0};
    double roundtrip{0};
    double duality{0};
    double scaled{0};
};

SampleErrors evaluate(const SweepSample& s) noexcept
{
    SampleErrors err;
    try
    {
        RelativeSpeed speed{s.beta};
        const Event& e = s.event;

        Event fwd = lorentz_transform(e, speed);
        double before = interval(e).value;
        double after = interval(fwd).value;
        err.interval = std::abs(after - before) / (1 + std::abs(before));

        err.roundtrip = std::max(relative_error(inverse_transform(fwd, speed), e),
                                 relative_error(lorentz_transform(inverse_transform(e, speed), speed), e));

        err.duality = relative_error(lorentz_transform(e, speed.reversed()),
                                     inverse_transform(e, speed));

        ScaledInterval si = scaled_interval_relation(e.x, e.t, speed);
        err.scaled = relative_error(si.lhs, si.rhs);
    }
    catch (...)
    {
        err = {kInf, kInf, kInf, kInf};
    }
    return err;
}

void transform_one(const Event& in, RelativeSpeed speed, Direction dir, Event& out)
{
    out = dir == Direction::forward ? lorentz_transform(in, speed)
                                    : inverse_transform(in, speed);
}

} // namespace

double relative_error(double a, double b) noexcept
{
    double diff = std::abs(a - b);
    return b == 0 ? diff : diff / std::abs(b);
}

double relative_error(const Event& a, const Event& b) noexcept
{
    return std::max({relative_error(a.x, b.x),
                     relative_error(a.y, b.y),
                     relative_error(a.z, b.z),
                     relative_error(a.t, b.t)});
}

std::vector<SweepSample> make_samples(std::size_t count,
                                      std::uint64_t seed,
                                      double max_component,
                                      double max_beta)
{
    std::mt19937_64 rng{seed};
    std::uniform_real_distribution<double> comp{-max_component, max_component};
    std::uniform_real_distribution<double> beta{-max_beta, max_beta};

    std::vector<SweepSample> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        // Sequenced explicitly so the stream is portable.
        double x = comp(rng);
        double y = comp(rng);
        double z = comp(rng);
        double t = comp(rng);
        double b = beta(rng);
        samples.push_back({Event{x, y, z, t}, b});
    }
    return samples;
}

SweepStats sweep(std::span<const SweepSample> samples)
{
    double interval_err = 0;
    double roundtrip_err = 0;
    double duality_err = 0;
    double scaled_err = 0;
    const auto n = static_cast<std::ptrdiff_t>(samples.size());

#pragma omp parallel for reduction(max : interval_err, roundtrip_err, duality_err, scaled_err)
    for (std::ptrdiff_t i = 0; i < n; ++i)
    {
        SampleErrors e = evaluate(samples[i]);
        interval_err = std::max(interval_err, e.interval);
        roundtrip_err = std::max(roundtrip_err, e.roundtrip);
        duality_err = std::max(duality_err, e.duality);
        scaled_err = std::max(scaled_err, e.scaled);
    }
    return SweepStats{samples.size(), interval_err, roundtrip_err, duality_err, scaled_err};
}

void transform_all(std::span<const Event> in,
                   RelativeSpeed speed,
                   Direction dir,
                   std::span<Event> out)
{
    if (out.size() < in.size())
        throw DomainError("output span is smaller than input span");

    const auto n = static_cast<std::ptrdiff_t>(in.size());
    bool overflow = false;
#pragma omp parallel for reduction(|| : overflow)
    for (std::ptrdiff_t i = 0; i < n; ++i)
    {
        try
        {
            transform_one(in[i], speed, dir, out[i]);
        }
        catch (const ComputationError&)
        {
            overflow = true;
        }
    }
    if (overflow)
        throw ComputationError("boost overflowed to a non-finite coordinate");
}

namespace serial {

SweepStats sweep(std::span<const SweepSample> samples)
{
    SweepStats stats;
    stats.count = samples.size();
    for (const auto& s : samples)
    {
        SampleErrors e = evaluate(s);
        stats.interval_error = std::max(stats.interval_error, e.interval);
        stats.roundtrip_error = std::max(stats.roundtrip_error, e.roundtrip);
        stats.duality_error = std::max(stats.duality_error, e.duality);
        stats.scaled_interval_error = std::max(stats.scaled_interval_error, e.scaled);
    }
    return stats;
}

void transform_all(std::span<const Event> in,
                   RelativeSpeed speed,
                   Direction dir,
                   std::span<Event> out)
{
    if (out.size() < in.size())
        throw DomainError("output span is smaller than input span");
    for (std::size_t i = 0; i < in.size(); ++i)
    {
        transform_one(in[i], speed, dir, out[i]);
    }
}

} // namespace serial

int max_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace covscale
