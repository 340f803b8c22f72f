#include "covscale/sweep.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

namespace covscale {
namespace {

TEST(SweepTest, samples_are_deterministic_and_bounded)
{
    auto a = make_samples(1000, 42);
    auto b = make_samples(1000, 42);
    auto c = make_samples(1000, 43);
    ASSERT_EQ(1000u, a.size());
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        EXPECT_EQ(a[i].event, b[i].event);
        EXPECT_EQ(a[i].beta, b[i].beta);
        differs = differs || !(a[i].event == c[i].event);
        for (double v : {a[i].event.x, a[i].event.y, a[i].event.z, a[i].event.t})
            EXPECT_LE(std::abs(v), 1e6);
        EXPECT_LE(std::abs(a[i].beta), 0.999999);
    }
    EXPECT_TRUE(differs);
}

TEST(SweepTest, parallel_matches_serial_reference)
{
    auto samples = make_samples(20000, 2024);
    SweepStats par = sweep(samples);
    SweepStats ser = serial::sweep(samples);
    EXPECT_EQ(ser, par);
    EXPECT_EQ(20000u, par.count);
}

TEST(SweepTest, empty_batch)
{
    std::vector<SweepSample> none;
    SweepStats s = sweep(none);
    EXPECT_EQ(0u, s.count);
    EXPECT_EQ(0.0, s.interval_error);
}

TEST(SweepTest, errors_within_property_tolerances)
{
    SweepStats s = sweep(make_samples(5000, 99));
    EXPECT_LE(s.interval_error, 1e-9);
    EXPECT_LE(s.roundtrip_error, 1e-9);
    EXPECT_EQ(0.0, s.duality_error);
    EXPECT_LE(s.scaled_interval_error, 1e-12);
}

TEST(SweepTest, invalid_beta_is_reported_not_thrown)
{
    std::vector<SweepSample> samples{{Event{1, 0, 0, 0}, 1.5}};
    SweepStats s = sweep(samples);
    EXPECT_TRUE(std::isinf(s.interval_error));
}

TEST(TransformAllTest, parallel_matches_serial_bitwise)
{
    auto samples = make_samples(10000, 7);
    std::vector<Event> in;
    for (const auto& s : samples)
        in.push_back(s.event);
    for (Direction dir : {Direction::forward, Direction::inverse})
    {
        std::vector<Event> par(in.size()), ser(in.size());
        RelativeSpeed speed{0.87};
        transform_all(in, speed, dir, par);
        serial::transform_all(in, speed, dir, ser);
        EXPECT_EQ(ser, par);
        EXPECT_EQ(dir == Direction::forward ? lorentz_transform(in[5], speed)
                                            : inverse_transform(in[5], speed),
                  par[5]);
    }
}

TEST(TransformAllTest, errors)
{
    std::vector<Event> in(4), out(3);
    EXPECT_THROW(transform_all(in, RelativeSpeed{0.1}, Direction::forward, out), DomainError);
    EXPECT_THROW(serial::transform_all(in, RelativeSpeed{0.1}, Direction::forward, out),
                 DomainError);

    double big = std::numeric_limits<double>::max();
    std::vector<Event> huge{{big, 0, 0, -big}};
    std::vector<Event> dst(1);
    EXPECT_THROW(transform_all(huge, RelativeSpeed{0.9}, Direction::forward, dst),
                 ComputationError);
}

TEST(RelativeErrorTest, definition)
{
    EXPECT_EQ(0.0, relative_error(2.0, 2.0));
    EXPECT_EQ(0.5, relative_error(3.0, 2.0));
    EXPECT_EQ(1e-3, relative_error(1e-3, 0.0));
    EXPECT_EQ(0.5, relative_error(Event{1, 1, 3, 1}, Event{1, 1, 2, 1}));
}

TEST(SweepTest, max_threads_positive)
{
    EXPECT_GE(max_threads(), 1);
}

} // namespace
} // namespace covscale
