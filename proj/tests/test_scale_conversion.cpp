#include "covscale/scale_conversion.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace covscale {
namespace {

double rel(double a, double b)
{
    return b == 0 ? std::abs(a) : std::abs(a - b) / std::abs(b);
}

TEST(ClockGeometryTest, validation)
{
    EXPECT_NO_THROW((ClockGeometry{1, 1}));
    EXPECT_THROW((ClockGeometry{0, 1}), DomainError);
    EXPECT_THROW((ClockGeometry{1, 0}), DomainError);
    EXPECT_THROW((ClockGeometry{-1, 1}), DomainError);
    EXPECT_THROW((ClockGeometry{1, std::nan("")}), DomainError);
    EXPECT_THROW((ClockGeometry{INFINITY, 1}), DomainError);
}

TEST(StationaryPeriodTest, examples)
{
    EXPECT_EQ(2.0, stationary_period({1, 1}));
    EXPECT_NEAR(1e-8, stationary_period({1.5, 3e8}), 1e-23);
    EXPECT_EQ(1.0, stationary_period({0.5, 1}));
}

TEST(MovingPeriodTest, examples)
{
    ClockGeometry g{1, 1};
    EXPECT_EQ(2.0, moving_period(g, 0));
    // 2 / sqrt(0.64) and 2 / sqrt(0.36)
    EXPECT_NEAR(2.5, moving_period(g, 0.6), 1e-15);
    EXPECT_NEAR(10.0 / 3.0, moving_period(g, 0.8), 1e-15);

    EXPECT_THROW(moving_period(g, 1.0), DomainError);
    EXPECT_THROW(moving_period(g, 2.0), DomainError);
    EXPECT_THROW(moving_period(g, -0.1), DomainError);
    EXPECT_THROW(moving_period(g, std::nan("")), DomainError);
}

TEST(MovingPeriodTest, matches_geometric_oracle)
{
    for (double d : {1e-3, 0.7, 42.0})
    {
        for (double c : {1.0, 3e8})
        {
            for (double frac : {0.0, 0.1, 0.5, 0.9, 0.99})
            {
                double v = frac * c;
                double want = static_cast<double>(oracle::moving_clock_period(d, c, v));
                EXPECT_LE(rel(moving_period({d, c}, v), want), 1e-13);
            }
        }
    }
}

TEST(MovingPeriodTest, dilates)
{
    std::mt19937_64 rng{19};
    std::uniform_real_distribution<double> frac{0.0, 0.999};
    for (int i = 0; i < 1000; ++i)
    {
        ClockGeometry g{0.25, 3e8};
        double v = frac(rng) * g.light_speed();
        if (v > 0)
            EXPECT_GT(moving_period(g, v), stationary_period(g));
        else
            EXPECT_EQ(moving_period(g, v), stationary_period(g));
    }
}

TEST(ScaleRatioTest, examples)
{
    EXPECT_EQ(1.0, scale_ratio({3, 1}, 0).value());
    for (double d : {0.01, 1.0, 17.0})
    {
        EXPECT_NEAR(1.25, scale_ratio({d, 1}, 0.6).value(), 1e-15);
    }
    EXPECT_NEAR(1.25, scale_ratio({1, 3e8}, 1.8e8).value(), 1e-15);
    EXPECT_THROW(scale_ratio({1, 1}, 1), DomainError);
}

TEST(ScaleRatioTest, equals_gamma_on_grid)
{
    for (double d : {1e-3, 1e-1, 1.0, 1e1, 1e3})
    {
        for (double c : {1.0, 3e8})
        {
            for (int k = 0; k < 20; ++k)
            {
                double frac = 0.999 * k / 19.0;
                double ratio = scale_ratio({d, c}, frac * c).value();
                double g = gamma(RelativeSpeed{frac}).value();
                EXPECT_LE(rel(ratio, g), 1e-12) << d << " " << c << " " << frac;
            }
        }
    }
}

TEST(ScaleRatioTest, rescaling_invariance)
{
    std::mt19937_64 rng{23};
    std::uniform_real_distribution<double> frac{0.0, 0.999};
    std::uniform_real_distribution<double> k{0.01, 100.0};
    for (int i = 0; i < 500; ++i)
    {
        double f = frac(rng);
        double s = k(rng);
        double base = scale_ratio({1.0, 2.0}, 2.0 * f).value();
        EXPECT_LE(rel(scale_ratio({s, 2.0}, 2.0 * f).value(), base), 1e-13);
        EXPECT_LE(rel(scale_ratio({1.0, 2.0 * s}, 2.0 * s * f).value(), base), 1e-12);
    }
}

TEST(ClockReportTest, fields)
{
    ScaleReport rep = clock_report({1, 1}, 0.6);
    EXPECT_EQ(2.0, rep.stationary_period);
    EXPECT_NEAR(2.5, rep.moving_period, 1e-15);
    EXPECT_NEAR(1.25, rep.ratio.value(), 1e-15);
    EXPECT_NEAR(rep.moving_period, rep.covarying_scale, 1e-15);
}

TEST(ScaledIntervalTest, examples)
{
    auto a = scaled_interval_relation(1, 0, RelativeSpeed{0.6});
    EXPECT_NEAR(1.5625, a.lhs, 1e-14);
    EXPECT_NEAR(1.5625, a.rhs, 1e-14);
    EXPECT_NEAR(1.25, a.x_scaled, 1e-15);

    auto b = scaled_interval_relation(7, 7, RelativeSpeed{0.3});
    EXPECT_EQ(0.0, b.lhs);
    EXPECT_EQ(0.0, b.rhs);

    // r^2 = 25/9, interval 4 - 1 = 3
    auto c = scaled_interval_relation(2, 1, RelativeSpeed{0.8});
    EXPECT_NEAR(25.0 / 3.0, c.lhs, 1e-13);
    EXPECT_NEAR(25.0 / 3.0, c.rhs, 1e-13);
}

TEST(ScaledIntervalTest, identity_near_light_cone)
{
    std::mt19937_64 rng{29};
    std::uniform_real_distribution<double> comp{-1e6, 1e6};
    std::uniform_real_distribution<double> tiny{-1.0, 1.0};
    std::uniform_real_distribution<double> beta{-0.999999, 0.999999};
    for (int i = 0; i < 2000; ++i)
    {
        double t = comp(rng);
        // Within a few units of the light cone at 1e6 scale.
        double x = t + tiny(rng);
        auto si = scaled_interval_relation(x, t, RelativeSpeed{beta(rng)});
        EXPECT_LE(rel(si.lhs, si.rhs), 1e-12) << x << " " << t;
    }
}

TEST(CovaryingScaleTest, examples)
{
    EXPECT_EQ(1.0, covarying_scale(1.0, RelativeSpeed{0}));
    EXPECT_EQ(2.5, covarying_scale(2.5, RelativeSpeed{0}));
    EXPECT_NEAR(1.25, covarying_scale(1.0, RelativeSpeed{0.6}), 1e-15);
    EXPECT_THROW(covarying_scale(0.0, RelativeSpeed{0.6}), DomainError);
    EXPECT_THROW(covarying_scale(-1.0, RelativeSpeed{0.6}), DomainError);
}

} // namespace
} // namespace covscale
