//---------------------------------*-C++-*-----------------------------------//
//! \file tests/test_bounds.cpp
//---------------------------------------------------------------------------//
#include "mobsense/bounds.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "mobsense/error.hpp"

namespace mobsense
{
namespace test
{
//---------------------------------------------------------------------------//
TEST(ComputeBoundsTest, threshold_near_four_hundred)
{
    auto b = compute_bounds(0.9, 2, 1000);
    // 20 (1 - 2/ln 0.9), evaluated independently
    EXPECT_NEAR(399.6488632411962, b.density_threshold, 1e-9);
    EXPECT_GE(b.density_threshold, 395);
    EXPECT_LE(b.density_threshold, 405);
}

TEST(ComputeBoundsTest, iid_degeneracy)
{
    auto b = compute_bounds(0.0, 2, 100);
    EXPECT_DOUBLE_EQ(99, b.em_lower);
    EXPECT_DOUBLE_EQ(101, b.em_upper);
    EXPECT_DOUBLE_EQ(49, b.m_lower);
    EXPECT_DOUBLE_EQ(0.02, b.remainder_upper);
    EXPECT_DOUBLE_EQ(2, b.density_threshold);
    EXPECT_DOUBLE_EQ(100, b.effective_density);
    EXPECT_DOUBLE_EQ(3.5, density_threshold(0.0, 3.5));
}

TEST(ComputeBoundsTest, effective_density)
{
    EXPECT_DOUBLE_EQ(100, compute_bounds(0.99, 2, 1e4).effective_density);
}

TEST(ComputeBoundsTest, invalid_parameters)
{
    EXPECT_THROW(compute_bounds(1.0, 2, 100), Error);
    EXPECT_THROW(compute_bounds(1.5, 2, 100), Error);
    EXPECT_THROW(compute_bounds(-0.1, 2, 100), Error);
    EXPECT_THROW(compute_bounds(0.5, 1.0, 100), Error);
    EXPECT_THROW(compute_bounds(0.5, 2, 0.5), Error);
}

TEST(ComputeBoundsTest, threshold_increasing_in_rho)
{
    double prev = density_threshold(0.0, 2);
    for (int i = 1; i <= 100; ++i)
    {
        double rho = i / 101.0;
        double t = density_threshold(rho, 2);
        EXPECT_GT(t, prev) << "rho=" << rho;
        prev = t;
    }
}

TEST(ComputeBoundsTest, expected_count_bounds_ordered_above_threshold)
{
    for (double rho : {0.1, 0.5, 0.9, 0.99})
    {
        for (double lambda : {1.5, 2.0, 4.0})
        {
            double n = 1.01 * density_threshold(rho, lambda);
            auto b = compute_bounds(rho, lambda, std::max(n, 1.0));
            EXPECT_LE(b.em_lower, b.em_upper);
            EXPECT_TRUE(std::isfinite(b.remainder_upper));
        }
    }
}

//---------------------------------------------------------------------------//
TEST(EnvelopeTest, direct_arithmetic)
{
    EXPECT_DOUBLE_EQ(0.1, theorem_envelope(0.5, 10, 1, 0));
    EXPECT_NEAR((2 - 0.5 * std::pow(0.9, 20)) / 20,
                theorem_envelope(0.9, 20, 2, 0.5), 1e-16);
    // rho^n -> 0: slope -1 between two large n
    double lo = theorem_envelope(0.5, 1e3, 3, 1);
    double hi = theorem_envelope(0.5, 1e4, 3, 1);
    EXPECT_NEAR(-1.0, std::log10(hi / lo), 1e-12);
}

TEST(EnvelopeTest, fit_recovers_exact_envelope)
{
    std::vector<double> ns{5, 10, 20, 40, 80};
    std::vector<double> ds;
    for (double n : ns)
        ds.push_back(theorem_envelope(0.8, n, 2.0, 1.5));
    auto fit = fit_envelope(0.8, ns, ds);
    EXPECT_NEAR(2.0, fit.c, 1e-9);
    EXPECT_NEAR(1.5, fit.c_prime, 1e-9);
    EXPECT_NEAR(1.0, fit.r_squared, 1e-12);
}

TEST(EnvelopeTest, fit_degenerate_second_column)
{
    std::vector<double> ns{1024, 2048, 4096};
    std::vector<double> ds{3.0 / 1024, 3.0 / 2048, 3.0 / 4096};
    auto fit = fit_envelope(0.5, ns, ds);
    EXPECT_NEAR(3.0, fit.c, 1e-12);
    EXPECT_EQ(0.0, fit.c_prime);
    EXPECT_THROW(fit_envelope(0.5, std::vector<double>{1.0},
                              std::vector<double>{1.0}),
                 Error);
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace mobsense
