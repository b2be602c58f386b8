//---------------------------------*-C++-*-----------------------------------//
//! \file mobsense/bounds.hpp
//! Closed-form sample-count, remainder and density quantities.
//---------------------------------------------------------------------------//
#pragma once

#include <span>

namespace mobsense
{
//---------------------------------------------------------------------------//
/*!
 * Theoretical quantities for an AR(1) sampler with bounded driving terms.
 *
 * For 0 < Y <= lambda/n with E[Y] = 1/n:
 *  - n(1-rho) - 1 <= E[M] <= n + lambda/(1-rho) - 1
 *  - every path has M > n(1-rho)/lambda - 1 and R_M <= lambda/(n(1-rho))
 *  - the O(1/n) distortion bound is guaranteed once n exceeds
 *    (lambda/(1-rho)) (1 - 2/ln rho)
 */
struct BoundSet
{
    double em_lower{};
    double em_upper{};
    double m_lower{};
    double remainder_upper{};
    double density_threshold{};
    double effective_density{};
};

// Sufficient density for the distortion bound; equals lambda at rho = 0
double density_threshold(double rho, double lambda);

BoundSet compute_bounds(double rho, double lambda, double n);

// (c - c_prime rho^n) / n
double theorem_envelope(double rho, double n, double c, double c_prime);

//! Least-squares envelope fit and its goodness of fit.
struct EnvelopeFit
{
    double c{};
    double c_prime{};
    double r_squared{};  //!< Coefficient of determination on log10 scale
};

// Fit (c, c_prime) to a distortion curve by relative least squares
EnvelopeFit fit_envelope(double rho,
                         std::span<double const> ns,
                         std::span<double const> distortions);

//---------------------------------------------------------------------------//
}  // namespace mobsense
