//---------------------------------*-C++-*-----------------------------------//
//! \file bounds.cpp
//---------------------------------------------------------------------------//
#include "mobsense/bounds.hpp"

#include <cmath>
#include <string>

#include "mobsense/error.hpp"

namespace mobsense
{
namespace
{
void check_parameters(double rho, double lambda)
{
    validate(rho >= 0 && rho < 1,
             "rho: must lie in [0, 1), got " + std::to_string(rho));
    validate(std::isfinite(lambda) && lambda > 1,
             "lambda: must exceed 1, got " + std::to_string(lambda));
}
}  // namespace

//---------------------------------------------------------------------------//
double density_threshold(double rho, double lambda)
{
    check_parameters(rho, lambda);
    if (rho == 0)
    {
        // 2 / ln(rho) -> 0 as rho -> 0+
        return lambda;
    }
    return lambda / (1 - rho) * (1 - 2 / std::log(rho));
}

//---------------------------------------------------------------------------//
BoundSet compute_bounds(double rho, double lambda, double n)
{
    check_parameters(rho, lambda);
    validate(std::isfinite(n) && n >= 1, "n: density must be at least 1");
    BoundSet result;
    // n - n*rho rounds to the exact integer for decimal rho (0.99 * 1e4)
    result.effective_density = n - n * rho;
    result.em_lower = result.effective_density - 1;
    result.em_upper = n + lambda / (1 - rho) - 1;
    result.m_lower = result.effective_density / lambda - 1;
    result.remainder_upper = lambda / result.effective_density;
    result.density_threshold = density_threshold(rho, lambda);
    return result;
}

//---------------------------------------------------------------------------//
double theorem_envelope(double rho, double n, double c, double c_prime)
{
    return (c - c_prime * std::pow(rho, n)) / n;
}

//---------------------------------------------------------------------------//
/*!
 * Fit D(n) ~ (c - c' rho^n) / n.
 *
 * Rows are weighted by 1/D so every density contributes comparably across
 * decades. When rho^n is negligible over the whole grid the second column
 * vanishes and only c is fitted (c' = 0).
 */
EnvelopeFit fit_envelope(double rho,
                         std::span<double const> ns,
                         std::span<double const> distortions)
{
    validate(ns.size() == distortions.size() && ns.size() >= 2,
             "envelope fit needs at least two matched points");
    double s11 = 0, s12 = 0, s22 = 0, t1 = 0, t2 = 0;
    for (std::size_t i = 0; i < ns.size(); ++i)
    {
        validate(ns[i] > 0 && distortions[i] > 0,
                 "envelope fit needs positive densities and distortions");
        double f1 = 1 / (ns[i] * distortions[i]);
        double f2 = -std::pow(rho, ns[i]) / (ns[i] * distortions[i]);
        s11 += f1 * f1;
        s12 += f1 * f2;
        s22 += f2 * f2;
        t1 += f1;
        t2 += f2;
    }
    EnvelopeFit fit;
    double det = s11 * s22 - s12 * s12;
    if (s22 <= 1e-14 * s11 || std::abs(det) <= 1e-12 * s11 * s22)
    {
        fit.c = t1 / s11;
        fit.c_prime = 0;
    }
    else
    {
        fit.c = (t1 * s22 - t2 * s12) / det;
        fit.c_prime = (s11 * t2 - s12 * t1) / det;
    }

    double mean_log = 0;
    for (double d : distortions)
    {
        mean_log += std::log10(d);
    }
    mean_log /= static_cast<double>(distortions.size());
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < ns.size(); ++i)
    {
        double model = theorem_envelope(rho, ns[i], fit.c, fit.c_prime);
        double obs = std::log10(distortions[i]);
        double pred = model > 0 ? std::log10(model) : -HUGE_VAL;
        ss_res += (obs - pred) * (obs - pred);
        ss_tot += (obs - mean_log) * (obs - mean_log);
    }
    fit.r_squared = ss_tot > 0 ? 1 - ss_res / ss_tot : 1.0;
    return fit;
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
