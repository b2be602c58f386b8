//---------------------------------*-C++-*-----------------------------------//
//! \file mobsense/estimator.hpp
//! Location-unaware Fourier coefficient estimation.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "field.hpp"

namespace mobsense
{
//---------------------------------------------------------------------------//
//! Estimated spectrum and the number of samples it was built from.
struct EstimatedCoefficients
{
    FourierCoefficients coeffs;
    std::size_t m_used{0};

    int bandwidth() const { return coeffs.bandwidth(); }
};

//! Per-harmonic squared error and its sum.
struct DistortionReport
{
    std::vector<double> per_k;  //!< |est[k] - a[k]|^2 for k = -b..b
    double total{0};
};

//---------------------------------------------------------------------------//
/*!
 * Estimate a[-b..b] from M ordered readings without their locations.
 *
 * Each reading is treated as if it were taken on the uniform grid i/M:
 * est[k] = (1/M) sum_{i=1}^{M} v_i exp(-j 2 pi k i / M).
 * Only the order and count of the readings are used. M < 2b+1 is allowed
 * and gives an aliased estimate.
 */
EstimatedCoefficients estimate(std::span<double const> samples, int b);

// Synthesize the reconstructed field at x
double reconstruct(EstimatedCoefficients const& est, double x);

// Squared coefficient error, equal to the integrated squared field error
DistortionReport coefficient_distortion(FourierCoefficients const& est,
                                        FourierCoefficients const& truth);
DistortionReport coefficient_distortion(EstimatedCoefficients const& est,
                                        FourierCoefficients const& truth);

// Rectangle-rule quadrature of |G_est - g|^2 over one period
double integral_distortion(FourierCoefficients const& est,
                           FourierCoefficients const& truth,
                           std::size_t points = default_dense_grid);
double integral_distortion(EstimatedCoefficients const& est,
                           FourierCoefficients const& truth,
                           std::size_t points = default_dense_grid);

//---------------------------------------------------------------------------//
}  // namespace mobsense
