//---------------------------------*-C++-*-----------------------------------//
//! \file mobsense/field.hpp
//! Real, 1-periodic, spatially bandlimited fields on the unit interval.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "random.hpp"

namespace mobsense
{
using Complex = std::complex<double>;

//! Grid size used for sup-norm and quadrature evaluations.
inline constexpr std::size_t default_dense_grid = 8192;
//! Grid size used for central-difference derivative checks.
inline constexpr std::size_t default_derivative_grid = 4096;

//---------------------------------------------------------------------------//
/*!
 * Fourier spectrum a[-b..b] of a real bandlimited field.
 *
 * The field is g(x) = sum_k a[k] exp(j 2 pi k x). Storage is dense, with
 * index 0 holding a[-b]. Construction enforces conjugate symmetry so that
 * g is real valued.
 */
class FourierCoefficients
{
  public:
    //! Constant zero field of bandwidth zero.
    FourierCoefficients();

    //! Build from the full sequence a[-b..b]; must be conjugate symmetric.
    explicit FourierCoefficients(std::vector<Complex> coeffs);

    //! Build from a[0..b]; negative indices are filled by conjugation.
    static FourierCoefficients from_nonnegative(std::span<Complex const> half);

    //! Bandwidth index b
    int bandwidth() const { return b_; }
    //! Number of stored coefficients (2b + 1)
    std::size_t size() const { return coeffs_.size(); }

    //! Coefficient a[k] for -b <= k <= b
    Complex operator[](int k) const
    {
        return coeffs_[static_cast<std::size_t>(k + b_)];
    }

    //! Dense coefficients ordered k = -b..b
    std::span<Complex const> coeffs() const { return coeffs_; }

    //! Multiply every coefficient by a positive real factor.
    FourierCoefficients scaled(double factor) const;

  private:
    int b_{0};
    std::vector<Complex> coeffs_;
};

//---------------------------------------------------------------------------//
// OPERATIONS
//---------------------------------------------------------------------------//

// Synthesize the complex sum; the imaginary part vanishes for real fields
Complex evaluate_complex(std::span<Complex const> coeffs, double x);

// Evaluate the real field value g(x); x wraps by periodicity
double evaluate(FourierCoefficients const& f, double x);

// Max of |g| over the uniform grid j/points, j = 0..points-1
double grid_sup(FourierCoefficients const& f,
                std::size_t points = default_dense_grid);

// Scale the field so that its grid max of |g| equals one
FourierCoefficients normalize_sup(FourierCoefficients const& f,
                                  std::size_t points = default_dense_grid);

// Random field with Uniform[-1,1] real/imaginary parts, normalized
FourierCoefficients random_field(int b, Rng& rng);

// Bernstein bound 2 b pi sup|g| on the field derivative
double derivative_bound(FourierCoefficients const& f,
                        std::size_t points = default_dense_grid);

// Recover a[-b..b] from a periodic evaluator by rectangle-rule quadrature
FourierCoefficients exact_coefficients(std::function<double(double)> const& g,
                                       int b,
                                       std::size_t points = default_dense_grid);

// Example field with b = 3 used throughout the simulations
FourierCoefficients reference_field();

//---------------------------------------------------------------------------//
}  // namespace mobsense
