//---------------------------------*-C++-*-----------------------------------//
//! \file field.cpp
//---------------------------------------------------------------------------//
#include "mobsense/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mobsense/error.hpp"

namespace mobsense
{
namespace
{
constexpr double two_pi = 2 * std::numbers::pi;
constexpr double symmetry_tol = 1e-12;
}  // namespace

//---------------------------------------------------------------------------//
FourierCoefficients::FourierCoefficients() : coeffs_{Complex{0, 0}} {}

//---------------------------------------------------------------------------//
FourierCoefficients::FourierCoefficients(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs))
{
    validate(coeffs_.size() % 2 == 1,
             "Fourier coefficient count must be odd (2b+1), got "
                 + std::to_string(coeffs_.size()));
    b_ = static_cast<int>(coeffs_.size() / 2);
    for (int k = 0; k <= b_; ++k)
    {
        Complex pos = (*this)[k];
        Complex neg = (*this)[-k];
        validate(std::isfinite(pos.real()) && std::isfinite(pos.imag()),
                 "Fourier coefficient a[" + std::to_string(k)
                     + "] is not finite");
        validate(std::abs(pos - std::conj(neg)) <= symmetry_tol,
                 "Fourier coefficients are not conjugate symmetric at k="
                     + std::to_string(k));
    }
    // Make symmetry exact so synthesized values are real to rounding
    for (int k = 1; k <= b_; ++k)
    {
        coeffs_[static_cast<std::size_t>(b_ - k)]
            = std::conj(coeffs_[static_cast<std::size_t>(b_ + k)]);
    }
    coeffs_[static_cast<std::size_t>(b_)].imag(0);
}

//---------------------------------------------------------------------------//
FourierCoefficients
FourierCoefficients::from_nonnegative(std::span<Complex const> half)
{
    validate(!half.empty(), "at least a[0] is required");
    int b = static_cast<int>(half.size()) - 1;
    std::vector<Complex> full(2 * half.size() - 1);
    for (int k = 0; k <= b; ++k)
    {
        full[static_cast<std::size_t>(b + k)] = half[k];
        full[static_cast<std::size_t>(b - k)] = std::conj(half[k]);
    }
    full[static_cast<std::size_t>(b)] = Complex{half[0].real(), 0};
    return FourierCoefficients{std::move(full)};
}

//---------------------------------------------------------------------------//
FourierCoefficients FourierCoefficients::scaled(double factor) const
{
    FourierCoefficients result = *this;
    for (auto& c : result.coeffs_)
    {
        c *= factor;
    }
    return result;
}

//---------------------------------------------------------------------------//
Complex evaluate_complex(std::span<Complex const> coeffs, double x)
{
    int b = static_cast<int>(coeffs.size() / 2);
    double frac = x - std::floor(x);
    Complex base = std::polar(1.0, two_pi * frac);
    Complex result = coeffs[static_cast<std::size_t>(b)];
    Complex pos{1, 0};
    Complex neg{1, 0};
    for (int k = 1; k <= b; ++k)
    {
        pos *= base;
        neg = std::conj(pos);
        result += coeffs[static_cast<std::size_t>(b + k)] * pos
                  + coeffs[static_cast<std::size_t>(b - k)] * neg;
    }
    return result;
}

//---------------------------------------------------------------------------//
double evaluate(FourierCoefficients const& f, double x)
{
    // Pair +k and -k terms: a[k] e + conj(a[k] e) = 2 Re(a[k] e)
    int b = f.bandwidth();
    double frac = x - std::floor(x);
    Complex base = std::polar(1.0, two_pi * frac);
    double result = f[0].real();
    Complex pos{1, 0};
    for (int k = 1; k <= b; ++k)
    {
        pos *= base;
        Complex term = f[k] * pos;
        result += 2 * term.real();
    }
    return result;
}

//---------------------------------------------------------------------------//
double grid_sup(FourierCoefficients const& f, std::size_t points)
{
    validate(points > 0, "grid size must be positive");
    double result = 0;
    for (std::size_t j = 0; j < points; ++j)
    {
        double x = static_cast<double>(j) / static_cast<double>(points);
        result = std::max(result, std::abs(evaluate(f, x)));
    }
    return result;
}

//---------------------------------------------------------------------------//
FourierCoefficients
normalize_sup(FourierCoefficients const& f, std::size_t points)
{
    double sup = grid_sup(f, points);
    if (!(sup > 0))
    {
        throw Error(ErrorCode::degenerate_field,
                    "cannot normalize an identically zero field");
    }
    return f.scaled(1 / sup);
}

//---------------------------------------------------------------------------//
/*!
 * Draw a random real field.
 *
 * a[0] is real Uniform[-1,1]; for k = 1..b the real and imaginary parts of
 * a[k] are independent Uniform[-1,1]. Negative indices follow by
 * conjugation and the result is scaled to unit grid sup.
 */
FourierCoefficients random_field(int b, Rng& rng)
{
    validate(b >= 0, "bandwidth index must be nonnegative");
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<Complex> half(static_cast<std::size_t>(b) + 1);
    half[0] = Complex{unif(rng), 0};
    for (int k = 1; k <= b; ++k)
    {
        double re = unif(rng);
        double im = unif(rng);
        half[static_cast<std::size_t>(k)] = Complex{re, im};
    }
    auto field = FourierCoefficients::from_nonnegative(half);
    return normalize_sup(field);
}

//---------------------------------------------------------------------------//
double derivative_bound(FourierCoefficients const& f, std::size_t points)
{
    return two_pi * f.bandwidth() * grid_sup(f, points);
}

//---------------------------------------------------------------------------//
/*!
 * Quadrature for a[k] = int_0^1 g(x) exp(-j 2 pi k x) dx.
 *
 * For a 1-periodic integrand the composite trapezoid rule on N points
 * reduces to the rectangle rule and is exact for harmonics |k| < N/2.
 */
FourierCoefficients exact_coefficients(std::function<double(double)> const& g,
                                       int b,
                                       std::size_t points)
{
    validate(b >= 0, "bandwidth index must be nonnegative");
    validate(points > static_cast<std::size_t>(2 * b),
             "quadrature grid too coarse for the bandwidth");
    std::vector<double> values(points);
    for (std::size_t j = 0; j < points; ++j)
    {
        values[j] = g(static_cast<double>(j) / static_cast<double>(points));
    }
    std::vector<Complex> half(static_cast<std::size_t>(b) + 1);
    auto const n = static_cast<std::uint64_t>(points);
    for (int k = 0; k <= b; ++k)
    {
        Complex acc{0, 0};
        for (std::size_t j = 0; j < points; ++j)
        {
            // Exact phase reduction keeps the twiddles accurate for large j
            auto phase = (static_cast<std::uint64_t>(k) * j) % n;
            acc += values[j]
                   * std::polar(1.0,
                                -two_pi * static_cast<double>(phase)
                                    / static_cast<double>(n));
        }
        half[static_cast<std::size_t>(k)] = acc / static_cast<double>(points);
    }
    return FourierCoefficients::from_nonnegative(half);
}

//---------------------------------------------------------------------------//
FourierCoefficients reference_field()
{
    std::vector<Complex> half{
        {0.3002, 0},
        {-0.04131, 0.0216},
        {0.0871, 0.0343},
        {-0.1679, -0.0586},
    };
    return FourierCoefficients::from_nonnegative(half);
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
