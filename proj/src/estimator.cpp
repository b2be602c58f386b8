//---------------------------------*-C++-*-----------------------------------//
//! \file estimator.cpp
//---------------------------------------------------------------------------//
#include "mobsense/estimator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mobsense/error.hpp"

namespace mobsense
{
namespace
{
//! Neumaier compensated sum of a real sequence
class CompensatedSum
{
  public:
    void add(double value)
    {
        double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value))
            carry_ += (sum_ - t) + value;
        else
            carry_ += (value - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + carry_; }

  private:
    double sum_{0};
    double carry_{0};
};
}  // namespace

//---------------------------------------------------------------------------//
EstimatedCoefficients estimate(std::span<double const> samples, int b)
{
    validate(b >= 0, "bandwidth index must be nonnegative");
    std::size_t const m = samples.size();
    if (m == 0)
    {
        throw Error(ErrorCode::no_samples,
                    "cannot estimate coefficients from zero samples");
    }
    auto const md = static_cast<double>(m);
    // Compensated sums keep a constant input exact to rounding of the mean
    std::vector<CompensatedSum> re(static_cast<std::size_t>(b) + 1);
    std::vector<CompensatedSum> im(static_cast<std::size_t>(b) + 1);
    for (std::size_t i = 1; i <= m; ++i)
    {
        double v = samples[i - 1];
        Complex twiddle = std::polar(
            1.0, -2 * std::numbers::pi * static_cast<double>(i) / md);
        Complex power{1, 0};
        re[0].add(v);
        for (int k = 1; k <= b; ++k)
        {
            power *= twiddle;
            re[static_cast<std::size_t>(k)].add(v * power.real());
            im[static_cast<std::size_t>(k)].add(v * power.imag());
        }
    }
    std::vector<Complex> half(re.size());
    for (std::size_t k = 0; k < half.size(); ++k)
    {
        half[k] = Complex{re[k].value(), im[k].value()} / md;
    }
    return {FourierCoefficients::from_nonnegative(half), m};
}

//---------------------------------------------------------------------------//
double reconstruct(EstimatedCoefficients const& est, double x)
{
    return evaluate(est.coeffs, x);
}

//---------------------------------------------------------------------------//
namespace
{
void check_same_bandwidth(FourierCoefficients const& a,
                          FourierCoefficients const& b)
{
    if (a.bandwidth() != b.bandwidth())
    {
        throw Error(ErrorCode::bandwidth_mismatch,
                    "bandwidth mismatch: " + std::to_string(a.bandwidth())
                        + " vs " + std::to_string(b.bandwidth()));
    }
}
}  // namespace

//---------------------------------------------------------------------------//
DistortionReport coefficient_distortion(FourierCoefficients const& est,
                                        FourierCoefficients const& truth)
{
    check_same_bandwidth(est, truth);
    DistortionReport report;
    report.per_k.reserve(est.size());
    for (int k = -est.bandwidth(); k <= est.bandwidth(); ++k)
    {
        double err = std::norm(est[k] - truth[k]);
        report.per_k.push_back(err);
        report.total += err;
    }
    return report;
}

DistortionReport coefficient_distortion(EstimatedCoefficients const& est,
                                        FourierCoefficients const& truth)
{
    return coefficient_distortion(est.coeffs, truth);
}

//---------------------------------------------------------------------------//
double integral_distortion(FourierCoefficients const& est,
                           FourierCoefficients const& truth,
                           std::size_t points)
{
    check_same_bandwidth(est, truth);
    validate(points > static_cast<std::size_t>(4 * est.bandwidth()),
             "quadrature grid too coarse for the bandwidth");
    double sum = 0;
    for (std::size_t j = 0; j < points; ++j)
    {
        double x = static_cast<double>(j) / static_cast<double>(points);
        double diff = evaluate(est, x) - evaluate(truth, x);
        sum += diff * diff;
    }
    return sum / static_cast<double>(points);
}

double integral_distortion(EstimatedCoefficients const& est,
                           FourierCoefficients const& truth,
                           std::size_t points)
{
    return integral_distortion(est.coeffs, truth, points);
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
