//---------------------------------*-C++-*-----------------------------------//
//! \file mobsense/sampling.hpp
//! AR(1) intersample distances driven by a positive renewal process.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "random.hpp"

namespace mobsense
{
//---------------------------------------------------------------------------//
//! Distribution family of the driving terms Y_i.
enum class RenewalKind
{
    uniform,            //!< Uniform(0, 2/n]; support parameter fixed at 2
    scaled_beta,        //!< (lambda/n) Beta(alpha, alpha (lambda - 1))
    exponential,        //!< Exponential with mean 1/n (unbounded)
    lognormal,          //!< Lognormal with mean 1/n (unbounded)
    generalized_pareto, //!< GPD with tail index xi and mean 1/n (unbounded)
};

std::string_view to_string(RenewalKind kind);
RenewalKind renewal_kind_from_string(std::string_view name);

//---------------------------------------------------------------------------//
/*!
 * Distribution of the i.i.d. driving terms.
 *
 * Every kind is calibrated to mean exactly 1/density. Bounded kinds also
 * satisfy 0 < Y <= lambda/density.
 */
struct RenewalSpec
{
    RenewalKind kind{RenewalKind::uniform};
    double density{1};       //!< n: reciprocal of the mean draw
    double lambda{2};        //!< Support parameter (> 1)
    double beta_alpha{2};    //!< First Beta shape for scaled_beta
    double lognormal_s{0.25};  //!< Variance of the underlying Gaussian
    double pareto_xi{0.4};   //!< GPD tail index in [0, 0.5)

    //! Throw invalid_spec if any parameter is out of range.
    void validate() const;
    //! Whether draws are bounded by lambda/density
    bool bounded() const;
    //! Copy with a different density
    RenewalSpec with_density(double n) const;
};

//---------------------------------------------------------------------------//
//! Complete description of the sampling process.
struct ARConfig
{
    double rho{0};        //!< AR coefficient in [0, 1)
    RenewalSpec renewal;  //!< Driving distribution

    void validate() const;
};

//---------------------------------------------------------------------------//
/*!
 * One realization of the sampling process on [0, 1].
 *
 * Holds the M in-range locations S_1 < ... < S_M <= 1 and the first
 * out-of-range location S_{M+1} > 1. The driving draws Y_1..Y_{M+1} are
 * kept so that closed-form identities can be checked against the path.
 */
struct SamplePath
{
    std::vector<double> locations;
    std::vector<double> draws;
    double overshoot{0};

    std::size_t count() const { return locations.size(); }
    //! R_M = 1 - S_M (with S_0 = 0)
    double remainder() const
    {
        return 1 - (locations.empty() ? 0.0 : locations.back());
    }
};

//---------------------------------------------------------------------------//
/*!
 * Sampler for a fixed renewal specification.
 *
 * Holds the standard-library distribution objects so repeated draws do not
 * rebuild them. Exact zeros are rejected and redrawn.
 */
class RenewalSampler
{
  public:
    explicit RenewalSampler(RenewalSpec const& spec);

    double operator()(Rng& rng);

    RenewalSpec const& spec() const { return spec_; }

  private:
    RenewalSpec spec_;
    double scale_{1};
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
    std::gamma_distribution<double> gamma_a_;
    std::gamma_distribution<double> gamma_b_;
    std::lognormal_distribution<double> lognormal_;

    double draw_once(Rng& rng);
};

//---------------------------------------------------------------------------//
//! Bound checks for one path. Empty optionals mean "not applicable".
struct PathReport
{
    std::optional<bool> count_lower_ok;      //!< M > n(1-rho)/lambda - 1
    std::optional<bool> remainder_upper_ok;  //!< R_M <= lambda/(n(1-rho))
    bool increasing{true};                   //!< S_i strictly increasing
    bool brackets_unit{true};                //!< S_M <= 1 < S_{M+1}

    //! True unless some applicable check failed
    bool all_ok() const;
};

//---------------------------------------------------------------------------//
// OPERATIONS
//---------------------------------------------------------------------------//

// Draw one positive driving term
double draw_renewal(RenewalSpec const& spec, Rng& rng);

// Run the AR(1) recursion until the cumulative location exceeds one
SamplePath generate_path(ARConfig const& cfg, Rng& rng);

// Same recursion with a deterministic sequence of driving terms
SamplePath generate_path(ARConfig const& cfg, std::span<double const> draws);

// S_i from the driving terms via the closed-form weights 1 - rho^(i-r+1)
double
closed_form_location(std::span<double const> draws, double rho, std::size_t i);

// Mean squared gap (1/M) sum (S_i - i/M)^2 to the uniform grid
double grid_deviation(SamplePath const& path);

// Evaluate the per-path guarantees for a path generated under cfg
PathReport path_report(SamplePath const& path, ARConfig const& cfg);

//---------------------------------------------------------------------------//
}  // namespace mobsense
