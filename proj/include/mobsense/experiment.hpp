//---------------------------------*-C++-*-----------------------------------//
//! \file mobsense/experiment.hpp
//! Seeded Monte Carlo sweeps of the sample -> estimate -> score pipeline.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"
#include "noise.hpp"
#include "random.hpp"
#include "sampling.hpp"

namespace mobsense
{
//---------------------------------------------------------------------------//
//! Where the true field of an experiment comes from.
struct FieldSource
{
    std::optional<FourierCoefficients> fixed;  //!< Use as-is when present
    int bandwidth{3};                          //!< Otherwise: random field
    std::uint64_t seed{0};

    FourierCoefficients resolve() const;
};

//---------------------------------------------------------------------------//
/*!
 * Full description of a distortion sweep.
 *
 * The renewal template carries kind, lambda and shape parameters; its
 * density is replaced by each entry of n_list.
 */
struct ExperimentConfig
{
    FieldSource field;
    std::vector<double> rho_list;
    std::vector<double> n_list;
    RenewalSpec renewal;
    NoiseSpec noise;
    std::size_t trials{1000};
    std::uint64_t master_seed{0};
    unsigned int threads{0};  //!< Worker count; 0 selects hardware threads

    void validate() const;
};

//---------------------------------------------------------------------------//
//! Outcome of one pipeline run.
struct TrialResult
{
    double distortion{0};
    std::size_t count{0};  //!< Sample count M
    bool failed{false};    //!< M = 0: nothing to estimate from
    bool bound_violation{false};
};

//! Aggregate over all trials at one (rho, n) grid point.
struct DistortionPoint
{
    double rho{};
    double n{};
    double lambda{};
    RenewalKind renewal_kind{RenewalKind::uniform};
    double noise_variance{};
    std::size_t trials{};
    double mean_distortion{};
    double stderr_distortion{};
    double mean_count{};
    std::size_t failed_trials{};
    std::size_t bound_violations{};
};

struct RhoSlope
{
    double rho{};
    double slope{};
};

struct DistortionCurve
{
    std::vector<DistortionPoint> points;
    std::vector<RhoSlope> slopes;  //!< Log-log slope per rho over all n
    std::string field_digest;

    //! Points for one rho, in n order
    std::vector<DistortionPoint> series(double rho) const;
};

//---------------------------------------------------------------------------//
// OPERATIONS
//---------------------------------------------------------------------------//

// Path -> field values -> noise -> estimate -> coefficient distortion
TrialResult run_trial(FourierCoefficients const& field,
                      ARConfig const& cfg,
                      NoiseSpec const& noise,
                      Rng& rng);

// Run every (rho, n) grid point and aggregate
DistortionCurve monte_carlo(ExperimentConfig const& config);

// OLS slope of log10(ds) against log10(ns)
double fit_loglog_slope(std::span<double const> ns, std::span<double const> ds);

// Slope of the curve's series for rho, restricted to n >= n_min
double curve_slope(DistortionCurve const& curve, double rho, double n_min = 0);

// Stable 64-bit digest of the coefficient values, as hex
std::string field_digest(FourierCoefficients const& field);

//---------------------------------------------------------------------------//
// EXPORT
//---------------------------------------------------------------------------//

enum class ExportFormat
{
    csv,
    json,
    svg,
};

ExportFormat export_format_from_string(std::string const& name);

void write_csv(DistortionCurve const& curve, std::ostream& os);
std::vector<DistortionPoint> read_csv(std::istream& is);
void write_json(DistortionCurve const& curve, std::ostream& os);
void write_svg(DistortionCurve const& curve, std::ostream& os);

// Write the curve to a file in the requested format
void export_curve(DistortionCurve const& curve,
                  ExportFormat format,
                  std::filesystem::path const& path);

//---------------------------------------------------------------------------//
}  // namespace mobsense
