//---------------------------------*-C++-*-----------------------------------//
//! \file noise.cpp
//---------------------------------------------------------------------------//
#include "mobsense/noise.hpp"

#include <cmath>
#include <random>
#include <string>

#include "mobsense/error.hpp"

namespace mobsense
{
//---------------------------------------------------------------------------//
std::string_view to_string(NoiseKind kind)
{
    switch (kind)
    {
        case NoiseKind::none:
            return "none";
        case NoiseKind::gaussian:
            return "gaussian";
        case NoiseKind::uniform:
            return "uniform";
    }
    return "unknown";
}

NoiseKind noise_kind_from_string(std::string_view name)
{
    for (auto kind : {NoiseKind::none, NoiseKind::gaussian, NoiseKind::uniform})
    {
        if (to_string(kind) == name)
        {
            return kind;
        }
    }
    throw Error(ErrorCode::invalid_spec,
                "noise.kind: unknown noise kind '" + std::string(name) + "'");
}

//---------------------------------------------------------------------------//
void NoiseSpec::validate() const
{
    mobsense::validate(std::isfinite(variance) && variance >= 0,
                       "noise.variance: must be finite and nonnegative");
    mobsense::validate(kind != NoiseKind::none || variance == 0,
                       "noise.variance: kind 'none' requires variance 0");
}

//---------------------------------------------------------------------------//
void corrupt_inplace(std::span<double> values, NoiseSpec const& spec, Rng& rng)
{
    spec.validate();
    switch (spec.kind)
    {
        case NoiseKind::none:
            return;
        case NoiseKind::gaussian: {
            std::normal_distribution<double> dist(0.0,
                                                  std::sqrt(spec.variance));
            for (double& v : values)
            {
                v += dist(rng);
            }
            return;
        }
        case NoiseKind::uniform: {
            // Var(Uniform[-a, a]) = a^2 / 3
            double half_width = std::sqrt(3 * spec.variance);
            std::uniform_real_distribution<double> dist(-half_width,
                                                        half_width);
            for (double& v : values)
            {
                v += dist(rng);
            }
            return;
        }
    }
}

std::vector<double>
corrupt(std::span<double const> values, NoiseSpec const& spec, Rng& rng)
{
    std::vector<double> result(values.begin(), values.end());
    corrupt_inplace(result, spec, rng);
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
