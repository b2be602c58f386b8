//---------------------------------*-C++-*-----------------------------------//
//! \file mobsense/noise.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "random.hpp"

namespace mobsense
{
//---------------------------------------------------------------------------//
enum class NoiseKind
{
    none,
    gaussian,
    uniform,
};

std::string_view to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(std::string_view name);

//---------------------------------------------------------------------------//
//! Additive i.i.d. zero-mean measurement noise with variance sigma^2.
struct NoiseSpec
{
    NoiseKind kind{NoiseKind::none};
    double variance{0};

    void validate() const;
};

// Add one independent noise draw to every sample value
std::vector<double>
corrupt(std::span<double const> values, NoiseSpec const& spec, Rng& rng);

// In-place variant used by the simulation loop
void corrupt_inplace(std::span<double> values, NoiseSpec const& spec, Rng& rng);

//---------------------------------------------------------------------------//
}  // namespace mobsense
