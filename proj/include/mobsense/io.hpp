//---------------------------------*-C++-*-----------------------------------//
//! \file mobsense/io.hpp
//! JSON and CSV representations of the library's value types.
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <iosfwd>

#include "json.hpp"

#include "bounds.hpp"
#include "estimator.hpp"
#include "experiment.hpp"
#include "field.hpp"
#include "noise.hpp"
#include "sampling.hpp"

namespace mobsense
{
using Json = nlohmann::json;

//---------------------------------------------------------------------------//
// Field: {"b": int, "coeffs": [[re, im], ...]} for k = -b..b
Json to_json(FourierCoefficients const& f);
FourierCoefficients field_from_json(Json const& j);

// Estimate: field layout plus "m_used"
Json to_json(EstimatedCoefficients const& est);
// {"per_k": [...], "total": float}
Json to_json(DistortionReport const& report);
Json to_json(BoundSet const& bounds);
Json to_json(PathReport const& report);
// {"m", "remainder", "overshoot", "locations": [...]}
Json to_json(SamplePath const& path);

//---------------------------------------------------------------------------//
// Configuration parsing; errors name the offending key
RenewalSpec renewal_from_json(Json const& j);
NoiseSpec noise_from_json(Json const& j);
ARConfig ar_config_from_json(Json const& j);
FieldSource field_source_from_json(Json const& j);
ExperimentConfig experiment_from_json(Json const& j);

//---------------------------------------------------------------------------//
// Path CSV with columns index, location
void write_path_csv(SamplePath const& path, std::ostream& os);

Json read_json_file(std::filesystem::path const& path);
void write_text_file(std::filesystem::path const& path,
                     std::string const& contents);

//---------------------------------------------------------------------------//
}  // namespace mobsense
