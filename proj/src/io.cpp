//---------------------------------*-C++-*-----------------------------------//
//! \file io.cpp
//---------------------------------------------------------------------------//
#include "mobsense/io.hpp"

#include <array>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "mobsense/error.hpp"

namespace mobsense
{
namespace
{
//! Fetch a typed value, reporting the key on failure.
template<class T>
T get(Json const& j, char const* key, std::string const& context)
{
    std::string where = context.empty() ? key : context + "." + key;
    if (!j.is_object() || !j.contains(key))
    {
        throw Error(ErrorCode::invalid_spec, where + ": missing");
    }
    try
    {
        return j.at(key).get<T>();
    }
    catch (nlohmann::json::exception const& e)
    {
        throw Error(ErrorCode::invalid_spec, where + ": " + e.what());
    }
}

template<class T>
T get_or(Json const& j, char const* key, std::string const& context, T dflt)
{
    return j.contains(key) ? get<T>(j, key, context) : dflt;
}

Json coefficient_array(FourierCoefficients const& f)
{
    Json arr = Json::array();
    for (Complex c : f.coeffs())
    {
        arr.push_back({c.real(), c.imag()});
    }
    return arr;
}
}  // namespace

//---------------------------------------------------------------------------//
Json to_json(FourierCoefficients const& f)
{
    return {{"b", f.bandwidth()}, {"coeffs", coefficient_array(f)}};
}

FourierCoefficients field_from_json(Json const& j)
{
    int b = get<int>(j, "b", "field");
    auto raw = get<std::vector<std::array<double, 2>>>(j, "coeffs", "field");
    validate(b >= 0, "field.b: must be nonnegative");
    validate(raw.size() == static_cast<std::size_t>(2 * b + 1),
             "field.coeffs: expected " + std::to_string(2 * b + 1)
                 + " entries, got " + std::to_string(raw.size()));
    std::vector<Complex> coeffs;
    coeffs.reserve(raw.size());
    for (auto const& [re, im] : raw)
    {
        coeffs.emplace_back(re, im);
    }
    try
    {
        return FourierCoefficients{std::move(coeffs)};
    }
    catch (Error const& e)
    {
        throw Error(e.code(), std::string("field.coeffs: ") + e.what());
    }
}

Json to_json(EstimatedCoefficients const& est)
{
    Json j = to_json(est.coeffs);
    j["m_used"] = est.m_used;
    return j;
}

Json to_json(DistortionReport const& report)
{
    return {{"per_k", report.per_k}, {"total", report.total}};
}

Json to_json(BoundSet const& bounds)
{
    return {{"em_lower", bounds.em_lower},
            {"em_upper", bounds.em_upper},
            {"m_lower", bounds.m_lower},
            {"remainder_upper", bounds.remainder_upper},
            {"density_threshold", bounds.density_threshold},
            {"effective_density", bounds.effective_density}};
}

Json to_json(PathReport const& report)
{
    auto opt = [](std::optional<bool> v) -> Json {
        return v ? Json(*v) : Json("not-applicable");
    };
    return {{"count_lower_ok", opt(report.count_lower_ok)},
            {"remainder_upper_ok", opt(report.remainder_upper_ok)},
            {"increasing", report.increasing},
            {"brackets_unit", report.brackets_unit},
            {"all_ok", report.all_ok()}};
}

Json to_json(SamplePath const& path)
{
    return {{"m", path.count()},
            {"remainder", path.remainder()},
            {"overshoot", path.overshoot},
            {"locations", path.locations}};
}

//---------------------------------------------------------------------------//
RenewalSpec renewal_from_json(Json const& j)
{
    std::string const ctx = "renewal";
    validate(j.is_object(), "renewal: must be an object");
    RenewalSpec spec;
    spec.kind = renewal_kind_from_string(get<std::string>(j, "kind", ctx));
    spec.density = get_or<double>(j, "n", ctx, spec.density);
    spec.lambda = get_or<double>(j, "lambda", ctx, spec.lambda);
    spec.beta_alpha = get_or<double>(j, "alpha", ctx, spec.beta_alpha);
    spec.lognormal_s = get_or<double>(j, "s", ctx, spec.lognormal_s);
    spec.pareto_xi = get_or<double>(j, "xi", ctx, spec.pareto_xi);
    return spec;
}

NoiseSpec noise_from_json(Json const& j)
{
    std::string const ctx = "noise";
    validate(j.is_object(), "noise: must be an object");
    NoiseSpec spec;
    spec.kind = noise_kind_from_string(get<std::string>(j, "kind", ctx));
    spec.variance = get_or<double>(j, "variance", ctx, 0.0);
    spec.validate();
    return spec;
}

ARConfig ar_config_from_json(Json const& j)
{
    ARConfig cfg;
    cfg.rho = get<double>(j, "rho", "");
    cfg.renewal = renewal_from_json(get<Json>(j, "renewal", ""));
    cfg.validate();
    return cfg;
}

FieldSource field_source_from_json(Json const& j)
{
    FieldSource source;
    if (j.is_string())
    {
        validate(j.get<std::string>() == "reference",
                 "field: the only named field is 'reference'");
        source.fixed = reference_field();
        return source;
    }
    validate(j.is_object(), "field: must be an object or 'reference'");
    if (j.contains("coeffs"))
    {
        source.fixed = field_from_json(j);
        return source;
    }
    source.bandwidth = get<int>(j, "b", "field");
    source.seed = get<std::uint64_t>(j, "seed", "field");
    validate(source.bandwidth >= 0, "field.b: must be nonnegative");
    return source;
}

ExperimentConfig experiment_from_json(Json const& j)
{
    validate(j.is_object(), "config: must be a JSON object");
    ExperimentConfig config;
    config.field = field_source_from_json(get<Json>(j, "field", ""));
    config.rho_list = get<std::vector<double>>(j, "rho_list", "");
    config.n_list = get<std::vector<double>>(j, "n_list", "");
    config.renewal = renewal_from_json(get<Json>(j, "renewal", ""));
    config.noise = noise_from_json(get<Json>(j, "noise", ""));
    config.trials = get_or<std::size_t>(j, "trials", "", config.trials);
    config.master_seed = get_or<std::uint64_t>(j, "master_seed", "", 0);
    config.threads = get_or<unsigned int>(j, "threads", "", 0);
    config.validate();
    return config;
}

//---------------------------------------------------------------------------//
void write_path_csv(SamplePath const& path, std::ostream& os)
{
    os << "index,location\n";
    for (std::size_t i = 0; i < path.count(); ++i)
    {
        os << fmt::format("{},{}\n", i + 1, path.locations[i]);
    }
}

Json read_json_file(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw Error(ErrorCode::io, "cannot open '" + path.string() + "'");
    }
    try
    {
        return Json::parse(in);
    }
    catch (nlohmann::json::parse_error const& e)
    {
        throw Error(ErrorCode::invalid_spec,
                    path.string() + ": malformed JSON: " + e.what());
    }
}

void write_text_file(std::filesystem::path const& path,
                     std::string const& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
    {
        throw Error(ErrorCode::io,
                    "cannot open '" + path.string() + "' for writing");
    }
    out << contents;
    if (!out)
    {
        throw Error(ErrorCode::io, "failed writing '" + path.string() + "'");
    }
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
