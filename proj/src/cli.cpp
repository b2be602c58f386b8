//---------------------------------*-C++-*-----------------------------------//
//! \file cli.cpp
//---------------------------------------------------------------------------//
#include "mobsense/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "mobsense/bounds.hpp"
#include "mobsense/error.hpp"
#include "mobsense/estimator.hpp"
#include "mobsense/experiment.hpp"
#include "mobsense/field.hpp"
#include "mobsense/io.hpp"
#include "mobsense/sampling.hpp"

namespace mobsense
{
namespace
{
namespace fs = std::filesystem;

//! Resolve a relative output path against the output-directory variable.
fs::path output_path(std::string const& name)
{
    fs::path p{name};
    if (p.is_absolute())
    {
        return p;
    }
    if (char const* dir = std::getenv(output_dir_env); dir && *dir)
    {
        return fs::path{dir} / p;
    }
    return p;
}

void emit(std::string const& contents,
          std::optional<std::string> const& out_path,
          std::ostream& out)
{
    if (out_path)
    {
        write_text_file(output_path(*out_path), contents);
    }
    else
    {
        out << contents;
    }
}

//! Read whitespace- or comma-separated positive numbers, or a JSON array.
std::vector<double> read_draws(fs::path const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw Error(ErrorCode::io, "cannot open '" + path.string() + "'");
    }
    std::string text{std::istreambuf_iterator<char>(in), {}};
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
    {
        try
        {
            return Json::parse(text).get<std::vector<double>>();
        }
        catch (nlohmann::json::exception const& e)
        {
            throw Error(ErrorCode::invalid_spec,
                        "forced draws: " + std::string(e.what()));
        }
    }
    for (char& c : text)
    {
        if (c == ',')
            c = ' ';
    }
    std::istringstream is(text);
    std::vector<double> draws;
    double v;
    while (is >> v)
    {
        draws.push_back(v);
    }
    validate(is.eof(), "forced draws: '" + path.string()
                           + "' contains a non-numeric entry");
    return draws;
}

//---------------------------------------------------------------------------//
struct GenerateFieldArgs
{
    int b{3};
    std::uint64_t seed{0};
    std::optional<std::string> out;
};

int generate_field(GenerateFieldArgs const& a, std::ostream& out)
{
    Rng rng = make_stream(a.seed, {});
    auto field = random_field(a.b, rng);
    emit(to_json(field).dump(2) + "\n", a.out, out);
    return exit_success;
}

//---------------------------------------------------------------------------//
struct SamplePathArgs
{
    std::optional<std::string> config;
    std::optional<double> rho;
    std::optional<double> n;
    std::optional<double> lambda;
    std::optional<std::string> kind;
    std::uint64_t seed{0};
    std::optional<std::string> forced;
    std::optional<std::string> out;
    std::optional<std::string> json_out;
};

int sample_path(SamplePathArgs const& a, std::ostream& out)
{
    ARConfig cfg;
    cfg.renewal.density = 100;
    if (a.config)
    {
        cfg = ar_config_from_json(read_json_file(*a.config));
    }
    if (a.rho)
        cfg.rho = *a.rho;
    if (a.n)
        cfg.renewal.density = *a.n;
    if (a.lambda)
        cfg.renewal.lambda = *a.lambda;
    if (a.kind)
        cfg.renewal.kind = renewal_kind_from_string(*a.kind);
    cfg.validate();

    SamplePath path;
    if (a.forced)
    {
        auto draws = read_draws(*a.forced);
        path = generate_path(cfg, draws);
    }
    else
    {
        Rng rng = make_stream(a.seed, {});
        path = generate_path(cfg, rng);
    }

    if (a.out)
    {
        std::ostringstream csv;
        write_path_csv(path, csv);
        write_text_file(output_path(*a.out), csv.str());
    }
    Json doc = to_json(path);
    doc["report"] = to_json(path_report(path, cfg));
    doc["rho"] = cfg.rho;
    doc["renewal_kind"] = to_string(cfg.renewal.kind);
    doc["n"] = cfg.renewal.density;
    doc["lambda"] = cfg.renewal.lambda;
    if (!path.locations.empty())
    {
        doc["grid_deviation"] = grid_deviation(path);
    }
    if (a.json_out)
    {
        write_text_file(output_path(*a.json_out), doc.dump(2) + "\n");
    }
    // The location list can be long; keep the terminal summary compact
    doc.erase("locations");
    out << doc.dump(2) << '\n';
    return exit_success;
}

//---------------------------------------------------------------------------//
struct VerifyBoundsArgs
{
    double rho{0};
    double lambda{2};
    double n{1000};
    bool json{false};
};

int verify_bounds(VerifyBoundsArgs const& a, std::ostream& out)
{
    auto bounds = compute_bounds(a.rho, a.lambda, a.n);
    if (a.json)
    {
        out << to_json(bounds).dump(2) << '\n';
        return exit_success;
    }
    out << fmt::format("rho = {}, lambda = {}, n = {}\n", a.rho, a.lambda, a.n);
    auto row = [&out](std::string_view name, double value) {
        out << fmt::format("  {:<20} {:>16.6f}\n", name, value);
    };
    row("E[M] lower", bounds.em_lower);
    row("E[M] upper", bounds.em_upper);
    row("M lower (per path)", bounds.m_lower);
    row("R_M upper", bounds.remainder_upper);
    row("density threshold", bounds.density_threshold);
    row("effective density", bounds.effective_density);
    return exit_success;
}

//---------------------------------------------------------------------------//
struct SimulateArgs
{
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::size_t grid{512};
};

/*!
 * Reconstruct the field from single realizations at each density.
 *
 * Writes x, the true field, and one column per (n, trial) realization, and
 * prints the per-realization distortions.
 */
int simulate(SimulateArgs const& a, std::ostream& out)
{
    auto config = experiment_from_json(read_json_file(a.config));
    if (a.seed)
        config.master_seed = *a.seed;
    validate(a.grid >= 2, "--grid: must be at least 2");
    auto field = config.field.resolve();
    double const rho = config.rho_list.front();

    std::vector<std::string> headers{"x", "g"};
    std::vector<EstimatedCoefficients> estimates;
    Json summary = Json::array();
    for (std::size_t ni = 0; ni < config.n_list.size(); ++ni)
    {
        ARConfig cfg{rho, config.renewal.with_density(config.n_list[ni])};
        cfg.validate();
        for (std::size_t t = 0; t < config.trials; ++t)
        {
            Rng rng = make_stream(config.master_seed, {0, ni, t});
            auto path = generate_path(cfg, rng);
            std::vector<double> readings;
            readings.reserve(path.count());
            for (double s : path.locations)
            {
                readings.push_back(evaluate(field, s));
            }
            corrupt_inplace(readings, config.noise, rng);
            if (readings.empty())
            {
                summary.push_back({{"n", config.n_list[ni]},
                                   {"trial", t},
                                   {"m", 0},
                                   {"distortion", nullptr}});
                continue;
            }
            auto est = estimate(readings, field.bandwidth());
            summary.push_back(
                {{"n", config.n_list[ni]},
                 {"trial", t},
                 {"m", est.m_used},
                 {"distortion", coefficient_distortion(est, field).total}});
            headers.push_back(fmt::format("n={}#{}", config.n_list[ni], t));
            estimates.push_back(std::move(est));
        }
    }

    std::ostringstream csv;
    for (std::size_t h = 0; h < headers.size(); ++h)
    {
        csv << (h ? "," : "") << headers[h];
    }
    csv << '\n';
    for (std::size_t j = 0; j < a.grid; ++j)
    {
        double x = static_cast<double>(j) / static_cast<double>(a.grid - 1);
        csv << fmt::format("{},{}", x, evaluate(field, x));
        for (auto const& est : estimates)
        {
            csv << fmt::format(",{}", reconstruct(est, x));
        }
        csv << '\n';
    }
    emit(csv.str(), a.out, out);
    if (a.out)
    {
        out << summary.dump(2) << '\n';
    }
    return exit_success;
}

//---------------------------------------------------------------------------//
struct SweepArgs
{
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<unsigned int> threads;
    std::optional<std::string> csv;
    std::optional<std::string> json;
    std::optional<std::string> svg;
};

int sweep(SweepArgs const& a, std::ostream& out)
{
    auto config = experiment_from_json(read_json_file(a.config));
    if (a.seed)
        config.master_seed = *a.seed;
    if (a.trials)
        config.trials = *a.trials;
    if (a.threads)
        config.threads = *a.threads;
    config.validate();

    auto curve = monte_carlo(config);

    std::string csv_name = a.csv.value_or(
        (a.json || a.svg) ? std::string{} : std::string{"sweep.csv"});
    if (!csv_name.empty())
        export_curve(curve, ExportFormat::csv, output_path(csv_name));
    if (a.json)
        export_curve(curve, ExportFormat::json, output_path(*a.json));
    if (a.svg)
        export_curve(curve, ExportFormat::svg, output_path(*a.svg));

    out << fmt::format("field digest {}\n", curve.field_digest);
    for (auto const& s : curve.slopes)
    {
        out << fmt::format("rho={} log-log slope={:.4f}\n", s.rho, s.slope);
    }
    std::size_t violations = 0, failed = 0;
    for (auto const& p : curve.points)
    {
        violations += p.bound_violations;
        failed += p.failed_trials;
    }
    out << fmt::format("bound violations={} failed trials={}\n",
                       violations,
                       failed);
    return exit_success;
}

}  // namespace

//---------------------------------------------------------------------------//
int run_cli(std::vector<std::string> const& args,
            std::ostream& out,
            std::ostream& err)
{
    CLI::App app{"Location-unaware field estimation from AR(1) mobile sampling"};
    app.require_subcommand(1);

    GenerateFieldArgs gf;
    auto* gf_cmd = app.add_subcommand("generate-field",
                                      "Draw a random normalized field");
    gf_cmd->add_option("--b", gf.b, "Bandwidth index")->required();
    gf_cmd->add_option("--seed", gf.seed, "Random seed");
    gf_cmd->add_option("--out", gf.out, "Output JSON path (default stdout)");

    SamplePathArgs sp;
    auto* sp_cmd = app.add_subcommand("sample-path",
                                      "Generate one sampling path and check "
                                      "its bounds");
    sp_cmd->add_option("--config", sp.config,
                       "JSON file {\"rho\", \"renewal\": {...}}");
    sp_cmd->add_option("--rho", sp.rho, "AR coefficient override");
    sp_cmd->add_option("--n", sp.n, "Sampling density override");
    sp_cmd->add_option("--lambda", sp.lambda, "Support parameter override");
    sp_cmd->add_option("--kind", sp.kind, "Renewal kind override");
    sp_cmd->add_option("--seed", sp.seed, "Random seed");
    sp_cmd->add_option("--forced-draws", sp.forced,
                       "File of driving terms used instead of the RNG");
    sp_cmd->add_option("--out", sp.out, "Path CSV (index,location)");
    sp_cmd->add_option("--json", sp.json_out, "Full path + report JSON");

    VerifyBoundsArgs vb;
    auto* vb_cmd = app.add_subcommand("verify-bounds",
                                      "Print sample-count and density bounds");
    vb_cmd->add_option("--rho", vb.rho, "AR coefficient")->required();
    vb_cmd->add_option("--lambda", vb.lambda, "Support parameter")
        ->capture_default_str();
    vb_cmd->add_option("--n", vb.n, "Sampling density")->capture_default_str();
    vb_cmd->add_flag("--json", vb.json, "Emit JSON instead of a table");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate",
                                       "Reconstruct the field from single "
                                       "realizations");
    sim_cmd->add_option("--config", sim.config, "Experiment JSON")->required();
    sim_cmd->add_option("--seed", sim.seed, "Master seed override");
    sim_cmd->add_option("--out", sim.out, "Reconstruction CSV (default stdout)");
    sim_cmd->add_option("--grid", sim.grid, "Evaluation points")
        ->capture_default_str();

    SweepArgs sw;
    auto* sw_cmd = app.add_subcommand("sweep", "Monte Carlo distortion sweep");
    sw_cmd->add_option("--config", sw.config, "Experiment JSON")->required();
    sw_cmd->add_option("--seed", sw.seed, "Master seed override");
    sw_cmd->add_option("--trials", sw.trials, "Trials per grid point override");
    sw_cmd->add_option("--threads", sw.threads, "Worker threads (0 = auto)");
    sw_cmd->add_option("--csv", sw.csv, "CSV output path");
    sw_cmd->add_option("--json", sw.json, "JSON output path");
    sw_cmd->add_option("--svg", sw.svg, "SVG log-log plot path");

    std::vector<char const*> argv;
    argv.reserve(args.size());
    for (auto const& a : args)
    {
        argv.push_back(a.c_str());
    }
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::ParseError const& e)
    {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_config_error;
    }

    try
    {
        if (gf_cmd->parsed())
            return generate_field(gf, out);
        if (sp_cmd->parsed())
            return sample_path(sp, out);
        if (vb_cmd->parsed())
            return verify_bounds(vb, out);
        if (sim_cmd->parsed())
            return simulate(sim, out);
        if (sw_cmd->parsed())
            return sweep(sw, out);
    }
    catch (Error const& e)
    {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::invalid_spec ? exit_config_error
                                                   : exit_runtime_error;
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_runtime_error;
    }
    return exit_config_error;
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
