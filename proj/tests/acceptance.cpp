//---------------------------------*-C++-*-----------------------------------//
//! \file tests/acceptance.cpp
//! \brief Acceptance gate: one PASS/FAIL line per criterion.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "mobsense/bounds.hpp"
#include "mobsense/estimator.hpp"
#include "mobsense/experiment.hpp"
#include "mobsense/field.hpp"
#include "mobsense/io.hpp"
#include "mobsense/random.hpp"
#include "mobsense/sampling.hpp"

using namespace mobsense;

namespace
{
//---------------------------------------------------------------------------//
constexpr double slope_lo = -1.25;
constexpr double slope_hi = -0.75;
constexpr double shallower_margin = 0.2;
constexpr double deviation_slope_lo = -1.3;
constexpr double deviation_slope_hi = -0.7;
constexpr std::size_t mean_paths = 10000;
constexpr std::size_t violation_paths = 100000;
constexpr double mean_se_widening = 5;
constexpr std::size_t closed_form_configs = 10000;
constexpr double closed_form_rel_tol = 1e-10;
constexpr std::size_t deviation_paths = 10000;
constexpr std::size_t parseval_pairs = 100;
constexpr double parseval_tol = 1e-8;
constexpr double constant_tol = 1e-20;
constexpr double riemann_tol = 1e-12;
constexpr double envelope_r2_min = 0.95;

int failures = 0;

void report(char const* id, char const* name, bool ok, std::string detail)
{
    if (!ok)
        ++failures;
    fmt::print("{} [{}] {}: {}\n", ok ? "PASS" : "FAIL", id, name, detail);
    std::fflush(stdout);
}

std::vector<double> const dyadic_grid{
    1024, 2048, 4096, 8192, 16384, 32768, 65536};

ExperimentConfig load_config(char const* name)
{
    auto path = std::filesystem::path(MOBSENSE_SOURCE_DIR) / "configs" / name;
    return experiment_from_json(read_json_file(path));
}

double subgrid_slope(DistortionCurve const& curve, double rho, double n_max)
{
    std::vector<double> ns, ds;
    for (auto const& p : curve.series(rho))
    {
        if (p.n <= n_max)
        {
            ns.push_back(p.n);
            ds.push_back(p.mean_distortion);
        }
    }
    return fit_loglog_slope(ns, ds);
}

double window_start(double rho, double lambda)
{
    return std::max(dyadic_grid.front(), 2 * density_threshold(rho, lambda));
}

//---------------------------------------------------------------------------//
// Criteria 1 and 2 (and the envelope fit) share one sweep
double uniform_half_slope = std::nan("");

void check_slopes()
{
    auto config = load_config("paper-fig-b.json");
    config.rho_list = {0.2, 0.5, 0.99};
    auto curve = monte_carlo(config);
    double const lambda = config.renewal.lambda;

    bool ok = true;
    std::string detail;
    for (double rho : {0.5, 0.2})
    {
        double s = curve_slope(curve, rho, window_start(rho, lambda));
        ok = ok && s >= slope_lo && s <= slope_hi;
        detail += fmt::format("rho={} slope={:.4f} ", rho, s);
        if (rho == 0.5)
            uniform_half_slope = s;
    }
    report("1", "distortion slope near -1", ok,
           detail + fmt::format("band=[{}, {}]", slope_lo, slope_hi));

    double const n_max = 8192;
    double steep = subgrid_slope(curve, 0.2, n_max);
    double flat = subgrid_slope(curve, 0.99, n_max);
    report("2", "large-rho deviation", flat - steep >= shallower_margin,
           fmt::format("rho=0.99 slope={:.4f} rho=0.2 slope={:.4f} "
                       "difference={:.4f} (need >= {})",
                       flat, steep, flat - steep, shallower_margin));

    std::vector<double> ns, ds;
    for (auto const& p : curve.series(0.5))
    {
        ns.push_back(p.n);
        ds.push_back(p.mean_distortion);
    }
    auto fit = fit_envelope(0.5, ns, ds);
    report("1b", "envelope fit on rho=0.5", fit.r_squared >= envelope_r2_min,
           fmt::format("c={:.4g} c'={:.4g} R^2={:.4f} (need >= {})", fit.c,
                       fit.c_prime, fit.r_squared, envelope_r2_min));

    std::size_t violations = 0;
    for (auto const& p : curve.points)
        violations += p.bound_violations + p.failed_trials;
    report("1c", "bound surveillance on sweep", violations == 0,
           fmt::format("violations+failed={}", violations));
}

//---------------------------------------------------------------------------//
void check_heavy_tail()
{
    auto config = load_config("assumption-violation.json");
    auto curve = monte_carlo(config);
    double s = curve_slope(curve, 0.5, window_start(0.5, 2));
    std::size_t failed = 0;
    for (auto const& p : curve.points)
        failed += p.failed_trials;
    report("3", "heavy-tail slope deviation",
           s - uniform_half_slope >= shallower_margin,
           fmt::format("pareto xi={} slope={:.4f} uniform slope={:.4f} "
                       "difference={:.4f} (need >= {}) failed_trials={}",
                       config.renewal.pareto_xi, s, uniform_half_slope,
                       s - uniform_half_slope, shallower_margin, failed));
}

//---------------------------------------------------------------------------//
void check_threshold()
{
    double value = compute_bounds(0.9, 2, 1).density_threshold;
    // Independent arithmetic: (2 / 0.1) (1 - 2 / ln 0.9)
    double const oracle = 20.0 * (1.0 - 2.0 / std::log(0.9));
    bool ok = value >= 395 && value <= 405 && std::abs(value - oracle) <= 1e-6;
    report("4", "density threshold at rho=0.9", ok,
           fmt::format("value={:.9f} oracle={:.9f}", value, oracle));

    double eff = compute_bounds(0.99, 2, 1e4).effective_density;
    report("5", "effective density at rho=0.99", eff == 100.0,
           fmt::format("value={:.17g}", eff));
}

//---------------------------------------------------------------------------//
void check_lemma()
{
    double const lambda = 2;
    bool ok = true;
    std::string detail;
    std::size_t const paths = std::max(mean_paths, violation_paths);
    std::size_t config_index = 0;
    for (double rho : {0.2, 0.5, 0.9})
    {
        for (double n : {1e3, 1e4})
        {
            ARConfig cfg{rho, RenewalSpec{RenewalKind::uniform, n, lambda}};
            double sum = 0, sum_sq = 0;
            std::size_t violations = 0;
            for (std::size_t t = 0; t < paths; ++t)
            {
                Rng rng = make_stream(6, {config_index, t});
                auto path = generate_path(cfg, rng);
                auto m = static_cast<double>(path.count());
                sum += m;
                sum_sq += m * m;
                if (!path_report(path, cfg).all_ok())
                    ++violations;
            }
            auto const count = static_cast<double>(paths);
            double mean = sum / count;
            double var = (sum_sq - count * mean * mean) / (count - 1);
            double se = std::sqrt(std::max(var, 0.0) / count);
            auto b = compute_bounds(rho, lambda, n);
            bool inside = mean >= b.em_lower - mean_se_widening * se
                          && mean <= b.em_upper + mean_se_widening * se;
            ok = ok && inside && violations == 0;
            detail += fmt::format(
                "(rho={} n={} mean={:.2f} in [{:.2f}, {:.2f}] viol={}) ", rho,
                n, mean, b.em_lower, b.em_upper, violations);
            ++config_index;
        }
    }
    report("6", "sample-count lemma bounds", ok,
           fmt::format("{} paths per config; {}", paths, detail));
}

//---------------------------------------------------------------------------//
void check_closed_form()
{
    Rng rng = make_stream(7, {});
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> kind_pick(0, 4);
    double worst = 0;
    for (std::size_t c = 0; c < closed_form_configs; ++c)
    {
        ARConfig cfg;
        cfg.rho = c % 10 == 0 ? 0.0 : 0.999 * unit(rng);
        cfg.renewal.kind = static_cast<RenewalKind>(kind_pick(rng));
        cfg.renewal.density = 1 + 200 * unit(rng);
        if (cfg.renewal.kind == RenewalKind::scaled_beta)
            cfg.renewal.lambda = 1.5 + 3 * unit(rng);
        auto path = generate_path(cfg, rng);
        std::vector<double> all = path.locations;
        all.push_back(path.overshoot);
        for (std::size_t i = 1; i <= all.size() && i <= path.draws.size(); ++i)
        {
            double closed = closed_form_location(path.draws, cfg.rho, i);
            double rec = all[i - 1];
            worst = std::max(worst, std::abs(closed - rec) / std::abs(rec));
        }
    }
    report("7", "closed-form location identity", worst <= closed_form_rel_tol,
           fmt::format("{} configs, worst relative error={:.3g}",
                       closed_form_configs, worst));
}

//---------------------------------------------------------------------------//
void check_grid_deviation()
{
    bool ok = true;
    std::string detail;
    std::size_t kind_index = 0;
    for (auto kind : {RenewalKind::uniform, RenewalKind::scaled_beta})
    {
        std::vector<double> means;
        for (std::size_t ni = 0; ni < dyadic_grid.size(); ++ni)
        {
            ARConfig cfg{0.5, RenewalSpec{kind, dyadic_grid[ni]}};
            double sum = 0;
            for (std::size_t t = 0; t < deviation_paths; ++t)
            {
                Rng rng = make_stream(8, {kind_index, ni, t});
                sum += grid_deviation(generate_path(cfg, rng));
            }
            means.push_back(sum / static_cast<double>(deviation_paths));
        }
        double s = fit_loglog_slope(dyadic_grid, means);
        ok = ok && s >= deviation_slope_lo && s <= deviation_slope_hi;
        detail += fmt::format("{} slope={:.4f} ", to_string(kind), s);
        ++kind_index;
    }
    report("8", "grid-deviation scaling", ok,
           detail
               + fmt::format("band=[{}, {}]", deviation_slope_lo,
                             deviation_slope_hi));
}

//---------------------------------------------------------------------------//
void check_parseval()
{
    Rng rng = make_stream(9, {});
    std::uniform_int_distribution<int> pick_b(0, 8);
    double worst = 0;
    for (std::size_t p = 0; p < parseval_pairs; ++p)
    {
        int b = pick_b(rng);
        auto truth = random_field(b, rng);
        auto est = random_field(b, rng).scaled(0.5 + std::abs(truth[0]));
        double coeff = coefficient_distortion(est, truth).total;
        double integral = integral_distortion(est, truth);
        worst = std::max(worst, std::abs(coeff - integral));
    }
    report("9", "Parseval identity", worst <= parseval_tol,
           fmt::format("{} pairs, worst |difference|={:.3g}", parseval_pairs,
                       worst));
}

//---------------------------------------------------------------------------//
void check_exactness()
{
    // Constant field without noise
    std::vector<Complex> dc{Complex(0.7, 0)};
    auto constant = FourierCoefficients::from_nonnegative(dc);
    double worst_dc = 0;
    for (std::size_t t = 0; t < 100; ++t)
    {
        Rng rng = make_stream(10, {t});
        ARConfig cfg{0.5, RenewalSpec{RenewalKind::uniform, 1000}};
        auto trial = run_trial(constant, cfg, NoiseSpec{}, rng);
        worst_dc = std::max(worst_dc, trial.distortion);
    }

    // Exact-grid samples against a directly computed Riemann sum
    int const b = 3;
    std::size_t const m = 64;
    auto field = reference_field();
    std::vector<double> samples(m);
    for (std::size_t i = 1; i <= m; ++i)
        samples[i - 1] = evaluate(field, static_cast<double>(i) / m);
    auto est = estimate(samples, b);

    double worst_riemann = 0, worst_alias = 0;
    for (int k = -b; k <= b; ++k)
    {
        std::complex<long double> sum = 0;
        for (std::size_t i = 1; i <= m; ++i)
        {
            long double phase = -2 * std::numbers::pi_v<long double> * k
                                * static_cast<long double>(i % m) / m;
            sum += static_cast<long double>(samples[i - 1])
                   * std::polar(1.0L, phase);
        }
        Complex riemann(static_cast<double>(sum.real() / m),
                        static_cast<double>(sum.imag() / m));
        worst_riemann = std::max(worst_riemann,
                                 std::abs(riemann - est.coeffs[k]));
        worst_alias = std::max(worst_alias, std::abs(riemann - field[k]));
    }
    double const alias_bound = 4 * b * std::numbers::pi / m;
    bool ok = worst_dc <= constant_tol && worst_riemann <= riemann_tol
              && worst_alias <= alias_bound;
    report("10", "exactness degeneracies", ok,
           fmt::format("constant distortion={:.3g} riemann error={:.3g} "
                       "|A_R-a|={:.3g} (bound {:.4f})",
                       worst_dc, worst_riemann, worst_alias, alias_bound));
}

//---------------------------------------------------------------------------//
void check_determinism()
{
    auto config = load_config("paper-fig-b.json");
    config.n_list = {1024, 4096};
    config.trials = 50;
    auto render = [&config] {
        std::ostringstream os;
        write_csv(monte_carlo(config), os);
        return os.str();
    };
    std::string first = render();
    std::string second = render();
    config.threads = 1;
    std::string serial = render();
    report("11", "determinism", first == second && first == serial,
           fmt::format("{} CSV bytes, repeat identical={}, "
                       "single-thread identical={}",
                       first.size(), first == second, first == serial));
}

//---------------------------------------------------------------------------//
}  // namespace

int main()
{
    auto start = std::chrono::steady_clock::now();
    try
    {
        check_slopes();
        check_heavy_tail();
        check_threshold();
        check_lemma();
        check_closed_form();
        check_grid_deviation();
        check_parseval();
        check_exactness();
        check_determinism();
    }
    catch (std::exception const& e)
    {
        fmt::print("FAIL [-] unexpected error: {}\n", e.what());
        ++failures;
    }
    std::chrono::duration<double> elapsed
        = std::chrono::steady_clock::now() - start;
    fmt::print("{} criteria failed ({:.1f} s)\n", failures, elapsed.count());
    return failures == 0 ? 0 : 1;
}
