//---------------------------------*-C++-*-----------------------------------//
//! \file experiment.cpp
//---------------------------------------------------------------------------//
#include "mobsense/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <iterator>
#include <limits>
#include <mutex>
#include <thread>

#include "mobsense/error.hpp"
#include "mobsense/estimator.hpp"

namespace mobsense
{
//---------------------------------------------------------------------------//
FourierCoefficients FieldSource::resolve() const
{
    if (fixed)
    {
        return *fixed;
    }
    Rng rng = make_stream(seed, {});
    return random_field(bandwidth, rng);
}

//---------------------------------------------------------------------------//
void ExperimentConfig::validate() const
{
    mobsense::validate(!rho_list.empty(), "rho_list: must not be empty");
    mobsense::validate(!n_list.empty(), "n_list: must not be empty");
    for (std::size_t i = 0; i < rho_list.size(); ++i)
    {
        mobsense::validate(rho_list[i] >= 0 && rho_list[i] < 1,
                           "rho_list[" + std::to_string(i)
                               + "]: must lie in [0, 1), got "
                               + std::to_string(rho_list[i]));
    }
    for (std::size_t i = 0; i < n_list.size(); ++i)
    {
        mobsense::validate(std::isfinite(n_list[i]) && n_list[i] > 0,
                           "n_list[" + std::to_string(i)
                               + "]: density must be positive");
        mobsense::validate(i == 0 || n_list[i] > n_list[i - 1],
                           "n_list: densities must be strictly increasing");
    }
    mobsense::validate(trials >= 1, "trials: must be at least 1");
    if (!field.fixed)
    {
        mobsense::validate(field.bandwidth >= 0,
                           "field.b: bandwidth must be nonnegative");
    }
    renewal.with_density(n_list.front()).validate();
    noise.validate();
}

//---------------------------------------------------------------------------//
std::vector<DistortionPoint> DistortionCurve::series(double rho) const
{
    std::vector<DistortionPoint> result;
    std::copy_if(points.begin(),
                 points.end(),
                 std::back_inserter(result),
                 [rho](DistortionPoint const& p) { return p.rho == rho; });
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
        return a.n < b.n;
    });
    return result;
}

//---------------------------------------------------------------------------//
TrialResult run_trial(FourierCoefficients const& field,
                      ARConfig const& cfg,
                      NoiseSpec const& noise,
                      Rng& rng)
{
    TrialResult result;
    SamplePath path = generate_path(cfg, rng);
    result.count = path.count();
    result.bound_violation = !path_report(path, cfg).all_ok();
    if (path.count() == 0)
    {
        result.failed = true;
        return result;
    }

    std::vector<double> readings(path.count());
    std::transform(path.locations.begin(),
                   path.locations.end(),
                   readings.begin(),
                   [&field](double x) { return evaluate(field, x); });
    corrupt_inplace(readings, noise, rng);

    auto est = estimate(readings, field.bandwidth());
    result.distortion = coefficient_distortion(est, field).total;
    return result;
}

//---------------------------------------------------------------------------//
namespace
{
/*!
 * Run trials [0, count) across worker threads.
 *
 * Results land in a slot per trial index, so the subsequent reduction is
 * independent of scheduling.
 */
template<class F>
std::vector<TrialResult>
run_parallel(std::size_t count, unsigned int threads, F&& trial)
{
    std::vector<TrialResult> results(count);
    unsigned int workers = threads != 0 ? threads
                                        : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned int>(
        workers, 1, static_cast<unsigned int>(std::max<std::size_t>(count, 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++)
        {
            try
            {
                results[i] = trial(i);
            }
            catch (...)
            {
                std::lock_guard lock{failure_mutex};
                if (!failure)
                {
                    failure = std::current_exception();
                }
                next = count;
            }
        }
    };

    if (workers == 1)
    {
        work();
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned int w = 0; w < workers; ++w)
        {
            pool.emplace_back(work);
        }
    }
    if (failure)
    {
        std::rethrow_exception(failure);
    }
    return results;
}

DistortionPoint aggregate(std::span<TrialResult const> results)
{
    DistortionPoint point;
    point.trials = results.size();
    std::size_t ok = 0;
    double sum = 0;
    double count_sum = 0;
    for (auto const& r : results)
    {
        count_sum += static_cast<double>(r.count);
        point.bound_violations += r.bound_violation ? 1 : 0;
        if (r.failed)
        {
            ++point.failed_trials;
            continue;
        }
        ++ok;
        sum += r.distortion;
    }
    point.mean_count = count_sum / static_cast<double>(results.size());
    if (ok == 0)
    {
        point.mean_distortion = std::numeric_limits<double>::quiet_NaN();
        point.stderr_distortion = std::numeric_limits<double>::quiet_NaN();
        return point;
    }
    double mean = sum / static_cast<double>(ok);
    double sq = 0;
    for (auto const& r : results)
    {
        if (!r.failed)
        {
            sq += (r.distortion - mean) * (r.distortion - mean);
        }
    }
    point.mean_distortion = mean;
    point.stderr_distortion
        = ok > 1 ? std::sqrt(sq / static_cast<double>(ok - 1)
                             / static_cast<double>(ok))
                 : 0.0;
    return point;
}
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Monte Carlo distortion sweep.
 *
 * Trial t at grid point (rho index r, density index j) draws from the
 * stream derive_seed(master_seed, {r, j, t}), so every trial is
 * reproducible in isolation.
 */
DistortionCurve monte_carlo(ExperimentConfig const& config)
{
    config.validate();
    FourierCoefficients field = config.field.resolve();

    DistortionCurve curve;
    curve.field_digest = field_digest(field);
    for (std::size_t ri = 0; ri < config.rho_list.size(); ++ri)
    {
        double const rho = config.rho_list[ri];
        for (std::size_t ni = 0; ni < config.n_list.size(); ++ni)
        {
            ARConfig cfg{rho, config.renewal.with_density(config.n_list[ni])};
            cfg.validate();
            auto results = run_parallel(
                config.trials, config.threads, [&](std::size_t t) {
                    Rng rng = make_stream(config.master_seed, {ri, ni, t});
                    return run_trial(field, cfg, config.noise, rng);
                });
            DistortionPoint point = aggregate(results);
            point.rho = rho;
            point.n = config.n_list[ni];
            point.lambda = config.renewal.lambda;
            point.renewal_kind = config.renewal.kind;
            point.noise_variance = config.noise.variance;
            curve.points.push_back(point);
        }
        curve.slopes.push_back({rho, curve_slope(curve, rho)});
    }
    return curve;
}

//---------------------------------------------------------------------------//
double fit_loglog_slope(std::span<double const> ns, std::span<double const> ds)
{
    validate(ns.size() == ds.size(), "slope fit: mismatched point counts");
    validate(ns.size() >= 2, "slope fit: needs at least two points");
    double sx = 0, sy = 0;
    std::vector<double> xs(ns.size()), ys(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i)
    {
        validate(ns[i] > 0 && ds[i] > 0,
                 "slope fit: densities and distortions must be positive");
        xs[i] = std::log10(ns[i]);
        ys[i] = std::log10(ds[i]);
        sx += xs[i];
        sy += ys[i];
    }
    auto const count = static_cast<double>(ns.size());
    double mx = sx / count;
    double my = sy / count;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    validate(sxx > 0, "slope fit: densities must not all be equal");
    return sxy / sxx;
}

//---------------------------------------------------------------------------//
double curve_slope(DistortionCurve const& curve, double rho, double n_min)
{
    std::vector<double> ns, ds;
    for (auto const& p : curve.series(rho))
    {
        if (p.n >= n_min && std::isfinite(p.mean_distortion)
            && p.mean_distortion > 0)
        {
            ns.push_back(p.n);
            ds.push_back(p.mean_distortion);
        }
    }
    if (ns.size() < 2)
    {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return fit_loglog_slope(ns, ds);
}

//---------------------------------------------------------------------------//
//! FNV-1a over the IEEE bit patterns of (b, re, im, ...)
std::string field_digest(FourierCoefficients const& field)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t word) {
        for (int byte = 0; byte < 8; ++byte)
        {
            h ^= (word >> (8 * byte)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<std::uint64_t>(field.bandwidth()));
    for (Complex c : field.coeffs())
    {
        mix(std::bit_cast<std::uint64_t>(c.real()));
        mix(std::bit_cast<std::uint64_t>(c.imag()));
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string result(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
    {
        result[static_cast<std::size_t>(i)] = hex[h & 0xfU];
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
