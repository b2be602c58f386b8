//---------------------------------*-C++-*-----------------------------------//
//! \file sampling.cpp
//---------------------------------------------------------------------------//
#include "mobsense/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mobsense/error.hpp"

namespace mobsense
{
//---------------------------------------------------------------------------//
std::string_view to_string(RenewalKind kind)
{
    switch (kind)
    {
        case RenewalKind::uniform:
            return "uniform";
        case RenewalKind::scaled_beta:
            return "scaled-beta";
        case RenewalKind::exponential:
            return "exponential";
        case RenewalKind::lognormal:
            return "lognormal";
        case RenewalKind::generalized_pareto:
            return "generalized-pareto";
    }
    return "unknown";
}

RenewalKind renewal_kind_from_string(std::string_view name)
{
    for (auto kind : {RenewalKind::uniform,
                      RenewalKind::scaled_beta,
                      RenewalKind::exponential,
                      RenewalKind::lognormal,
                      RenewalKind::generalized_pareto})
    {
        if (to_string(kind) == name)
        {
            return kind;
        }
    }
    throw Error(ErrorCode::invalid_spec,
                "renewal.kind: unknown renewal kind '" + std::string(name)
                    + "'");
}

//---------------------------------------------------------------------------//
void RenewalSpec::validate() const
{
    mobsense::validate(std::isfinite(density) && density > 0,
                       "renewal.n: density must be positive and finite");
    mobsense::validate(std::isfinite(lambda) && lambda > 1,
                       "renewal.lambda: support parameter must exceed 1");
    switch (kind)
    {
        case RenewalKind::uniform:
            mobsense::validate(lambda == 2,
                               "renewal.lambda: uniform renewal on (0, "
                               "lambda/n] has mean 1/n only for lambda = 2");
            break;
        case RenewalKind::scaled_beta:
            mobsense::validate(std::isfinite(beta_alpha) && beta_alpha > 0,
                               "renewal.alpha: Beta shape must be positive");
            break;
        case RenewalKind::exponential:
            break;
        case RenewalKind::lognormal:
            mobsense::validate(std::isfinite(lognormal_s) && lognormal_s > 0,
                               "renewal.s: lognormal variance must be "
                               "positive");
            break;
        case RenewalKind::generalized_pareto:
            mobsense::validate(pareto_xi >= 0 && pareto_xi < 0.5,
                               "renewal.xi: tail index must lie in [0, 0.5)");
            break;
    }
}

bool RenewalSpec::bounded() const
{
    return kind == RenewalKind::uniform || kind == RenewalKind::scaled_beta;
}

RenewalSpec RenewalSpec::with_density(double n) const
{
    RenewalSpec result = *this;
    result.density = n;
    return result;
}

//---------------------------------------------------------------------------//
void ARConfig::validate() const
{
    mobsense::validate(rho >= 0 && rho < 1,
                       "rho: AR coefficient must lie in [0, 1), got "
                           + std::to_string(rho));
    renewal.validate();
}

//---------------------------------------------------------------------------//
RenewalSampler::RenewalSampler(RenewalSpec const& spec) : spec_(spec)
{
    spec_.validate();
    double const n = spec_.density;
    switch (spec_.kind)
    {
        case RenewalKind::uniform:
            scale_ = spec_.lambda / n;
            break;
        case RenewalKind::scaled_beta:
            scale_ = spec_.lambda / n;
            gamma_a_ = std::gamma_distribution<double>(spec_.beta_alpha, 1.0);
            gamma_b_ = std::gamma_distribution<double>(
                spec_.beta_alpha * (spec_.lambda - 1), 1.0);
            break;
        case RenewalKind::exponential:
            scale_ = 1 / n;
            break;
        case RenewalKind::lognormal:
            // E[exp(N(mu, s))] = exp(mu + s/2) = 1/n
            lognormal_ = std::lognormal_distribution<double>(
                -std::log(n) - spec_.lognormal_s / 2,
                std::sqrt(spec_.lognormal_s));
            break;
        case RenewalKind::generalized_pareto:
            // GPD(0, sigma, xi) has mean sigma / (1 - xi)
            scale_ = (1 - spec_.pareto_xi) / n;
            break;
    }
}

double RenewalSampler::draw_once(Rng& rng)
{
    switch (spec_.kind)
    {
        case RenewalKind::uniform:
            return scale_ * (1 - unit_(rng));
        case RenewalKind::scaled_beta: {
            double x = gamma_a_(rng);
            double y = gamma_b_(rng);
            return x + y > 0 ? scale_ * x / (x + y) : 0.0;
        }
        case RenewalKind::exponential:
            return -scale_ * std::log1p(-unit_(rng));
        case RenewalKind::lognormal:
            return lognormal_(rng);
        case RenewalKind::generalized_pareto: {
            double const xi = spec_.pareto_xi;
            double tail = -std::log1p(-unit_(rng));
            if (xi == 0)
            {
                return scale_ * tail;
            }
            return scale_ * std::expm1(xi * tail) / xi;
        }
    }
    return 0;
}

double RenewalSampler::operator()(Rng& rng)
{
    double y = draw_once(rng);
    while (!(y > 0))
    {
        y = draw_once(rng);
    }
    return y;
}

//---------------------------------------------------------------------------//
double draw_renewal(RenewalSpec const& spec, Rng& rng)
{
    RenewalSampler sample{spec};
    return sample(rng);
}

//---------------------------------------------------------------------------//
namespace
{
std::size_t max_steps(ARConfig const& cfg)
{
    double limit = 10 * cfg.renewal.lambda * cfg.renewal.density
                   / (1 - cfg.rho);
    return static_cast<std::size_t>(std::max(1000.0, std::ceil(limit)));
}

/*!
 * Shared AR(1) recursion.
 *
 * The callable returns the next driving term, or a nonpositive value when
 * the source is exhausted.
 */
template<class F>
SamplePath run_recursion(ARConfig const& cfg, F&& next_draw)
{
    SamplePath path;
    path.locations.reserve(
        static_cast<std::size_t>(cfg.renewal.density * 1.1) + 16);
    double gap = 0;
    double location = 0;
    std::size_t const limit = max_steps(cfg);
    for (std::size_t step = 0; step < limit; ++step)
    {
        double y = next_draw();
        if (!(y > 0))
        {
            throw Error(ErrorCode::invalid_spec,
                        "forced draws exhausted before the path left [0, 1]");
        }
        path.draws.push_back(y);
        gap = cfg.rho * gap + y;
        location += gap;
        if (location > 1)
        {
            path.overshoot = location;
            return path;
        }
        path.locations.push_back(location);
    }
    throw Error(ErrorCode::runaway_path,
                "sampling path did not cross 1 within "
                    + std::to_string(limit) + " steps");
}
}  // namespace

//---------------------------------------------------------------------------//
SamplePath generate_path(ARConfig const& cfg, Rng& rng)
{
    cfg.validate();
    RenewalSampler sample{cfg.renewal};
    return run_recursion(cfg, [&] { return sample(rng); });
}

//---------------------------------------------------------------------------//
SamplePath generate_path(ARConfig const& cfg, std::span<double const> draws)
{
    mobsense::validate(cfg.rho >= 0 && cfg.rho < 1,
                       "rho: AR coefficient must lie in [0, 1)");
    for (double y : draws)
    {
        mobsense::validate(y > 0 && std::isfinite(y),
                           "forced draws must be positive and finite");
    }
    std::size_t next = 0;
    return run_recursion(cfg, [&] {
        return next < draws.size() ? draws[next++] : 0.0;
    });
}

//---------------------------------------------------------------------------//
/*!
 * Location S_i written directly in terms of the driving terms:
 * S_i = (1/(1-rho)) sum_{r=1}^{i} (1 - rho^(i-r+1)) Y_r.
 *
 * At rho = 0 the weights are all one and the sum is a plain prefix sum.
 */
double
closed_form_location(std::span<double const> draws, double rho, std::size_t i)
{
    mobsense::validate(i >= 1 && i <= draws.size(),
                       "location index out of range");
    mobsense::validate(rho >= 0 && rho < 1, "rho must lie in [0, 1)");
    double sum = 0;
    for (std::size_t r = 1; r <= i; ++r)
    {
        // 1 - rho^p computed as -expm1(p ln rho) to avoid cancellation
        auto power = static_cast<double>(i - r + 1);
        double weight = rho == 0 ? 1.0 : -std::expm1(power * std::log(rho));
        sum += weight * draws[r - 1];
    }
    return sum / (1 - rho);
}

//---------------------------------------------------------------------------//
double grid_deviation(SamplePath const& path)
{
    std::size_t const m = path.count();
    if (m == 0)
    {
        throw Error(ErrorCode::empty_path,
                    "grid deviation needs at least one location");
    }
    auto const md = static_cast<double>(m);
    double sum = 0;
    for (std::size_t i = 0; i < m; ++i)
    {
        double diff = path.locations[i] - static_cast<double>(i + 1) / md;
        sum += diff * diff;
    }
    return sum / md;
}

//---------------------------------------------------------------------------//
bool PathReport::all_ok() const
{
    return count_lower_ok.value_or(true) && remainder_upper_ok.value_or(true)
           && increasing && brackets_unit;
}

PathReport path_report(SamplePath const& path, ARConfig const& cfg)
{
    PathReport report;
    auto const& locs = path.locations;
    report.increasing = std::adjacent_find(locs.begin(),
                                           locs.end(),
                                           [](double a, double b) {
                                               return !(a < b);
                                           })
                            == locs.end()
                        && (locs.empty() || locs.front() > 0);
    report.brackets_unit = (locs.empty() || locs.back() <= 1)
                           && path.overshoot > 1;
    if (cfg.renewal.bounded())
    {
        double const n = cfg.renewal.density;
        double const lambda = cfg.renewal.lambda;
        double const eff = n * (1 - cfg.rho);
        report.count_lower_ok = static_cast<double>(path.count())
                                > eff / lambda - 1;
        report.remainder_upper_ok = path.remainder() <= lambda / eff;
    }
    return report;
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
