//---------------------------------*-C++-*-----------------------------------//
//! \file export.cpp
//! CSV, JSON and SVG writers for distortion curves.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "mobsense/error.hpp"
#include "mobsense/experiment.hpp"
#include "mobsense/io.hpp"

namespace mobsense
{
namespace
{
constexpr std::string_view csv_header
    = "rho,n,lambda,renewal_kind,noise_variance,trials,mean_distortion,"
      "stderr,mean_M,failed_trials,bound_violations";

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true)
    {
        auto pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos)
        {
            break;
        }
        start = pos + 1;
    }
    return fields;
}

template<class T>
T parse_number(std::string_view text, std::size_t line)
{
    T value{};
    if (text == "nan")
    {
        if constexpr (std::is_floating_point_v<T>)
        {
            return std::numeric_limits<T>::quiet_NaN();
        }
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
    {
        throw Error(ErrorCode::invalid_spec,
                    fmt::format("csv line {}: bad number '{}'", line, text));
    }
    return value;
}
}  // namespace

//---------------------------------------------------------------------------//
ExportFormat export_format_from_string(std::string const& name)
{
    if (name == "csv")
        return ExportFormat::csv;
    if (name == "json")
        return ExportFormat::json;
    if (name == "svg")
        return ExportFormat::svg;
    throw Error(ErrorCode::invalid_spec, "unknown export format '" + name + "'");
}

//---------------------------------------------------------------------------//
void write_csv(DistortionCurve const& curve, std::ostream& os)
{
    os << csv_header << '\n';
    for (auto const& p : curve.points)
    {
        os << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n",
                          p.rho,
                          p.n,
                          p.lambda,
                          to_string(p.renewal_kind),
                          p.noise_variance,
                          p.trials,
                          p.mean_distortion,
                          p.stderr_distortion,
                          p.mean_count,
                          p.failed_trials,
                          p.bound_violations);
    }
}

//---------------------------------------------------------------------------//
std::vector<DistortionPoint> read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != csv_header)
    {
        throw Error(ErrorCode::invalid_spec, "csv: missing or unknown header");
    }
    std::vector<DistortionPoint> points;
    std::size_t line_no = 1;
    while (std::getline(is, line))
    {
        ++line_no;
        if (line.empty())
        {
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 11)
        {
            throw Error(ErrorCode::invalid_spec,
                        fmt::format("csv line {}: expected 11 fields", line_no));
        }
        DistortionPoint p;
        p.rho = parse_number<double>(f[0], line_no);
        p.n = parse_number<double>(f[1], line_no);
        p.lambda = parse_number<double>(f[2], line_no);
        p.renewal_kind = renewal_kind_from_string(f[3]);
        p.noise_variance = parse_number<double>(f[4], line_no);
        p.trials = parse_number<std::size_t>(f[5], line_no);
        p.mean_distortion = parse_number<double>(f[6], line_no);
        p.stderr_distortion = parse_number<double>(f[7], line_no);
        p.mean_count = parse_number<double>(f[8], line_no);
        p.failed_trials = parse_number<std::size_t>(f[9], line_no);
        p.bound_violations = parse_number<std::size_t>(f[10], line_no);
        points.push_back(p);
    }
    return points;
}

//---------------------------------------------------------------------------//
void write_json(DistortionCurve const& curve, std::ostream& os)
{
    Json points = Json::array();
    for (auto const& p : curve.points)
    {
        points.push_back({{"rho", p.rho},
                          {"n", p.n},
                          {"lambda", p.lambda},
                          {"renewal_kind", to_string(p.renewal_kind)},
                          {"noise_variance", p.noise_variance},
                          {"trials", p.trials},
                          {"mean_distortion", p.mean_distortion},
                          {"stderr", p.stderr_distortion},
                          {"mean_M", p.mean_count},
                          {"failed_trials", p.failed_trials},
                          {"bound_violations", p.bound_violations}});
    }
    Json slopes = Json::array();
    for (auto const& s : curve.slopes)
    {
        slopes.push_back({{"rho", s.rho},
                          {"slope", std::isfinite(s.slope) ? Json(s.slope)
                                                           : Json(nullptr)}});
    }
    Json doc = {{"field_digest", curve.field_digest},
                {"points", points},
                {"slopes", slopes}};
    os << doc.dump(2) << '\n';
}

//---------------------------------------------------------------------------//
/*!
 * Log-log scatter of mean distortion against density, one series per rho.
 *
 * Axes span whole decades around the data; each series is drawn as a
 * polyline with markers and labelled with its fitted slope.
 */
void write_svg(DistortionCurve const& curve, std::ostream& os)
{
    constexpr double width = 720, height = 480;
    constexpr double left = 80, right = 200, top = 30, bottom = 60;
    constexpr std::string_view palette[]
        = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    std::vector<double> rhos;
    double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
    for (auto const& p : curve.points)
    {
        if (std::find(rhos.begin(), rhos.end(), p.rho) == rhos.end())
        {
            rhos.push_back(p.rho);
        }
        if (p.n > 0 && p.mean_distortion > 0)
        {
            xmin = std::min(xmin, std::log10(p.n));
            xmax = std::max(xmax, std::log10(p.n));
            ymin = std::min(ymin, std::log10(p.mean_distortion));
            ymax = std::max(ymax, std::log10(p.mean_distortion));
        }
    }
    if (!(xmin <= xmax))
    {
        xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    }
    xmin = std::floor(xmin), xmax = std::max(std::ceil(xmax), xmin + 1);
    ymin = std::floor(ymin), ymax = std::max(std::ceil(ymax), ymin + 1);

    double const plot_w = width - left - right;
    double const plot_h = height - top - bottom;
    auto px = [&](double lx) {
        return left + (lx - xmin) / (xmax - xmin) * plot_w;
    };
    auto py = [&](double ly) {
        return top + (ymax - ly) / (ymax - ymin) * plot_h;
    };

    os << fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" "
        "height=\"{}\" font-family=\"sans-serif\" font-size=\"12\">\n",
        width,
        height);
    os << fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
        "stroke=\"black\"/>\n",
        left,
        top,
        plot_w,
        plot_h);
    for (double d = xmin; d <= xmax; d += 1)
    {
        os << fmt::format(
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" "
            "stroke=\"#ddd\"/>\n<text x=\"{0}\" y=\"{3}\" "
            "text-anchor=\"middle\">1e{4}</text>\n",
            px(d),
            top,
            top + plot_h,
            top + plot_h + 18,
            d);
    }
    for (double d = ymin; d <= ymax; d += 1)
    {
        os << fmt::format(
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" "
            "stroke=\"#ddd\"/>\n<text x=\"{3}\" y=\"{4}\" "
            "text-anchor=\"end\">1e{5}</text>\n",
            left,
            py(d),
            left + plot_w,
            left - 6,
            py(d) + 4,
            d);
    }
    os << fmt::format(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">sampling density "
        "n</text>\n",
        left + plot_w / 2,
        height - 15);
    os << fmt::format(
        "<text x=\"20\" y=\"{0}\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 20 {0})\">mean distortion</text>\n",
        top + plot_h / 2);

    for (std::size_t s = 0; s < rhos.size(); ++s)
    {
        auto color = palette[s % std::size(palette)];
        std::string polyline;
        std::string markers;
        for (auto const& p : curve.series(rhos[s]))
        {
            if (!(p.n > 0 && p.mean_distortion > 0))
            {
                continue;
            }
            double x = px(std::log10(p.n));
            double y = py(std::log10(p.mean_distortion));
            polyline += fmt::format("{:.2f},{:.2f} ", x, y);
            markers += fmt::format(
                "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\"/>\n",
                x,
                y,
                color);
        }
        os << fmt::format(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\"/>\n{}",
            polyline,
            color,
            markers);
        double slope = curve_slope(curve, rhos[s]);
        os << fmt::format(
            "<text x=\"{}\" y=\"{}\" fill=\"{}\">rho={} slope={:.3f}</text>\n",
            left + plot_w + 12,
            top + 16 + 18 * static_cast<double>(s),
            color,
            rhos[s],
            slope);
    }
    os << "</svg>\n";
}

//---------------------------------------------------------------------------//
void export_curve(DistortionCurve const& curve,
                  ExportFormat format,
                  std::filesystem::path const& path)
{
    std::ostringstream os;
    switch (format)
    {
        case ExportFormat::csv:
            write_csv(curve, os);
            break;
        case ExportFormat::json:
            write_json(curve, os);
            break;
        case ExportFormat::svg:
            write_svg(curve, os);
            break;
    }
    write_text_file(path, os.str());
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
