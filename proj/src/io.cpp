#include "dunkl/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {
namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep))
        out.push_back(item);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& what)
{
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw InputError("cannot parse " + what + " from '" + text + "'");
    return v;
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Recovers (R, n) when `axis` is the node set of a truncated Gauss-Legendre rule.
std::optional<QuadratureSpec> recover_rule(const std::vector<double>& axis)
{
    const int n = static_cast<int>(axis.size());
    if (n < 8 || n % 2 != 0)
        return std::nullopt;
    const auto unit = make_axis_rule({1.0, n});
    double radius = axis.back() / unit.nodes.back();
    const double snapped = std::round(radius * 1e6) / 1e6;
    if (std::abs(snapped - radius) <= 1e-9 * radius)
        radius = snapped;
    if (!(radius > 0.0))
        return std::nullopt;
    const QuadratureSpec spec{radius, n};
    const auto rule = make_axis_rule(spec);
    for (int k = 0; k < n; ++k)
        if (std::abs(rule.nodes[k] - axis[k]) > 1e-12 * radius)
            return std::nullopt;
    return spec;
}

std::vector<std::vector<std::string>> read_rows(std::istream& is, std::vector<std::string>& header)
{
    std::string line;
    if (!std::getline(is, line))
        throw InputError("CSV input is empty");
    header = split(trim(line), ',');
    for (auto& h : header)
        h = trim(h);
    std::vector<std::vector<std::string>> rows;
    while (std::getline(is, line)) {
        if (trim(line).empty())
            continue;
        auto row = split(trim(line), ',');
        if (row.size() != header.size())
            throw InputError("CSV row has " + std::to_string(row.size()) + " fields, header has " +
                             std::to_string(header.size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::map<std::string, double> parse_params(const std::string& text)
{
    std::map<std::string, double> out;
    if (text.empty())
        return out;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError("function parameter '" + item + "' is not of the form name=value");
        const std::string key = trim(item.substr(0, eq));
        try {
            out[key] = parse_double(item.substr(eq + 1), key);
        } catch (const InputError& e) {
            throw ConfigError(e.what());
        }
    }
    return out;
}

double take(std::map<std::string, double>& params, const std::string& key, const std::string& name)
{
    const auto it = params.find(key);
    if (it == params.end())
        throw ConfigError(name + " needs parameter " + key);
    const double v = it->second;
    params.erase(it);
    return v;
}

}  // namespace

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const SampledFunction& f)
{
    const int d = f.dimension();
    for (int i = 0; i < d; ++i)
        os << 'x' << i + 1 << ',';
    os << "re,im\n";
    const auto& axes = f.axes();
    const auto& values = f.values();
    std::vector<std::size_t> index(d, 0);
    for (std::size_t flat = 0; flat < values.size(); ++flat) {
        std::size_t rest = flat;
        for (int i = d - 1; i >= 0; --i) {
            index[i] = rest % axes[i].size();
            rest /= axes[i].size();
        }
        for (int i = 0; i < d; ++i)
            os << format_double(axes[i][index[i]]) << ',';
        os << format_double(values[flat].real()) << ',' << format_double(values[flat].imag()) << '\n';
    }
}

void write_csv_file(const std::string& path, const SampledFunction& f)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw InputError("cannot open " + path + " for writing");
    write_csv(os, f);
    if (!os)
        throw InputError("failed writing " + path);
}

SampledFunction read_csv(std::istream& is, int dimension)
{
    std::vector<std::string> header;
    const auto rows = read_rows(is, header);
    if (static_cast<int>(header.size()) != dimension + 2)
        throw InputError("CSV needs columns x1..x" + std::to_string(dimension) + ",re,im");
    for (int i = 0; i < dimension; ++i)
        if (header[i] != "x" + std::to_string(i + 1))
            throw InputError("unexpected CSV column '" + header[i] + "'");
    if (header[dimension] != "re" || header[dimension + 1] != "im")
        throw InputError("CSV must end with re,im columns");

    std::vector<std::vector<double>> axes(dimension);
    std::vector<Point> coords;
    std::vector<Complex> raw;
    for (const auto& row : rows) {
        Point x(dimension);
        for (int i = 0; i < dimension; ++i) {
            x[i] = parse_double(row[i], "coordinate");
            axes[i].push_back(x[i]);
        }
        coords.push_back(std::move(x));
        raw.emplace_back(parse_double(row[dimension], "re"), parse_double(row[dimension + 1], "im"));
    }
    std::size_t total = 1;
    for (auto& axis : axes) {
        std::sort(axis.begin(), axis.end());
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
        total *= axis.size();
    }
    if (total != raw.size())
        throw InputError("CSV rows do not form a full tensor grid");

    std::vector<Complex> values(total);
    std::vector<bool> seen(total, false);
    for (std::size_t r = 0; r < raw.size(); ++r) {
        std::size_t flat = 0;
        for (int i = 0; i < dimension; ++i) {
            const auto pos = std::lower_bound(axes[i].begin(), axes[i].end(), coords[r][i]) - axes[i].begin();
            flat = flat * axes[i].size() + static_cast<std::size_t>(pos);
        }
        if (seen[flat])
            throw InputError("CSV contains a repeated node");
        seen[flat] = true;
        values[flat] = raw[r];
    }

    std::optional<QuadratureSpec> origin = recover_rule(axes[0]);
    for (int i = 1; i < dimension && origin; ++i)
        if (!(recover_rule(axes[i]) == origin))
            origin.reset();
    if (origin)
        axes.assign(dimension, make_axis_rule(*origin).nodes);
    return SampledFunction(std::move(axes), std::move(values), origin);
}

SampledFunction read_csv_file(const std::string& path, int dimension)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw InputError("cannot open " + path);
    return read_csv(is, dimension);
}

MultiplicityConfig load_config(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw ConfigError("cannot open config " + path);
    try {
        return nlohmann::json::parse(is).get<MultiplicityConfig>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed config " + path + ": " + e.what());
    }
}

FunctionHandle parse_function(const MultiplicityConfig& config, const std::string& spec,
                              const QuadratureSpec& sampling)
{
    if (ends_with(spec, ".csv"))
        return read_csv_file(spec, config.dimension);
    const auto colon = spec.find(':');
    const std::string name = trim(spec.substr(0, colon));
    auto params = parse_params(colon == std::string::npos ? std::string{} : spec.substr(colon + 1));

    FunctionHandle f;
    if (name == "gaussian")
        f = Gaussian{take(params, "t", name)};
    else if (name == "gaussian_density")
        f = GaussianDensity{take(params, "t", name)};
    else if (name == "cauchy")
        f = GeneralizedCauchy{take(params, "p", name)};
    else if (name == "bessel_k_profile")
        f = BesselKProfile{take(params, "p", name)};
    else if (name == "sin_gaussian") {
        const double t = take(params, "t", name);
        if (!(t > 0.0))
            throw ConfigError("sin_gaussian needs t > 0");
        f = sample(config.dimension, sampling, [t](std::span<const double> x) {
            double r2 = 0.0;
            for (double v : x)
                r2 += v * v;
            return Complex(std::sin(r2) * std::exp(-t * r2), 0.0);
        });
    } else
        throw ConfigError("unknown function '" + name +
                          "'; expected gaussian, gaussian_density, cauchy, bessel_k_profile, "
                          "sin_gaussian or a .csv file");
    if (!params.empty())
        throw ConfigError("unknown parameter '" + params.begin()->first + "' for " + name);
    validate(config, f);
    return f;
}

PointSet parse_points(const MultiplicityConfig& config, const std::string& spec)
{
    if (spec.rfind("builtin:", 0) == 0) {
        const std::string count = spec.substr(8);
        int n = 0;
        const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
        if (ec != std::errc() || ptr != count.data() + count.size() || n < 1)
            throw ConfigError("builtin point sets are written builtin:n with n >= 1");
        return builtin_points(config, n);
    }
    std::ifstream is(spec);
    if (!is)
        throw ConfigError("cannot open point file " + spec);
    std::vector<std::string> header;
    const auto rows = read_rows(is, header);
    const int d = config.dimension;
    const bool with_coefficients = static_cast<int>(header.size()) == d + 2;
    if (static_cast<int>(header.size()) != d && !with_coefficients)
        throw InputError("point CSV needs columns x1..x" + std::to_string(d) + "[,a_re,a_im]");
    std::vector<Point> points;
    std::vector<Complex> coefficients;
    for (const auto& row : rows) {
        Point x(d);
        for (int i = 0; i < d; ++i)
            x[i] = parse_double(row[i], "coordinate");
        points.push_back(std::move(x));
        if (with_coefficients)
            coefficients.emplace_back(parse_double(row[d], "a_re"), parse_double(row[d + 1], "a_im"));
    }
    if (with_coefficients)
        return make_point_set(config, std::move(points), std::move(coefficients));
    return make_point_set(config, std::move(points));
}

QuadratureSpec parse_grid(const std::string& spec)
{
    const auto parts = split(spec, ',');
    if (parts.size() != 2)
        throw ConfigError("grid is written R,n");
    QuadratureSpec q;
    try {
        q.radius = parse_double(parts[0], "radius");
        const double n = parse_double(parts[1], "node count");
        if (n != std::floor(n) || n > 1e6)
            throw ConfigError("node count must be an integer");
        q.nodes_per_axis = static_cast<int>(n);
    } catch (const InputError& e) {
        throw ConfigError(e.what());
    }
    q.validate();
    return q;
}

}  // namespace dunkl
