#include "dunkl/posdef.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "dunkl/errors.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/special_functions.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {
namespace {

using Matrix = Eigen::MatrixXcd;

double sup_norm(std::span<const double> x)
{
    double m = 0.0;
    for (double v : x)
        m = std::max(m, std::abs(v));
    return m;
}

double reach_of(std::span<const Point> points)
{
    double m = 0.0;
    for (const auto& p : points)
        m = std::max(m, sup_norm(p));
    return m;
}

double distance(const Point& a, const Point& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

void check_distinct(std::span<const Point> points)
{
    for (std::size_t j = 0; j < points.size(); ++j)
        for (std::size_t l = j + 1; l < points.size(); ++l)
            if (distance(points[j], points[l]) <= kMinSeparation)
                throw InputError("points " + std::to_string(j) + " and " + std::to_string(l) +
                                 " are not distinct");
}

// c mu_k S_k on the grid, the diagonal of A diag(w) A^H.
Matrix gram_matrix(const MultiplicityConfig& config, const TensorGrid& grid,
                   std::span<const Complex> spectrum, std::span<const Point> points)
{
    const auto measure = grid.weighted_measure(config);
    const auto n = static_cast<Eigen::Index>(points.size());
    const auto N = static_cast<Eigen::Index>(grid.size());
    Matrix a(n, N);
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto row = kernel_on(config, grid, points[j]);
        for (Eigen::Index k = 0; k < N; ++k)
            a(j, k) = row[k];
    }
    Eigen::VectorXcd w(N);
    for (Eigen::Index k = 0; k < N; ++k)
        w(k) = config.mehta * measure[k] * spectrum[k];
    return (a * w.asDiagonal()) * a.adjoint();
}

GramReport summarize(const Matrix& g, const Matrix& coarse, std::string function)
{
    GramReport r;
    r.function = std::move(function);
    const auto n = g.rows();
    r.matrix.assign(n, std::vector<Complex>(n));
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) {
            r.matrix[j][l] = g(j, l);
            r.hermitian_residual = std::max(r.hermitian_residual, std::abs(g(j, l) - std::conj(g(l, j))));
            r.resolution_error = std::max(r.resolution_error, std::abs(g(j, l) - coarse(j, l)));
        }
    const Matrix h = (g + g.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = solver.eigenvalues().minCoeff();
    r.max_eigenvalue = solver.eigenvalues().maxCoeff();
    const double scale = std::max(1.0, r.max_eigenvalue);
    r.tolerance = kPsdTolerance;
    if (r.resolution_error > kPsdTolerance * scale) {
        r.warning = true;
        r.tolerance = r.resolution_error / scale;
    }
    r.psd_verdict = r.min_eigenvalue >= -r.tolerance * scale;
    r.spd_verdict = r.min_eigenvalue > r.tolerance * scale;
    return r;
}

using SpectrumFn = std::function<std::vector<Complex>(const TensorGrid&)>;

GramReport gram_with(const MultiplicityConfig& config, const QuadratureSpec& quad,
                     const SpectrumFn& spectrum, const PointSet& pts, std::string name)
{
    quad.validate();
    const auto spec = resolving_quadrature(quad.radius, 2.0 * reach_of(pts.points), quad.nodes_per_axis);
    const TensorGrid fine(config.dimension, spec.refined());
    const TensorGrid coarse(config.dimension, spec);
    const Matrix g = gram_matrix(config, fine, spectrum(fine), pts.points);
    const Matrix gc = gram_matrix(config, coarse, spectrum(coarse), pts.points);
    return summarize(g, gc, std::move(name));
}

IdentityReport gram_verdict(const std::string& name, const MultiplicityConfig& config,
                            const GramReport& g)
{
    auto report = make_verdict_report(name, config, g.psd_verdict,
                                      g.min_eigenvalue / std::max(1.0, g.max_eigenvalue),
                                      "Gram matrix of " + g.function + " on builtin:" +
                                          std::to_string(g.matrix.size()));
    report.details["min_eigenvalue"] = g.min_eigenvalue;
    report.details["max_eigenvalue"] = g.max_eigenvalue;
    report.details["spd"] = g.spd_verdict;
    report.details["hermitian_residual"] = g.hermitian_residual;
    report.details["tolerance"] = g.tolerance;
    return report;
}

}  // namespace

PointSet make_point_set(const MultiplicityConfig& config, std::vector<Point> points,
                        std::optional<std::vector<Complex>> coefficients)
{
    if (points.empty())
        throw InputError("point set is empty");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != config.dimension)
            throw ConfigError("point dimension does not match config dimension");
    check_distinct(points);
    if (coefficients) {
        if (coefficients->size() != points.size())
            throw InputError("coefficient count does not match point count");
        if (std::all_of(coefficients->begin(), coefficients->end(),
                        [](Complex a) { return a == Complex(0.0); }))
            throw InputError("coefficients are all zero");
    }
    return {std::move(points), std::move(coefficients)};
}

PointSet builtin_points(const MultiplicityConfig& config, int n)
{
    if (n < 1)
        throw InputError("builtin point sets need n >= 1");
    static constexpr double direction[3] = {1.0, 0.618034, 0.414214};
    std::vector<Point> points;
    for (int k = 0; k < n; ++k) {
        const int m = (k + 1) / 2;
        const double magnitude = m == 0 ? 0.0 : 0.7 + 1.2 * (m - 1);
        const double s = k % 2 == 1 ? magnitude : -magnitude;
        Point x(config.dimension);
        for (int i = 0; i < config.dimension; ++i) {
            x[i] = s * direction[i];
            if (config.dimension > 1)
                x[i] += 0.25 * i * ((k % 3) - 1);
        }
        points.push_back(std::move(x));
    }
    return make_point_set(config, std::move(points));
}

GramReport gram(const MultiplicityConfig& config, const QuadratureSpec& quad,
                const FunctionHandle& phi, const PointSet& pts)
{
    validate(config, phi);
    check_distinct(pts.points);
    return gram_with(
        config, quad, [&](const TensorGrid& grid) { return spectrum_on(config, phi, grid); }, pts,
        describe(phi));
}

Complex gram_quadratic_form(const GramReport& report, std::span<const Complex> coefficients)
{
    if (coefficients.size() != report.matrix.size())
        throw InputError("coefficient count does not match the Gram matrix");
    Complex sum = 0.0;
    for (std::size_t j = 0; j < coefficients.size(); ++j)
        for (std::size_t l = 0; l < coefficients.size(); ++l)
            sum += coefficients[j] * std::conj(coefficients[l]) * report.matrix[j][l];
    return sum;
}

FunctionHandle bochner_forward(const MultiplicityConfig& config, const QuadratureSpec& quad,
                               const FunctionHandle& psi)
{
    validate(config, psi);
    if (auto partner = transform_partner(config, psi))
        return *partner;
    const auto& s = std::get<SampledFunction>(psi);
    double largest = 0.0;
    double lowest = 0.0;
    for (const auto& v : s.values()) {
        largest = std::max(largest, std::abs(v));
        lowest = std::min(lowest, v.real());
    }
    if (lowest < -1e-12 * std::max(1.0, largest))
        throw InputError("bochner_forward needs a nonnegative function; minimum is " +
                         std::to_string(lowest));
    const QuadratureSpec own = integration_spec(s);
    return transform_to_grid(config, s.matches(TensorGrid(config.dimension, own)) ? own : quad, psi,
                             own, Direction::forward)
        .function;
}

IdentityReport bochner_certify(const MultiplicityConfig& config, const QuadratureSpec& quad,
                               const FunctionHandle& phi, std::optional<QuadratureSpec> output)
{
    validate(config, phi);
    const QuadratureSpec out = output.value_or(default_quadrature(config.dimension));
    const auto psi = transform_to_grid(config, quad, phi, out, Direction::forward);
    const TensorGrid grid(config.dimension, out);
    const auto& values = psi.function.values();

    double max_re = 0.0;
    double max_abs = 0.0;
    double max_im = 0.0;
    double min_re = std::numeric_limits<double>::infinity();
    std::size_t argmin = 0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        max_re = std::max(max_re, values[k].real());
        max_abs = std::max(max_abs, std::abs(values[k]));
        max_im = std::max(max_im, std::abs(values[k].imag()));
        if (values[k].real() < min_re) {
            min_re = values[k].real();
            argmin = k;
        }
    }
    const double tol_neg = 1e-8 * max_re;
    const bool nonnegative = min_re >= -tol_neg;
    const bool real = max_im <= 1e-8 * max_abs;

    std::size_t negative = 0;
    double r_lo = std::numeric_limits<double>::infinity();
    double r_hi = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k].real() < -tol_neg) {
            ++negative;
            double r = 0.0;
            for (double v : grid.node(k))
                r += v * v;
            r = std::sqrt(r);
            r_lo = std::min(r_lo, r);
            r_hi = std::max(r_hi, r);
        }
    }

    auto report = make_verdict_report("bochner_certificate", config, nonnegative && real,
                                      max_re > 0.0 ? min_re / max_re : min_re,
                                      "D phi >= 0 and real on the output grid for " + describe(phi));
    report.details["min"] = min_re;
    report.details["min_location"] = grid.node(argmin);
    report.details["max"] = max_re;
    report.details["max_abs_imag"] = max_im;
    report.details["nonnegative"] = nonnegative;
    report.details["real"] = real;
    report.details["resolution_error"] = psi.max_error;
    report.details["output_rule"] = {out.radius, out.nodes_per_axis};
    if (negative > 0)
        report.details["negative_region"] = {
            {"nodes", negative}, {"radius_min", r_lo}, {"radius_max", r_hi}};
    return report;
}

IdentityReport bound_check(const MultiplicityConfig& config, const QuadratureSpec& quad,
                           const FunctionHandle& phi, std::span<const Point> xs)
{
    validate(config, phi);
    const Point zero(config.dimension, 0.0);
    const double phi0 = evaluate(config, phi, zero).real();
    double worst_value = 0.0;
    double worst_excess = 0.0;
    bool pass = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& x : xs) {
        const double modulus = std::abs(evaluate(config, phi, x));
        const Complex diag = translate(config, quad, phi, x, x).value;
        const bool ok = modulus <= phi0 + 1e-10 && diag.real() >= -1e-8 && diag.real() <= phi0 + 1e-8;
        pass = pass && ok;
        const double excess = std::max({modulus - phi0, diag.real() - phi0, -diag.real()});
        if (excess >= worst_excess || rows.empty()) {
            worst_excess = excess;
            worst_value = std::max(modulus, diag.real());
        }
        rows.push_back({{"x", x}, {"abs_phi", modulus}, {"tau_x_phi_x", complex_to_json(diag)}, {"ok", ok}});
    }
    auto report = make_bound_report("structural_bounds", config, phi0, worst_value, 1e-8,
                                    "|phi(x)| <= phi(0) and 0 <= tau_x phi(x) <= phi(0) for " +
                                        describe(phi));
    report.pass = pass;
    report.abs_error = std::max(0.0, worst_excess);
    report.details["points"] = rows;
    return report;
}

std::vector<IdentityReport> closure_suite(const MultiplicityConfig& config,
                                          const QuadratureSpec& quad, const FunctionHandle& phi1,
                                          const FunctionHandle& phi2)
{
    validate(config, phi1);
    validate(config, phi2);
    const bool radial = is_radial(phi1) && is_radial(phi2);
    if (!radial)
        throw DomainError("product closure is only established for radial functions");
    const PointSet pts = builtin_points(config, 5);
    std::vector<IdentityReport> out;

    const auto conv = gram_with(
        config, quad,
        [&](const TensorGrid& grid) {
            auto s = spectrum_on(config, phi1, grid);
            const auto s2 = spectrum_on(config, phi2, grid);
            for (std::size_t k = 0; k < s.size(); ++k)
                s[k] *= s2[k];
            return s;
        },
        pts, describe(phi1) + " * " + describe(phi2));
    out.push_back(gram_verdict("convolution_closure", config, conv));

    const double radius = std::min(decay_radius(config, phi1, 1e-12), decay_radius(config, phi2, 1e-12));
    const QuadratureSpec spatial = resolving_quadrature(
        radius, 2.0 * quad.radius, default_quadrature(config.dimension).nodes_per_axis);
    const SampledFunction product = sample(config.dimension, spatial, [&](std::span<const double> x) {
        return evaluate(config, phi1, x) * evaluate(config, phi2, x);
    });
    const auto prod = gram_with(
        config, quad, [&](const TensorGrid& grid) { return spectrum_on(config, product, grid); }, pts,
        describe(phi1) + " . " + describe(phi2));
    out.push_back(gram_verdict("product_closure", config, prod));
    return out;
}

Complex quadratic_form_heat(const MultiplicityConfig& config, const QuadratureSpec& quad,
                            const FunctionHandle& phi, const PointSet& pts, double t)
{
    if (!(t > 0.0))
        throw DomainError("quadratic_form_heat requires t > 0");
    if (!pts.coefficients)
        throw InputError("quadratic_form_heat needs coefficients");
    validate(config, phi);
    const auto& alpha = *pts.coefficients;
    const double reach = reach_of(pts.points);

    // By Plancherel c <phi * g_t, g_t> = c int D phi |D g_t|^2 h^2 with
    // D g_t(xi) = sum_j a_j E(-i x_j, xi) e^{-t |xi|^2}.
    const TensorGrid grid(config.dimension,
                          resolving_quadrature(quad.radius, 2.0 * reach, quad.nodes_per_axis).refined());
    std::vector<Complex> dg(grid.size(), 0.0);
    for (std::size_t j = 0; j < pts.points.size(); ++j) {
        const auto k = kernel_on(config, grid, pts.points[j]);
        for (std::size_t m = 0; m < dg.size(); ++m)
            dg[m] += alpha[j] * k[m];
    }
    const auto damp = values_on(config, Gaussian{2.0 * t}, grid);
    const auto dphi = spectrum_on(config, phi, grid);
    std::vector<Complex> terms(grid.size());
    for (std::size_t m = 0; m < terms.size(); ++m)
        terms[m] = dphi[m] * std::norm(dg[m]) * damp[m];
    return config.mehta * integrate(config, grid, terms);
}

double heat_kernel(const MultiplicityConfig& config, double t, std::span<const double> x,
                   std::span<const double> y)
{
    if (!(t > 0.0))
        throw DomainError("heat_kernel requires t > 0");
    if (static_cast<int>(x.size()) != config.dimension || static_cast<int>(y.size()) != config.dimension)
        throw ConfigError("point dimension does not match config dimension");
    const double s = std::sqrt(2.0 * t);
    double value = config.mehta * std::pow(2.0 * t, -config.homogeneity());
    for (int i = 0; i < config.dimension; ++i) {
        const double gap = std::abs(x[i]) - std::abs(y[i]);
        value *= std::exp(-gap * gap / (4.0 * t)) * kernel_1d_real_scaled(config.kappa[i], x[i] / s, y[i] / s);
    }
    return value;
}

IdentityReport heat_mass(const MultiplicityConfig& config, double t, std::span<const double> x)
{
    if (!(t > 0.0))
        throw DomainError("heat_mass requires t > 0");
    const double radius = sup_norm(x) + std::sqrt(4.0 * t * 40.0);
    const QuadratureSpec spec =
        resolving_quadrature(std::ceil(radius), 4.0 / std::sqrt(t), default_quadrature(config.dimension).nodes_per_axis);
    auto mass = [&](const QuadratureSpec& s) {
        const TensorGrid grid(config.dimension, s);
        std::vector<Complex> values(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k)
            values[k] = heat_kernel(config, t, x, grid.node(k));
        return integrate(config, grid, values).real();
    };
    const double computed = mass(spec.refined());
    auto report = make_report("heat_kernel_mass", config, 1.0, computed, 1e-6,
                              "int Gamma(t,x,y) h^2(y) dy = 1");
    report.details["t"] = t;
    report.details["x"] = Point(x.begin(), x.end());
    report.details["resolution_error"] = std::abs(computed - mass(spec));
    report.details["mass_with_4t_prefactor"] = computed * std::pow(0.5, config.homogeneity());
    return report;
}

IdentityReport bessel_integral_identity(const MultiplicityConfig& config,
                                        const QuadratureSpec& quad, double p)
{
    const BesselKProfile profile{p};
    validate(config, profile);
    const double scale = gamma_fn(p) * std::pow(2.0, p - 1.0);
    auto integral = [&](const QuadratureSpec& s) {
        const TensorGrid grid(config.dimension, s);
        return scale * integrate(config, grid, values_on(config, profile, grid)).real();
    };
    const double computed = integral(quad.refined());
    const double oracle = scale / config.mehta;
    const double printed = gamma_fn(p) / (config.mehta * std::pow(2.0, p - 1.0));
    auto report = make_report("bessel_integral_identity", config, oracle, computed, 1e-5,
                              "int |x|^a K_a(|x|) h^2 dx vs Gamma(p) 2^{p-1} / c");
    report.details["p"] = p;
    report.details["oracle_constant"] = oracle;
    report.details["printed_constant"] = printed;
    report.details["matches_oracle"] = std::abs(computed - oracle) <= 1e-5 * oracle;
    report.details["matches_printed"] = std::abs(computed - printed) <= 1e-5 * printed;
    report.details["resolution_error"] = std::abs(computed - integral(quad));
    return report;
}

double smallest_singular_value(const MultiplicityConfig& config, std::span<const Point> xs,
                               std::span<const Point> xis)
{
    Matrix a(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(xis.size()));
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t m = 0; m < xis.size(); ++m)
            a(j, m) = kernel_nd(config, xs[j], xis[m]);
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues().minCoeff();
}

double kernel_independence(const MultiplicityConfig& config, std::span<const Point> xs,
                           std::span<const Point> xis)
{
    check_distinct(xs);
    if (xis.size() < xs.size())
        throw InputError("kernel_independence needs at least as many probes as points");
    return smallest_singular_value(config, xs, xis);
}

std::vector<Point> probe_points(int dimension, int m, double radius)
{
    std::vector<Point> out;
    if (dimension == 1) {
        for (int k = 0; k < m; ++k)
            out.push_back({m == 1 ? 0.0 : -radius + 2.0 * radius * k / (m - 1)});
        return out;
    }
    static constexpr double steps[3] = {0.7548776662466927, 0.5698402909980532, 0.4301597090019468};
    for (int k = 0; k < m; ++k) {
        Point x(dimension);
        for (int i = 0; i < dimension; ++i) {
            const double u = std::fmod(0.5 + steps[i] * (k + 1), 1.0);
            x[i] = radius * (2.0 * u - 1.0);
        }
        out.push_back(std::move(x));
    }
    return out;
}

QuadratureSpec gram_quadrature(const MultiplicityConfig& config, const FunctionHandle& phi, double reach)
{
    const auto spectral = spectral_quadrature(config, phi, reach);
    if (std::pow(2.0 * spectral.nodes_per_axis, config.dimension) > 0x1.0p24)
        return default_quadrature(config.dimension);
    return spectral;
}

IdentityReport strict_pd_certify(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                 const FunctionHandle& phi, std::optional<QuadratureSpec> output)
{
    validate(config, phi);
    if (const auto* s = std::get_if<SampledFunction>(&phi)) {
        if (std::all_of(s->values().begin(), s->values().end(), [](Complex v) { return v == Complex(0.0); }))
            throw PreconditionError("phi vanishes identically");
    }
    const auto bochner = bochner_certify(config, quad, phi, output);
    if (!bochner.pass)
        throw PreconditionError("phi is not certified positive definite: " + bochner.notes);
    const double max_psi = bochner.details["max"].get<double>();
    const TensorGrid own(config.dimension, quad);
    const double scale = config.mehta * lp_norm(config, own, values_on(config, phi, own), 1.0);
    if (!(max_psi > 1e-10 * scale))
        throw PreconditionError("the transform of phi vanishes on the grid");

    bool spd = true;
    nlohmann::json grams = nlohmann::json::array();
    for (int n : {3, 5, 8}) {
        const PointSet pts = builtin_points(config, n);
        const QuadratureSpec spectral = gram_quadrature(config, phi, 2.0 * reach_of(pts.points));
        const auto g = gram(config, spectral, phi, pts);
        spd = spd && g.spd_verdict;
        grams.push_back({{"n", n}, {"min_eigenvalue", g.min_eigenvalue}, {"max_eigenvalue", g.max_eigenvalue},
                         {"spd", g.spd_verdict}});
    }
    auto report = make_verdict_report("strict_pd_certificate", config, spd, max_psi / scale,
                                      "Bochner PASS, nonzero transform and SPD Gram matrices for " +
                                          describe(phi));
    report.details["bochner"] = bochner.details;
    report.details["transform_max_over_scale"] = max_psi / scale;
    report.details["gram"] = grams;
    return report;
}

nlohmann::json to_json_value(const GramReport& report)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.matrix) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row)
            r.push_back(complex_to_json(v));
        rows.push_back(r);
    }
    return {{"function", report.function},
            {"matrix", rows},
            {"hermitian_residual", report.hermitian_residual},
            {"min_eigenvalue", report.min_eigenvalue},
            {"max_eigenvalue", report.max_eigenvalue},
            {"psd_verdict", report.psd_verdict},
            {"spd_verdict", report.spd_verdict},
            {"tolerance", report.tolerance},
            {"resolution_error", report.resolution_error},
            {"warning", report.warning}};
}

std::string gram_csv(const GramReport& report)
{
    std::string out = "row,col,re,im\n";
    char buf[96];
    for (std::size_t j = 0; j < report.matrix.size(); ++j)
        for (std::size_t l = 0; l < report.matrix[j].size(); ++l) {
            std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g\n", j, l, report.matrix[j][l].real(),
                          report.matrix[j][l].imag());
            out += buf;
        }
    return out;
}

}  // namespace dunkl
