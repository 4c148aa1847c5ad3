// dunkl: transforms, positive-definiteness certificates and identity suites
// for the Z_2^d Dunkl setting.
//
//   dunkl transform --config c.json --function gaussian:t=1 --output out.csv [--inverse] [--grid R,n] [--strict]
//   dunkl certify   --config c.json --function cauchy:p=3 --points builtin:5 --report r.json [--strict-pd] [--gram g.csv]
//   dunkl verify    --config c.json --suite all --report r.json
//
// Exit codes: 0 all checks pass, 1 a numerical check failed, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dunkl/errors.hpp"
#include "dunkl/io.hpp"
#include "dunkl/posdef.hpp"
#include "dunkl/suites.hpp"
#include "dunkl/transform.hpp"

namespace {

using namespace dunkl;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw InputError("cannot write " + path);
    os << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

struct TransformArgs {
    std::string config, function, output, grid;
    bool inverse = false;
    bool strict = false;
};

int run_transform(const TransformArgs& a)
{
    const auto config = load_config(a.config);
    const auto out_spec = a.grid.empty() ? default_quadrature(config.dimension) : parse_grid(a.grid);
    const auto f = parse_function(config, a.function, out_spec);
    QuadratureSpec quad;
    if (const auto* s = std::get_if<SampledFunction>(&f))
        quad = integration_spec(*s);
    else
        quad = budgeted_quadrature(config, f, out_spec.radius);
    const auto result = transform_to_grid(config, quad, f, out_spec,
                                          a.inverse ? Direction::inverse : Direction::forward);
    write_csv_file(a.output, result.function);
    if (result.warning) {
        std::fprintf(stderr, "warning: refinement changed values by up to %s; boundary/peak ratio %s\n",
                     format_double(result.max_error).c_str(), format_double(result.boundary_fraction).c_str());
        if (a.strict)
            return kFail;
    }
    return kPass;
}

struct CertifyArgs {
    std::string config, function, points, report, gram_csv;
    bool strict_pd = false;
};

int run_certify(const CertifyArgs& a)
{
    const auto config = load_config(a.config);
    const auto output = default_quadrature(config.dimension);
    const auto phi = parse_function(config, a.function, output);
    const auto pts = parse_points(config, a.points);

    const auto* sampled = std::get_if<SampledFunction>(&phi);
    const auto integration = sampled ? integration_spec(*sampled) : budgeted_quadrature(config, phi, output.radius);
    const auto bochner = bochner_certify(config, integration, phi, output);

    double reach = 0.0;
    for (const auto& p : pts.points)
        for (double v : p)
            reach = std::max(reach, std::abs(v));
    const auto g = gram(config, sampled ? output : gram_quadrature(config, phi, 2.0 * reach), phi, pts);

    json report;
    report["function"] = describe(phi);
    report["bochner"] = bochner;
    report["gram"] = to_json_value(g);
    bool pass = bochner.pass && g.psd_verdict;
    if (pts.coefficients)
        report["quadratic_form"] = complex_to_json(gram_quadratic_form(g, *pts.coefficients));
    if (a.strict_pd) {
        try {
            const auto strict = strict_pd_certify(config, integration, phi, output);
            report["strict_pd"] = strict;
            pass = pass && strict.pass;
        } catch (const PreconditionError& e) {
            report["strict_pd"] = {{"pass", false}, {"notes", e.what()}};
            pass = false;
        }
    }
    report["pass"] = pass;
    write_json(a.report, report);
    if (!a.gram_csv.empty())
        write_text(a.gram_csv, gram_csv(g));
    std::printf("%s %s\n", pass ? "PASS" : "FAIL", describe(phi).c_str());
    return pass ? kPass : kFail;
}

struct VerifyArgs {
    std::string config, suite, report;
};

int run_verify(const VerifyArgs& a)
{
    const auto config = load_config(a.config);
    const auto reports = run_suite(config, a.suite);
    json j = json::array();
    bool pass = true;
    for (const auto& r : reports) {
        j.push_back(r);
        pass = pass && r.pass;
        std::printf("%s %s\n", r.pass ? "PASS" : "FAIL", r.identity_name.c_str());
    }
    write_json(a.report, {{"suite", a.suite}, {"pass", pass}, {"reports", j}});
    return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dunkl harmonic analysis on R^d for Z_2^d"};
    app.require_subcommand(1);

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "Dunkl transform sampled on a grid");
    transform->add_option("--config", ta.config, "JSON config")->required();
    transform->add_option("--function", ta.function, "catalog spec or CSV")->required();
    transform->add_option("--output", ta.output, "output CSV")->required();
    transform->add_option("--grid", ta.grid, "output grid R,n");
    transform->add_flag("--inverse", ta.inverse, "inverse transform");
    transform->add_flag("--strict", ta.strict, "accuracy warnings fail");

    CertifyArgs ca;
    auto* certify = app.add_subcommand("certify", "Gram matrix and Bochner certificate");
    certify->add_option("--config", ca.config, "JSON config")->required();
    certify->add_option("--function", ca.function, "catalog spec or CSV")->required();
    certify->add_option("--points", ca.points, "builtin:n or CSV")->required();
    certify->add_option("--report", ca.report, "report JSON")->required();
    certify->add_option("--gram", ca.gram_csv, "Gram matrix CSV");
    certify->add_flag("--strict-pd", ca.strict_pd, "strict positive definiteness certificate");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "identity suites");
    verify->add_option("--config", va.config, "JSON config")->required();
    verify->add_option("--suite", va.suite, "all|kernel|transform|translation|posdef|heat")->required();
    verify->add_option("--report", va.report, "report JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*transform)
            return run_transform(ta);
        if (*certify)
            return run_certify(ca);
        return run_verify(va);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n%s", e.what(), app.help().c_str());
        return kUsage;
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const NotInCatalog& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kFail;
    }
}
