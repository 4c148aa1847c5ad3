#include "dunkl/report.hpp"

#include <cmath>

namespace dunkl {

IdentityReport make_report(std::string name, const MultiplicityConfig& config, Complex expected,
                           Complex computed, double tolerance, std::string notes)
{
    IdentityReport r;
    r.identity_name = std::move(name);
    r.config = config;
    r.expected = expected;
    r.computed = computed;
    r.abs_error = std::abs(computed - expected);
    r.rel_error = std::abs(expected) > 0.0 ? r.abs_error / std::abs(expected) : r.abs_error;
    r.tolerance = tolerance;
    r.pass = std::isfinite(r.abs_error) && (r.abs_error <= tolerance || r.rel_error <= tolerance);
    r.notes = std::move(notes);
    return r;
}

IdentityReport make_bound_report(std::string name, const MultiplicityConfig& config, double bound,
                                 double value, double tolerance, std::string notes)
{
    IdentityReport r;
    r.identity_name = std::move(name);
    r.config = config;
    r.expected = bound;
    r.computed = value;
    r.abs_error = std::isfinite(value) ? std::max(0.0, value - bound) : INFINITY;
    r.rel_error = std::abs(bound) > 0.0 ? r.abs_error / std::abs(bound) : r.abs_error;
    r.tolerance = tolerance;
    r.pass = r.abs_error <= tolerance;
    r.notes = notes.empty() ? "inequality: computed <= expected" : std::move(notes);
    return r;
}

IdentityReport make_verdict_report(std::string name, const MultiplicityConfig& config, bool pass,
                                   double measured, std::string notes)
{
    // Encoded as 1 = holds, 0 = fails so that the generic pass rule applies.
    IdentityReport r = make_report(std::move(name), config, 1.0, pass ? 1.0 : 0.0, 0.0,
                                   std::move(notes));
    r.details["measured"] = measured;
    return r;
}

nlohmann::json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void to_json(nlohmann::json& j, const IdentityReport& report)
{
    j = nlohmann::json{
        {"identity_name", report.identity_name},
        {"config", report.config},
        {"expected", complex_to_json(report.expected)},
        {"computed", complex_to_json(report.computed)},
        {"abs_error", report.abs_error},
        {"rel_error", report.rel_error},
        {"pass", report.pass},
        {"tolerance", report.tolerance},
        {"notes", report.notes},
        {"details", report.details},
    };
}

}  // namespace dunkl
