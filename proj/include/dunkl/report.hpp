#pragma once

#include <string>

#include <json.hpp>

#include "dunkl/kernel.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// One identity checked at one configuration.
///
/// pass holds exactly when abs_error <= tolerance or rel_error <= tolerance.
/// Inequalities (value <= bound) are recorded with expected = bound and the
/// violation max(0, value - bound) as abs_error.
struct IdentityReport {
    std::string identity_name;
    MultiplicityConfig config;
    Complex expected{};
    Complex computed{};
    double abs_error = 0.0;
    double rel_error = 0.0;
    bool pass = false;
    double tolerance = 0.0;
    std::string notes;
    /// Free-form supporting data: error estimates, alternative constants, locations.
    nlohmann::json details = nlohmann::json::object();
};

IdentityReport make_report(std::string name, const MultiplicityConfig& config, Complex expected,
                           Complex computed, double tolerance, std::string notes = {});

/// Report for value <= bound.
IdentityReport make_bound_report(std::string name, const MultiplicityConfig& config, double bound,
                                 double value, double tolerance, std::string notes = {});

/// Boolean certificate (expected 1, computed 1 or 0); `measured` goes to details.
IdentityReport make_verdict_report(std::string name, const MultiplicityConfig& config, bool pass,
                                   double measured, std::string notes = {});

void to_json(nlohmann::json& j, const IdentityReport& report);
nlohmann::json complex_to_json(Complex z);

}  // namespace dunkl
