#pragma once

#include <string>
#include <vector>

#include "dunkl/report.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// Identity suites run by `dunkl verify`: kernel, transform, translation,
/// posdef, heat, or all. ConfigError for an unknown name.
std::vector<IdentityReport> run_suite(const MultiplicityConfig& config, const std::string& name);

const std::vector<std::string>& suite_names();

}  // namespace dunkl
