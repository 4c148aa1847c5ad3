#pragma once

#include <iosfwd>
#include <string>

#include "dunkl/functions.hpp"
#include "dunkl/posdef.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// %.17g
std::string format_double(double v);

/// Header x1..xd,re,im; one row per node in flat order.
void write_csv(std::ostream& os, const SampledFunction& f);
void write_csv_file(const std::string& path, const SampledFunction& f);

/// Reads a full tensor grid. When the axes are the nodes of a
/// gauss_legendre_truncated rule the rule is recovered as the origin.
SampledFunction read_csv(std::istream& is, int dimension);
SampledFunction read_csv_file(const std::string& path, int dimension);

MultiplicityConfig load_config(const std::string& path);

/// name:param=value[,param=value]. Catalog names: gaussian, gaussian_density
/// (t), cauchy, bessel_k_profile (p). sin_gaussian:t=... is sin(|x|^2)
/// exp(-t|x|^2) sampled on `sampling`. Anything ending in .csv is read as a
/// sampled function. ConfigError on unknown names or parameters.
FunctionHandle parse_function(const MultiplicityConfig& config, const std::string& spec,
                              const QuadratureSpec& sampling);

/// builtin:n, or a CSV with header x1..xd and optional a_re,a_im columns.
PointSet parse_points(const MultiplicityConfig& config, const std::string& spec);

/// "R,n"
QuadratureSpec parse_grid(const std::string& spec);

}  // namespace dunkl
