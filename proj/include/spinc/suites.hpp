#pragma once

#include <string>
#include <vector>

#include "spinc/report.hpp"

namespace spinc {

/// gamma, clifford, spin, factorize, u-embed, so-obstruction, dirac, weyl, mp, all
const std::vector<std::string>& suite_names();

/// Runs every check of the named suite. A failing or throwing check is
/// recorded in its report and never stops the others. Reports come back
/// sorted by check id. Throws UnknownSuite for other names.
std::vector<CheckReport> run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace spinc
