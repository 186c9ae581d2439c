#pragma once

#include "l2rank/presentation.hpp"

#include <filesystem>
#include <string>

namespace l2rank {

/// Directory searched for <name>.grp; L2RANK_FIXTURES overrides the
/// build-time default.
std::filesystem::path fixture_directory();

/// Named presentation. A file <name>.grp in the fixture directory wins;
/// otherwise the parametric families free_<n>, g0_<n>_<p> (free product of
/// n cyclic groups of order p) and hn_<k> (relators x_i^{p_1} and
/// (x_1 x_i)^{p_i} for the first k primes) are generated. Throws
/// InvalidArgument for unknown names.
ParsedPresentation load_fixture(const std::string& name);

}  // namespace l2rank
