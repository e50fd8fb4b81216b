#pragma once

#include "lagcoh/varieties.hpp"

namespace lagcoh {

// Builds (or loads from LAGCOH_CACHE_DIR when set) the swallowtail variety.
LagrangianPresentation swallowtail_cached(int n, int k, Route route, const GBOptions& opts = {});

// Exit codes: 0 success, 1 error / resource cap / incomplete, 2 a requested
// verification produced a negative verdict.
int run_cli(int argc, char** argv);

}  // namespace lagcoh
