#pragma once

#include <string>
#include <vector>

#include "hbch/gf.hpp"

namespace hbch {

/// One published value checked against a fresh computation.
struct Claim {
    std::string id;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Recomputes the worked examples (cosets, reductions, bounds, the four base
/// codes and their lengthenings). Failures are reported, not thrown.
std::vector<Claim> run_reproduction(FieldRegistry &registry = FieldRegistry::bundled());

}  // namespace hbch
