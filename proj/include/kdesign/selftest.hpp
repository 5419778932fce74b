#pragma once

#include <string>
#include <vector>

namespace kdesign {

struct SelfCheck {
    std::string name;
    bool passed;
    std::string detail;
};

/// Verifies every bundled fixture and the KP/KC/K_5/explosion/witness
/// results end to end. Checks that throw are recorded as failures.
std::vector<SelfCheck> run_selftest();

}  // namespace kdesign
