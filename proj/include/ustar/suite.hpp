#pragma once

#include <cstdint>
#include <vector>

#include "ustar/involution.hpp"
#include "ustar/oracle.hpp"

namespace ustar {

struct SuiteOptions {
  std::int64_t enumeration_cap = kDefaultEnumerationCap;
  std::int64_t combinatorial_cap = kDefaultCombinatorialCap;
  std::int64_t max_power_index = 2;  // power-subgroup identity checked for i = 0..max
};

/// Runs every applicable verification for the configuration: subgroup
/// counts, the decomposition and epimorphism identities, the
/// power-subgroup identities, both bases against enumeration, invariants
/// against the closed forms, predicted orders, and the cap-free
/// independence certificates.  Checks that would exceed a cap come back
/// as Skip, not Fail.
std::vector<CheckResult> verification_suite(const DiagonalForm& d,
                                            const SuiteOptions& options = {});

/// True when no check failed (skips are allowed).
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ustar
