#pragma once

// Text and JSON views of reports.  JSON uses insertion-ordered objects so
// output is byte-stable across runs.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ustar/oracle.hpp"
#include "ustar/structure.hpp"

namespace ustar {

/// "b1^2*b2" (empty tuple or identity -> "1").
std::string monomial_string(const GroupSpec& g, const ExponentTuple& c,
                            const std::string& letter);

/// "1 + 2*b1 + b1^2" in mixed-radix term order.
std::string element_string(const AlgebraElement& x, const std::string& letter);

/// Sparse [(exponents, coeff)] listing.
nlohmann::ordered_json element_sparse_json(const AlgebraElement& x);

/// Invariants (and optionally bases, in both coordinate systems).
/// When max_i > 0 the invariant vectors are padded with zeros up to max_i.
nlohmann::ordered_json report_to_json(const StructureReport& r, bool include_bases,
                                      std::int64_t max_i = 0);
std::string report_to_text(const StructureReport& r, bool include_bases,
                           std::int64_t max_i = 0);

nlohmann::ordered_json diagonal_form_to_json(const DiagonalForm& d);
std::string diagonal_form_to_text(const DiagonalForm& d);

nlohmann::ordered_json checks_to_json(const DiagonalForm& d,
                                      const std::vector<CheckResult>& checks);
std::string checks_to_text(const std::vector<CheckResult>& checks);

}  // namespace ustar
