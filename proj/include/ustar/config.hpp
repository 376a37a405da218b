#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ustar/involution.hpp"
#include "ustar/oracle.hpp"

namespace ustar {

/// One CLI invocation's inputs.  Round-trips through JSON.
struct JobConfig {
  enum class Format { Text, Json };

  std::int64_t p = 3;
  std::vector<std::int64_t> orders;
  std::string involution = "canonical";
  Format format = Format::Text;
  std::int64_t size_guard = GroupSpec::kDefaultSizeGuard;
  std::int64_t enumeration_cap = kDefaultEnumerationCap;
  std::int64_t combinatorial_cap = kDefaultCombinatorialCap;
  std::int64_t max_i = 0;  // 0 = derive from the exponent of G
  std::string out_path;    // empty = stdout

  bool operator==(const JobConfig&) const = default;
};

GroupSpec make_group(const JobConfig& cfg);

/// "3,3" or "9" -> generator orders.
std::vector<std::int64_t> parse_order_list(const std::string& text);

/// Involution grammar:
///   "canonical"                  g -> g^{-1} on every generator
///   "identity"
///   "swap(i,j)"                  exchange generators i and j (1-based)
///   "a1->2,0;a2->0,1"            explicit generator images as exponent tuples
InvolutionSpec parse_involution(const GroupSpec& g, const std::string& text);

/// Canonical grammar string for an involution: one of the keyword forms
/// when the images match it, the explicit form otherwise.  Parsing the
/// result reproduces the involution.
std::string render_involution(const InvolutionSpec& eta);

std::string format_name(JobConfig::Format f);
JobConfig::Format parse_format(const std::string& name);

/// JSON round-trip for JobConfig (stable key order).
std::string config_to_json(const JobConfig& cfg);
JobConfig config_from_json(const std::string& text);

}  // namespace ustar
