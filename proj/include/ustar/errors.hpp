#pragma once

#include <stdexcept>
#include <string>

namespace ustar {

/// Operands that belong to different group specifications.
struct GroupMismatch : std::invalid_argument {
  explicit GroupMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Element with augmentation 0 where a unit was required.
struct AugmentationZero : std::domain_error {
  explicit AugmentationZero(const std::string& what) : std::domain_error(what) {}
};

/// Element with augmentation != 1 where a normalized unit was required.
struct NotNormalized : std::domain_error {
  explicit NotNormalized(const std::string& what) : std::domain_error(what) {}
};

/// Generator images that do not extend to an endomorphism of the group.
struct NotWellDefined : std::invalid_argument {
  explicit NotWellDefined(const std::string& what) : std::invalid_argument(what) {}
};

/// Candidate automorphism whose square is not the identity.
struct NotInvolutory : std::invalid_argument {
  explicit NotInvolutory(const std::string& what) : std::invalid_argument(what) {}
};

/// Explicit element set that is not a multiplicative group.
struct NotAGroup : std::invalid_argument {
  explicit NotAGroup(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested computation exceeds a configured cap.
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant violated.  Indicates a bug, not bad input.
struct ConsistencyFailure : std::logic_error {
  explicit ConsistencyFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ustar
