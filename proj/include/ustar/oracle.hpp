#pragma once

// Brute-force verification on desk-scale instances: explicit unit sets,
// subgroup closure, abelian invariants recovered from power maps, and
// checks of the decomposition, epimorphism and power-subgroup identities.

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "ustar/algebra.hpp"
#include "ustar/involution.hpp"

namespace ustar {

inline constexpr std::int64_t kDefaultEnumerationCap = 6561;    // 3^8
inline constexpr std::int64_t kDefaultCombinatorialCap = 59049; // 3^10

/// Explicit set of normalized units, hashed by coefficient vector.
class UnitSet {
 public:
  explicit UnitSet(GroupSpec g);

  const GroupSpec& group() const { return group_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<AlgebraElement>& elements() const { return elements_; }

  /// Rejects elements over another group or with augmentation != 1.
  /// Returns false when already present.
  bool insert(const AlgebraElement& x);
  bool contains(const AlgebraElement& x) const;

  bool set_equals(const UnitSet& o) const;

 private:
  struct CoeffHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const;
  };
  GroupSpec group_;
  std::vector<AlgebraElement> elements_;
  std::unordered_set<std::vector<std::int64_t>, CoeffHash> index_;
};

enum class UnitKind { All, Symmetric, Unitary };

/// All normalized units of F_p[G] (|V| = p^{|G|-1}), or the symmetric or
/// unitary ones among them.  Throws TooLarge when |V| exceeds the cap.
UnitSet enumerate_units(UnitKind kind, const GroupSpec& g, const InvolutionSpec& eta,
                        std::int64_t cap = kDefaultEnumerationCap);

/// Multiplicative closure of `gens` (all normalized, same group) and 1.
UnitSet closure(const GroupSpec& g, const std::vector<AlgebraElement>& gens,
                std::int64_t cap = kDefaultEnumerationCap);

/// Contains 1 and is closed under the product.  (Inverses come free in a
/// finite set of units of finite order.)
bool is_group(const UnitSet& t);

/// Invariants (f_1, f_2, ...) of a finite abelian p-group given as an
/// explicit set, recovered from the sizes of the iterated power images:
/// rank_i = log_p |T^{p^{i-1}}| - log_p |T^{p^i}| and f_i = rank_i - rank_{i+1}.
/// Throws NotAGroup when the set is not multiplicatively closed.
std::vector<std::int64_t> abelian_invariants(const UnitSet& t);

struct CheckResult {
  enum class Status { Pass, Fail, Skip };
  std::string name;
  Status status = Status::Fail;
  std::string detail;

  bool passed() const { return status == Status::Pass; }
};

const char* status_name(CheckResult::Status s);

/// closure(claimed) equals `target` setwise and the unit orders of the
/// claimed elements multiply to |target|; together these certify a basis
/// of a finite abelian group.
CheckResult verify_basis(const std::string& name,
                         const std::vector<AlgebraElement>& claimed,
                         const UnitSet& target,
                         std::int64_t cap = kDefaultEnumerationCap);

/// V = S x V_unitary: trivial intersection, order product, and the set
/// product covering all of V (which forces unique factorization).
CheckResult verify_decomposition(const DiagonalForm& d,
                                 std::int64_t cap = kDefaultEnumerationCap);

/// The images of x -> x^* x^{-1} and x -> x^* x over all of V equal the
/// enumerated unitary and symmetric sets.
CheckResult verify_epimorphisms(const DiagonalForm& d,
                                std::int64_t cap = kDefaultEnumerationCap);

/// {x^{p^i}} over the symmetric (resp. unitary) units equals the
/// symmetric (resp. unitary) units supported on G^{p^i}.
CheckResult verify_power_subgroup(const DiagonalForm& d, std::int64_t i,
                                  std::int64_t cap = kDefaultEnumerationCap);

/// No nontrivial product prod claimed[j]^{c_j} with 0 <= c_j < p lies in
/// V^p (detected by support on G^p).  With the order product equal to the
/// target order this certifies a basis without enumerating the target.
CheckResult independence_mod_p(const std::vector<AlgebraElement>& claimed,
                               std::int64_t cap = kDefaultCombinatorialCap);

}  // namespace ustar
