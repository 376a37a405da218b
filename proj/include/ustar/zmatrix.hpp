#pragma once

// Integer matrix normal forms used for subgroup basis extraction and for
// solving exponent congruences.  Matrices are tiny (rank of G plus a few
// rows), so the classic elimination algorithms are used as-is.

#include <cstdint>
#include <optional>
#include <vector>

namespace ustar {

using ZVec = std::vector<std::int64_t>;
using ZMat = std::vector<ZVec>;

ZMat z_identity(std::size_t n);
ZMat z_mul(const ZMat& a, const ZMat& b);
ZVec z_mul_vec(const ZVec& row, const ZMat& m);  // row vector times matrix

/// row_ops * input * col_ops = diagonal, with the mutually inverse
/// unimodular factors kept explicitly.  Diagonal entries are nonnegative
/// and form a divisibility chain d1 | d2 | ...
struct SmithForm {
  ZMat diagonal;
  ZMat row_ops, row_ops_inv;
  ZMat col_ops, col_ops_inv;

  ZVec diagonal_entries() const;
};

SmithForm smith_normal_form(ZMat input);

/// Coefficients x with x * rows ≡ target componentwise mod `moduli`,
/// or nullopt when the congruence has no solution.
std::optional<ZVec> solve_left_modular(const ZMat& rows, const ZVec& moduli,
                                       const ZVec& target);

}  // namespace ustar
