#include "ustar/zmatrix.hpp"

#include <algorithm>
#include <cstdlib>

#include "ustar/errors.hpp"

namespace ustar {

ZMat z_identity(std::size_t n) {
  ZMat m(n, ZVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat z_mul(const ZMat& a, const ZMat& b) {
  const std::size_t m = a.size();
  const std::size_t k = b.size();
  const std::size_t n = k ? b[0].size() : 0;
  ZMat out(m, ZVec(n, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != k) throw ConsistencyFailure("z_mul dimension mismatch");
    for (std::size_t j = 0; j < k; ++j) {
      const std::int64_t v = a[i][j];
      if (v == 0) continue;
      for (std::size_t c = 0; c < n; ++c) out[i][c] += v * b[j][c];
    }
  }
  return out;
}

ZVec z_mul_vec(const ZVec& row, const ZMat& m) {
  const std::size_t k = m.size();
  if (row.size() != k) throw ConsistencyFailure("z_mul_vec dimension mismatch");
  const std::size_t n = k ? m[0].size() : 0;
  ZVec out(n, 0);
  for (std::size_t j = 0; j < k; ++j) {
    const std::int64_t v = row[j];
    if (v == 0) continue;
    for (std::size_t c = 0; c < n; ++c) out[c] += v * m[j][c];
  }
  return out;
}

ZVec SmithForm::diagonal_entries() const {
  const std::size_t m = diagonal.size();
  const std::size_t n = m ? diagonal[0].size() : 0;
  ZVec d(std::min(m, n), 0);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = diagonal[i][i];
  return d;
}

SmithForm smith_normal_form(ZMat a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  SmithForm f;
  f.row_ops = z_identity(m);
  f.row_ops_inv = z_identity(m);
  f.col_ops = z_identity(n);
  f.col_ops_inv = z_identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(f.row_ops[i], f.row_ops[j]);
    for (auto& row : f.row_ops_inv) std::swap(row[i], row[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : f.col_ops) std::swap(row[i], row[j]);
    std::swap(f.col_ops_inv[i], f.col_ops_inv[j]);
  };
  // row[dst] += k * row[src]
  auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < n; ++c) a[dst][c] += k * a[src][c];
    for (std::size_t c = 0; c < m; ++c) f.row_ops[dst][c] += k * f.row_ops[src][c];
    for (std::size_t r = 0; r < m; ++r) f.row_ops_inv[r][src] -= k * f.row_ops_inv[r][dst];
  };
  // col[dst] += k * col[src]
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < m; ++r) a[r][dst] += k * a[r][src];
    for (std::size_t r = 0; r < n; ++r) f.col_ops[r][dst] += k * f.col_ops[r][src];
    for (std::size_t c = 0; c < n; ++c) f.col_ops_inv[src][c] -= k * f.col_ops_inv[dst][c];
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& v : a[i]) v = -v;
    for (auto& v : f.row_ops[i]) v = -v;
    for (std::size_t r = 0; r < m; ++r) f.row_ops_inv[r][i] = -f.row_ops_inv[r][i];
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = k, pj = k;
      std::int64_t best = 0;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
            best = std::abs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) {
        f.diagonal = std::move(a);
        return f;  // trailing block is zero; done
      }
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        add_row(i, k, -(a[i][k] / a[k][k]));
        if (a[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        add_col(j, k, -(a[k][j] / a[k][k]));
        if (a[k][j] != 0) clean = false;
      }
      if (!clean) continue;  // nonzero remainders; re-pivot on a smaller entry

      // divisibility chain: pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = k + 1; i < m && divides; ++i)
        for (std::size_t j = k + 1; j < n && divides; ++j)
          if (a[i][j] % a[k][k] != 0) {
            add_row(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (a[k][k] < 0) negate_row(k);
  }
  f.diagonal = std::move(a);
  return f;
}

std::optional<ZVec> solve_left_modular(const ZMat& rows, const ZVec& moduli,
                                       const ZVec& target) {
  const std::size_t r = rows.size();
  const std::size_t t = moduli.size();
  if (target.size() != t) throw ConsistencyFailure("solve_left_modular dimension mismatch");
  ZMat stacked = rows;
  for (auto& row : stacked)
    if (row.size() != t) throw ConsistencyFailure("solve_left_modular dimension mismatch");
  for (std::size_t j = 0; j < t; ++j) {
    ZVec rel(t, 0);
    rel[j] = moduli[j];
    stacked.push_back(std::move(rel));
  }
  SmithForm s = smith_normal_form(std::move(stacked));
  const ZVec z = z_mul_vec(target, s.col_ops);
  ZVec u(r + t, 0);
  for (std::size_t j = 0; j < t; ++j) {
    const std::int64_t dj = s.diagonal[j][j];
    if (dj == 0) {
      if (z[j] != 0) return std::nullopt;
      continue;
    }
    if (z[j] % dj != 0) return std::nullopt;
    u[j] = z[j] / dj;
  }
  ZVec w = z_mul_vec(u, s.row_ops);
  return ZVec(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
}

}  // namespace ustar
