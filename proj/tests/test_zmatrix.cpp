#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ustar/zmatrix.hpp"

using namespace ustar;

namespace {

bool is_identity(const ZMat& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

TEST_CASE("smith normal form on a fixed matrix") {
  // [[2,4,4],[-6,6,12],[10,4,16]] has invariant factors 2, 2, 156
  ZMat a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  SmithForm f = smith_normal_form(a);
  CHECK(f.diagonal_entries() == ZVec{2, 2, 156});
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 5;
    const std::size_t n = 1 + rng() % 5;
    ZMat a(m, ZVec(n, 0));
    for (auto& row : a)
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % 19) - 9;

    SmithForm f = smith_normal_form(a);

    // row_ops * a * col_ops == diagonal
    CHECK(z_mul(z_mul(f.row_ops, a), f.col_ops) == f.diagonal);
    // the tracked inverses really are inverses
    CHECK(is_identity(z_mul(f.row_ops, f.row_ops_inv)));
    CHECK(is_identity(z_mul(f.row_ops_inv, f.row_ops)));
    CHECK(is_identity(z_mul(f.col_ops, f.col_ops_inv)));
    CHECK(is_identity(z_mul(f.col_ops_inv, f.col_ops)));
    // diagonal: off entries zero, chain d1 | d2 | ...
    const ZVec d = f.diagonal_entries();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(f.diagonal[i][j] == 0);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0)
        CHECK(d[i + 1] % d[i] == 0);
      else
        CHECK(d[i + 1] == 0);
    }
  }
}

TEST_CASE("solve_left_modular recovers planted solutions") {
  std::mt19937_64 rng(7);
  const ZVec moduli{9, 3, 27};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    ZMat rows(r, ZVec(3, 0));
    for (auto& row : rows)
      for (std::size_t j = 0; j < 3; ++j)
        row[j] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(moduli[j]));
    ZVec x(r, 0);
    for (auto& v : x) v = static_cast<std::int64_t>(rng() % 27);
    ZVec target = z_mul_vec(x, rows);
    for (std::size_t j = 0; j < 3; ++j) target[j] = ((target[j] % moduli[j]) + moduli[j]) % moduli[j];

    auto sol = solve_left_modular(rows, moduli, target);
    REQUIRE(sol.has_value());
    ZVec check = z_mul_vec(*sol, rows);
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(((check[j] - target[j]) % moduli[j] + moduli[j]) % moduli[j] == 0);
  }
}

TEST_CASE("solve_left_modular reports unsolvable congruences") {
  // only multiples of 3 are reachable mod 9
  const ZMat rows = {{3}};
  const ZVec moduli{9};
  CHECK(!solve_left_modular(rows, moduli, ZVec{1}).has_value());
  CHECK(solve_left_modular(rows, moduli, ZVec{6}).has_value());
}
