/* Lattice path tests: the four path models against brute force, the worked
   family examples, the determinant entries against single-path enumeration,
   and the unrefined determinant against direct tiling counts. */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "vsasm/amt.hpp"
#include "vsasm/paths.hpp"
#include "vsasm/symfunc.hpp"

using namespace vsasm;

namespace {

// uX_i + vX_i^-1 + w in uvwx(n).
LaurentPoly trinomial(RingPtr ring, int i) {
  return LaurentPoly::var_pow(ring, 0, 1) * LaurentPoly::var_pow(ring, 2 + i, 1) +
         LaurentPoly::var_pow(ring, 1, 1) * LaurentPoly::var_pow(ring, 2 + i, -1) +
         LaurentPoly::var_pow(ring, 2, 1);
}

// uX_i + vX_i^-1 in uvwx(n).
LaurentPoly hvpair(RingPtr ring, int i) {
  return LaurentPoly::var_pow(ring, 0, 1) * LaurentPoly::var_pow(ring, 2 + i, 1) +
         LaurentPoly::var_pow(ring, 1, 1) * LaurentPoly::var_pow(ring, 2 + i, -1);
}

LaurentPoly case2_reference(RingPtr r) {
  auto u = LaurentPoly::var_pow(r, 0, 1);
  auto v = LaurentPoly::var_pow(r, 1, 1);
  auto x1 = LaurentPoly::var_pow(r, 3, 1);
  auto x2 = LaurentPoly::var_pow(r, 4, 1);
  auto t1 = trinomial(r, 1), t2 = trinomial(r, 2);
  return v * x2 * t1 * t2 + x1 * x2 * t1 * t2 * t2 + u * x1.pow(2) * x2 * t1 * t2;
}

// Value at u = v = X_i = 1, w = -1; only the w exponent matters.
Int specialize_count(const LaurentPoly& p) {
  Int total = 0;
  for (const auto& t : p.terms()) total += (t.e[2] % 2 == 0) ? t.c : -t.c;
  return total;
}

// Fraction-free determinant of a small integer matrix.
Int int_matrix_det(std::vector<std::vector<Int>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int s = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) { s = r; break; }
      if (s < 0) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// The permutation forced on a third-model family by its start choices:
// left starts in decreasing order, then right starts in increasing order,
// inverted.  sigma[a] is the 0-based end index of the path from start a+1.
std::vector<int> forced_sigma(const std::vector<bool>& right) {
  int n = static_cast<int>(right.size());
  std::vector<int> seq;
  for (int i = n; i >= 1; --i)
    if (!right[i - 1]) seq.push_back(i);
  for (int i = 1; i <= n; ++i)
    if (right[i - 1]) seq.push_back(i);
  std::vector<int> sigma(n);
  for (int k = 0; k < n; ++k) sigma[seq[k] - 1] = k;
  return sigma;
}

int count_families(Interp interp, int n, RingPtr r) {
  int count = 0;
  for_each_family(interp, n, r, [&](const PathFamily&) { ++count; });
  return count;
}

}  // namespace

TEST_CASE("single path weights and step validation") {
  auto r = Ring::uvwx(3);
  auto u = LaurentPoly::var_pow(r, 0, 1);
  auto v = LaurentPoly::var_pow(r, 1, 1);
  auto w = LaurentPoly::var_pow(r, 2, 1);

  CHECK(path_weight(Interp::I1, {{-1, 1}, {0, 1}}, r) == w);

  // A single first-model path from (-5,5) to the third end point, crossing
  // the y-axis at height 8 and descending with one double-down step.
  PathPoints lone = {{-5, 5}, {-4, 6}, {-3, 6}, {-2, 7}, {-1, 8}, {0, 8},
                     {1, 7},  {2, 6},  {2, 4},  {3, 3},  {4, 2},  {5, 1},
                     {4, 1},  {3, 1},  {3, 0},  {3, -1}, {2, -1}};
  LaurentPoly expected = -(u * v * w.pow(2) * hvpair(r, 1).pow(2) * hvpair(r, 3));
  CHECK(path_weight(Interp::I1, lone, r) == expected);

  // Double-down steps may not cross below height one.
  CHECK_THROWS_AS(path_weight(Interp::I1, {{-1, 1}, {0, 2}, {0, 0}}, r),
                  std::invalid_argument);
  // Second-model vertical steps stop at height one.
  CHECK_THROWS_AS(path_weight(Interp::I2, {{1, 1}, {1, 0}}, r),
                  std::invalid_argument);
  // Diagonal steps are only available from height at most one.
  CHECK_THROWS_AS(path_weight(Interp::I3, {{1, 2}, {0, 1}}, r),
                  std::invalid_argument);
}

TEST_CASE("all routes agree for a single row") {
  auto r = Ring::uvwx(1);
  LaurentPoly expected = trinomial(r, 1);
  CHECK(gf_brute({0}, r) == expected);
  CHECK(enum_gf_interp1(1, r) == expected);
  CHECK(enum_gf_interp2(1, r) == expected);
  CHECK(enum_gf_interp3(1, r) == expected);
  CHECK(enum_gf_jt4(1, r) == expected);
  CHECK(det_gf_interp1(1, r) == expected);
  CHECK(det_gf_interp2(1, r) == expected);
  CHECK(det_gf_interp3(1, r) == expected);
  CHECK(det_gf_jt4(1, r) == expected);
}

TEST_CASE("family counts for two rows") {
  auto r = Ring::uvwx(2);
  CHECK(count_families(Interp::I1, 2, r) == 16);
  CHECK(count_families(Interp::I2, 2, r) == 3);
  CHECK(count_families(Interp::I3, 2, r) == 57);
}

TEST_CASE("first-model family weights for two rows") {
  // The sixteen family weights, up to the overall factor X1*X2.
  auto r = Ring::uvwx(2);
  auto u = LaurentPoly::var_pow(r, 0, 1);
  auto v = LaurentPoly::var_pow(r, 1, 1);
  auto w = LaurentPoly::var_pow(r, 2, 1);
  auto h1 = hvpair(r, 1), h2 = hvpair(r, 2);
  std::vector<LaurentPoly> expected = {
      w.pow(3),
      w.pow(2) * h1, w.pow(2) * h1,
      w.pow(2) * h2, w.pow(2) * h2,
      -(w * u * v), -(w * u * v),
      w * h1.pow(2), w * h2.pow(2),
      w * h1 * h2, w * h1 * h2, w * h1 * h2,
      h1.pow(2) * h2, h1 * h2.pow(2),
      w * u * v, w * u * v};
  auto x1x2 = LaurentPoly::var_pow(r, 3, 1) * LaurentPoly::var_pow(r, 4, 1);
  for (auto& e : expected) e = e * x1x2;
  for_each_family(Interp::I1, 2, r, [&](const PathFamily& f) {
    auto it = std::find(expected.begin(), expected.end(), f.weight);
    REQUIRE(it != expected.end());
    expected.erase(it);
  });
  CHECK(expected.empty());
}

TEST_CASE("all routes agree for two rows") {
  auto r = Ring::uvwx(2);
  LaurentPoly expected = case2_reference(r);
  CHECK(gf_brute(staircase_bottom(2), r) == expected);
  CHECK(enum_gf_interp1(2, r) == expected);
  CHECK(enum_gf_interp2(2, r) == expected);
  CHECK(enum_gf_interp3(2, r) == expected);
  CHECK(enum_gf_jt4(2, r) == expected);
  CHECK(det_gf_interp1(2, r) == expected);
  CHECK(det_gf_interp2(2, r) == expected);
  CHECK(det_gf_interp3(2, r) == expected);
  CHECK(det_gf_jt4(2, r) == expected);
}

TEST_CASE("all routes agree for three rows") {
  auto r = Ring::uvwx(3);
  LaurentPoly expected = gf_brute(staircase_bottom(3), r);
  CHECK(enum_gf_interp1(3, r) == expected);
  CHECK(enum_gf_interp2(3, r) == expected);
  CHECK(enum_gf_interp3(3, r) == expected);
  CHECK(enum_gf_jt4(3, r) == expected);
  CHECK(det_gf_interp1(3, r) == expected);
  CHECK(det_gf_interp2(3, r) == expected);
  CHECK(det_gf_interp3(3, r) == expected);
  CHECK(det_gf_jt4(3, r) == expected);
}

TEST_CASE("worked first-model family of six paths") {
  auto r = Ring::uvwx(6);
  std::vector<PathPoints> paths = {
      {{-1, 1}, {0, 1}},
      {{-2, 2}, {-1, 2}, {0, 2}, {1, 1}, {1, 0}},
      {{-3, 3}, {-2, 4}, {-1, 4}, {0, 5}, {0, 3}, {1, 2}, {2, 1}, {2, 0}, {2, -1}},
      {{-4, 4}, {-3, 5}, {-2, 6}, {-1, 6}, {0, 7}, {1, 6}, {2, 5}, {3, 4},
       {4, 3},  {5, 2},  {6, 1},  {6, 0},  {6, -1}, {6, -2}, {6, -3}, {6, -4},
       {5, -4}},
      {{-5, 5}, {-4, 5}, {-3, 6}, {-2, 7}, {-1, 8}, {0, 8}, {1, 7}, {1, 5},
       {1, 3},  {2, 2},  {3, 1},  {3, 0},  {3, -1}, {3, -2}},
      {{-6, 6}, {-5, 7}, {-4, 8}, {-3, 9}, {-2, 9}, {-1, 10}, {0, 10}, {1, 9},
       {2, 8},  {3, 7},  {3, 5},  {4, 4},  {4, 2},  {5, 1},   {5, 0},  {5, -1},
       {4, -1}, {4, -2}, {4, -3}}};
  auto u = LaurentPoly::var_pow(r, 0, 1);
  auto v = LaurentPoly::var_pow(r, 1, 1);
  auto w = LaurentPoly::var_pow(r, 2, 1);
  LaurentPoly expected =
      -(u.pow(5) * v.pow(5) * w.pow(9) * hvpair(r, 3) * hvpair(r, 6));
  for (int i = 1; i <= 6; ++i)
    expected = expected * LaurentPoly::var_pow(r, 2 + i, 5);
  CHECK(family_weight(Interp::I1, 6, paths, r) == expected);
}

TEST_CASE("worked second-model family of six paths") {
  auto r = Ring::uvwx(6);
  std::vector<PathPoints> paths = {
      {{1, 1}, {2, 1}},
      {{2, 2}, {3, 2}, {3, 1}, {2, 0}},
      {{3, 3}, {4, 3}, {4, 2}, {5, 2}, {5, 1}, {3, -1}, {2, -2}},
      {{4, 4}, {5, 4}, {5, 3}, {6, 3}, {6, 2}, {6, 1}, {4, 0}, {2, -1}},
      {{5, 5}, {6, 5}, {7, 5}, {7, 4}, {7, 3}, {7, 2}, {7, 1}, {6, 0},
       {4, -2}, {2, -3}},
      {{6, 6}, {7, 6}, {8, 6}, {8, 5}, {8, 4}, {8, 3}, {8, 2}, {8, 1},
       {7, 0}, {5, -1}, {3, -3}, {2, -4}}};
  auto u = LaurentPoly::var_pow(r, 0, 1);
  auto v = LaurentPoly::var_pow(r, 1, 1);
  auto w = LaurentPoly::var_pow(r, 2, 1);
  LaurentPoly expected = -(u.pow(3) * v.pow(3) * w.pow(5) * trinomial(r, 1) *
                           trinomial(r, 2).pow(2) * trinomial(r, 3).pow(2) *
                           trinomial(r, 4) * trinomial(r, 5).pow(2) *
                           trinomial(r, 6).pow(2));
  for (int i = 1; i <= 6; ++i)
    expected = expected * LaurentPoly::var_pow(r, 2 + i, 5);
  CHECK(family_weight(Interp::I2, 6, paths, r) == expected);
}

TEST_CASE("worked third-model family of four paths") {
  auto r = Ring::uvwx(4);
  // The path from start 3 begins at the rightmost top point (6,8).
  std::vector<PathPoints> paths = {
      {{4, 8}, {4, 7}, {4, 6}, {4, 5}, {5, 5}, {5, 4}, {5, 3}, {5, 2}, {5, 1},
       {4, 0}, {4, -1}, {3, -2}},
      {{3, 8}, {3, 7}, {3, 6}, {3, 5}, {3, 4}, {3, 3}, {4, 3}, {4, 2}, {4, 1},
       {3, 0}, {2, -1}},
      {{6, 8}, {6, 7}, {6, 6}, {6, 5}, {6, 4}, {6, 3}, {6, 2}, {6, 1}, {7, 1},
       {6, 0}, {5, -1}, {4, -2}, {4, -3}},
      {{1, 8}, {1, 7}, {1, 6}, {2, 6}, {2, 5}, {2, 4}, {2, 3}, {2, 2}, {2, 1},
       {1, 0}}};
  LaurentPoly expected =
      LaurentPoly::var_pow(r, 0, 5) * LaurentPoly::var_pow(r, 1, 3) *
      LaurentPoly::var_pow(r, 2, 2) * LaurentPoly::var_pow(r, 3, 4) *
      LaurentPoly::var_pow(r, 4, 4) * LaurentPoly::var_pow(r, 5, 3) *
      LaurentPoly::var_pow(r, 6, 3);
  CHECK(family_weight(Interp::I3, 4, paths, r) == expected);
}

TEST_CASE("worked fourth-model family of six paths") {
  auto r = Ring::uvwx(6);
  std::vector<PathPoints> paths = {
      {{1, 2}, {2, 2}, {2, 1}, {1, 0}},
      {{2, 4}, {2, 3}, {3, 3}, {3, 2}, {4, 2}, {4, 1}, {3, 0}, {2, -1}},
      {{3, 6}, {3, 5}, {3, 4}, {4, 4}, {5, 4}, {5, 3}, {5, 2}, {5, 1}, {4, 0},
       {4, -1}, {3, -2}},
      {{4, 8}, {4, 7}, {4, 6}, {5, 6}, {5, 5}, {6, 5}, {6, 4}, {6, 3}, {7, 3},
       {7, 2}, {7, 1}, {6, 0}, {5, -1}, {5, -2}, {4, -3}},
      {{5, 10}, {5, 9}, {5, 8}, {6, 8}, {6, 7}, {6, 6}, {7, 6}, {8, 6}, {8, 5},
       {8, 4},  {9, 4}, {9, 3}, {9, 2}, {9, 1}, {8, 0}, {8, -1}, {7, -2},
       {6, -3}, {5, -4}},
      {{6, 12}, {6, 11}, {6, 10}, {6, 9}, {7, 9}, {7, 8}, {7, 7}, {8, 7},
       {9, 7},  {9, 6},  {9, 5},  {10, 5}, {10, 4}, {10, 3}, {10, 2}, {10, 1},
       {10, 0}, {9, -1}, {9, -2}, {8, -3}, {7, -4}, {6, -5}}};
  LaurentPoly expected =
      LaurentPoly::var_pow(r, 0, 7) * LaurentPoly::var_pow(r, 1, 9) *
      LaurentPoly::var_pow(r, 2, 5) * LaurentPoly::var_pow(r, 3, 3) *
      LaurentPoly::var_pow(r, 4, 4) * LaurentPoly::var_pow(r, 5, 4) *
      LaurentPoly::var_pow(r, 6, 6) * LaurentPoly::var_pow(r, 7, 6) *
      LaurentPoly::var_pow(r, 8, 5);
  CHECK(family_weight(Interp::JT4, 6, paths, r) == expected);
}

TEST_CASE("start choices force the third-model connection") {
  for (int n = 1; n <= 3; ++n) {
    auto r = Ring::uvwx(n);
    for_each_family(Interp::I3, n, r, [&](const PathFamily& f) {
      CHECK(f.sigma == forced_sigma(f.right_start));
    });
  }
}

TEST_CASE("fourth-model families connect start i to end i") {
  std::vector<int> id3 = {0, 1, 2};
  for (int n = 1; n <= 3; ++n) {
    auto r = Ring::uvwx(n);
    std::vector<int> id(id3.begin(), id3.begin() + n);
    for_each_family(Interp::JT4, n, r,
                    [&](const PathFamily& f) { CHECK(f.sigma == id); });
  }
}

TEST_CASE("first-model matrix entries count single paths") {
  auto r = Ring::uvwx(4);
  CHECK(entry_interp1(1, 1, r) == trinomial(r, 1));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      CHECK(entry_interp1(i, j, r) == single_gf_interp1(i, j, r));
  // The single-path example above lives in the (5,3) entry.
  CHECK(entry_interp1(5, 3, r) == single_gf_interp1(5, 3, r));
}

TEST_CASE("second-model connection coefficients count connector paths") {
  auto r = Ring::uvwx(1);
  auto w = LaurentPoly::var_pow(r, 2, 1);
  CHECK(c_tj(2, 1, r) == LaurentPoly::constant(r, 1));
  CHECK(c_tj(3, 2, r) == -w);
  CHECK(c_tj(2, 2, r).is_zero());
  for (int j = 1; j <= 8; ++j)
    for (int t = 0; t <= 2 * j + 2; ++t)
      CHECK(c_tj(t, j, r) == c_tj_paths(t, j, r));
}

TEST_CASE("unrefined determinant matches the known counts and tilings") {
  std::vector<Int> counts = {1, 3, 26, 646, 45885};
  for (int n = 1; n <= 5; ++n) CHECK(unrefined_det(n) == counts[n - 1]);
  for (int n = 1; n <= 4; ++n) CHECK(count_tilings(n) == counts[n - 1]);
}

TEST_CASE("specialized fourth-model entries reduce to binomials") {
  // Setting u = v = X_i = 1 and w = -1 in the fourth-model entry gives
  // binom(i+j-1, 2j-i): the two integer matrices share their determinant.
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      Int entry = 0;
      for (int k = j; k <= 2 * j; ++k) {
        Int h = binom(k + i - 1, k - i);
        entry += (k % 2 == 0 ? 1 : -1) * binom(j, k - j) * h;
      }
      CHECK(entry == binom(i + j - 1, 2 * j - i));
    }
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = binom(i + j - 1, 2 * j - i);
    CHECK(int_matrix_det(m) == unrefined_det(n));
  }
}

TEST_CASE("determinant routes specialize to the counts") {
  std::vector<Int> counts = {1, 3, 26, 646, 45885};
  for (int n = 1; n <= 3; ++n) {
    auto r = Ring::uvwx(n);
    CHECK(specialize_count(det_gf_interp1(n, r)) == counts[n - 1]);
    CHECK(specialize_count(det_gf_interp2(n, r)) == counts[n - 1]);
    CHECK(specialize_count(det_gf_interp3(n, r)) == counts[n - 1]);
    CHECK(specialize_count(det_gf_jt4(n, r)) == counts[n - 1]);
  }
  auto r4 = Ring::uvwx(4);
  CHECK(specialize_count(det_gf_interp2(4, r4)) == counts[3]);
}

TEST_CASE("malformed families are rejected") {
  auto r = Ring::uvwx(1);
  CHECK(family_weight(Interp::I2, 1, {{{1, 1}, {2, 1}}}, r) == trinomial(r, 1));
  CHECK_THROWS_AS(family_weight(Interp::I1, 1, {{{0, 1}, {1, 1}}}, r),
                  std::invalid_argument);
  auto r2 = Ring::uvwx(2);
  // Both paths end at the first end point.
  CHECK_THROWS_AS(
      family_weight(Interp::I2, 2,
                    {{{1, 1}, {2, 1}}, {{2, 2}, {2, 1}}}, r2),
      std::invalid_argument);
  // Both paths pass through (0,2).
  CHECK_THROWS_AS(
      family_weight(Interp::I1, 2,
                    {{{-1, 1}, {0, 2}, {1, 1}, {1, 0}},
                     {{-2, 2}, {-1, 2}, {0, 2}, {1, 1}, {0, 1}}},
                    r2),
      std::invalid_argument);
}
