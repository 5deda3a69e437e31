/* Arrowed-monotone-triangle tests: enumeration counts, the worked weight
   examples, the reference generating function, and agreement of the
   operator, antisymmetrizer, and bialternant routes with brute force. */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "vsasm/amt.hpp"
#include "vsasm/symfunc.hpp"

using namespace vsasm;

namespace {

// uX_i + vX_i^-1 + w in uvwx(n).
LaurentPoly trinomial(RingPtr ring, int i) {
  return LaurentPoly::var_pow(ring, 0, 1) * LaurentPoly::var_pow(ring, 2 + i, 1) +
         LaurentPoly::var_pow(ring, 1, 1) * LaurentPoly::var_pow(ring, 2 + i, -1) +
         LaurentPoly::var_pow(ring, 2, 1);
}

LaurentPoly case2_reference(RingPtr r) {
  auto u = LaurentPoly::var_pow(r, 0, 1);
  auto v = LaurentPoly::var_pow(r, 1, 1);
  auto x1 = LaurentPoly::var_pow(r, 3, 1);
  auto x2 = LaurentPoly::var_pow(r, 4, 1);
  auto t1 = trinomial(r, 1), t2 = trinomial(r, 2);
  return v * x2 * t1 * t2 + x1 * x2 * t1 * t2 * t2 + u * x1.pow(2) * x2 * t1 * t2;
}

std::vector<Row> bottoms_with_entries(int n, int maxval) {
  // All strictly increasing rows of length n with entries in 0..maxval.
  std::vector<Row> out;
  Row cur(n);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int x = lo; x <= maxval; ++x) {
      cur[pos] = x;
      rec(pos + 1, x + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("monotone triangle enumeration counts") {
  CHECK(count_mt({0}) == 1);
  CHECK(count_amt({0}) == 3);
  CHECK(count_mt({0, 2}) == 3);
  CHECK(count_amt({0, 2}) == 45);
  // Triangles produced are valid and distinct.
  auto ts = enumerate_mt({0, 2, 4});
  CHECK(ts.size() == 26);
  std::set<std::vector<Row>> seen;
  for (const auto& t : ts) {
    CHECK(t.valid());
    CHECK(t.bottom() == Row{0, 2, 4});
    seen.insert(t.rows);
  }
  CHECK(seen.size() == ts.size());
}

TEST_CASE("staircase monotone triangle counts match the known sequence") {
  const long expected[] = {1, 3, 26, 646, 45885};
  for (int n = 1; n <= 5; ++n)
    CHECK(count_mt(staircase_bottom(n)) == expected[n - 1]);
}

TEST_CASE("decoration rules and the 3^f law") {
  // Middle triangle with bottom (0,2): all three entries free.
  MonotoneTriangle t;
  t.rows = {{1}, {0, 2}};
  CHECK(entry_status(t, 0, 0) == EntryStatus::Free);
  CHECK(entry_status(t, 1, 0) == EntryStatus::Free);
  CHECK(entry_status(t, 1, 1) == EntryStatus::Free);
  // First triangle: lower-left 0 equals its ne-neighbor, forced nw-arrow.
  t.rows = {{0}, {0, 2}};
  CHECK(entry_status(t, 1, 0) == EntryStatus::ForcedNW);
  CHECK(entry_status(t, 1, 1) == EntryStatus::Free);
  // Third triangle: lower-right 2 equals its nw-neighbor, forced ne-arrow.
  t.rows = {{2}, {0, 2}};
  CHECK(entry_status(t, 1, 1) == EntryStatus::ForcedNE);

  // Streamed AMTs are valid, distinct, and 3^f many.
  int count = 0;
  for_each_amt({0, 2}, [&](const ArrowedMT& a) {
    CHECK(a.valid());
    ++count;
  });
  CHECK(count == 45);
}

TEST_CASE("weight of the six-row worked example") {
  ArrowedMT a;
  a.base.rows = {{4}, {4, 5}, {3, 4, 6}, {2, 3, 6, 8}, {1, 2, 5, 6, 9}, {0, 2, 4, 6, 8, 10}};
  const Arrow B = Arrow::Both, L = Arrow::NW, R = Arrow::NE;
  a.dec = {{B}, {L, L}, {B, R, R}, {R, R, L, B}, {L, R, B, R, L}, {L, L, B, L, B, R}};
  REQUIRE(a.valid());
  auto ring = Ring::uvwx(6);
  Expo e(ring->size(), 0);
  e[0] = 7;  // u
  e[1] = 8;  // v
  e[2] = 6;  // w
  int xexp[] = {4, 3, 6, 7, 4, 5};
  for (int i = 0; i < 6; ++i) e[3 + i] = xexp[i];
  CHECK(amt_weight(a, ring) == LaurentPoly::monomial(ring, 1, e));
}

TEST_CASE("single-entry weights") {
  auto ring = Ring::uvwx(1);
  ArrowedMT a;
  a.base.rows = {{0}};
  a.dec = {{Arrow::NE}};
  CHECK(amt_weight(a, ring) ==
        LaurentPoly::var_pow(ring, 0, 1) * LaurentPoly::var_pow(ring, 3, 1));
  a.dec = {{Arrow::Both}};
  CHECK(amt_weight(a, ring) == LaurentPoly::var_pow(ring, 2, 1));
  a.dec = {{Arrow::NW}};
  CHECK(amt_weight(a, ring) ==
        LaurentPoly::var_pow(ring, 1, 1) * LaurentPoly::var_pow(ring, 3, -1));
}

TEST_CASE("reference generating function") {
  auto r1 = Ring::uvwx(1);
  CHECK(gf_brute({0}, r1) == trinomial(r1, 1));

  auto r2 = Ring::uvwx(2);
  CHECK(gf_brute({0, 2}, r2) == case2_reference(r2));

  // gf_brute agrees with summing explicit AMT weights.
  for (const Row& bottom : {Row{0, 2}, Row{1, 3}, Row{0, 1, 2}, Row{0, 2, 5}}) {
    auto ring = Ring::uvwx(static_cast<int>(bottom.size()));
    LaurentPoly total = LaurentPoly::zero(ring);
    for_each_amt(bottom, [&](const ArrowedMT& a) { total += amt_weight(a, ring); });
    CHECK(total == gf_brute(bottom, ring));
  }
}

TEST_CASE("specializations of the generating function") {
  // u=v=1, w=-1, X=1 counts undecorated triangles; all-ones counts AMTs.
  std::vector<Rat> mtspec = {1, 1, -1, 1, 1};
  std::vector<Rat> amtspec = {1, 1, 1, 1, 1};
  CHECK(gf_eval({0, 2}, mtspec) == 3);
  CHECK(gf_eval({0, 2}, amtspec) == 45);
  for (const Row& bottom : bottoms_with_entries(2, 4)) {
    CHECK(gf_eval(bottom, mtspec) == Rat(count_mt(bottom)));
    CHECK(gf_eval(bottom, amtspec) == Rat(count_amt(bottom)));
  }
  // Counts for the staircase via evaluation.
  const long expected[] = {1, 3, 26, 646, 45885};
  for (int n = 1; n <= 5; ++n) {
    std::vector<Rat> spec(n + 3, Rat(1));
    spec[2] = -1;
    CHECK(gf_eval(staircase_bottom(n), spec) == expected[n - 1]);
  }
  // A generic rational point agrees with the expanded polynomial.
  auto r2 = Ring::uvwx(2);
  std::vector<Rat> pt = {Rat(2), Rat(-3), Rat(1, 2), Rat(5, 3), Rat(-7, 4)};
  CHECK(gf_eval({0, 2}, pt) == gf_brute({0, 2}, r2).eval(pt));
}

TEST_CASE("operator route equals brute force") {
  auto r1 = Ring::uvwx(1);
  CHECK(gf_operator({0}, r1) == trinomial(r1, 1));
  auto r2 = Ring::uvwx(2);
  CHECK(gf_operator({0, 2}, r2) == case2_reference(r2));
  auto r3 = Ring::uvwx(3);
  CHECK(gf_operator({0, 1, 3}, r3) == gf_brute({0, 1, 3}, r3));
}

TEST_CASE("antisymmetrizer route equals brute force") {
  auto r1 = Ring::uvwx(1);
  CHECK(gf_antisym({0}, r1) == trinomial(r1, 1));
  auto r2 = Ring::uvwx(2);
  CHECK(gf_antisym({0, 2}, r2) == case2_reference(r2));
  auto r3 = Ring::uvwx(3);
  CHECK(gf_antisym({1, 2, 4}, r3) == gf_brute({1, 2, 4}, r3));
}

TEST_CASE("all three routes agree on every small bottom row") {
  for (int n = 1; n <= 3; ++n) {
    auto ring = Ring::uvwx(n);
    for (const Row& bottom : bottoms_with_entries(n, 6)) {
      LaurentPoly ref = gf_brute(bottom, ring);
      CHECK(gf_operator(bottom, ring) == ref);
      CHECK(gf_antisym(bottom, ring) == ref);
    }
  }
}

TEST_CASE("bialternant route for the staircase bottom row") {
  auto r1 = Ring::uvwx(1);
  CHECK(gf_bialternant(1, r1) == trinomial(r1, 1));
  auto r2 = Ring::uvwx(2);
  CHECK(gf_bialternant(2, r2) == case2_reference(r2));
  auto r3 = Ring::uvwx(3);
  CHECK(gf_bialternant(3, r3) == gf_brute(staircase_bottom(3), r3));
  // n=3 specialization: 26 monotone triangles.
  std::vector<Rat> spec = {1, 1, -1, 1, 1, 1};
  CHECK(gf_bialternant(3, r3).eval(spec) == 26);
  auto r4 = Ring::uvwx(4);
  CHECK(gf_bialternant(4, r4) == gf_brute(staircase_bottom(4), r4));
}

TEST_CASE("ASM and monotone triangle conversions") {
  // The worked 7x7 pair: rotated matrix and its monotone triangle.
  Matrix b = {
      {0, 0, 0, 0, 1, 0, 0},
      {0, 0, 1, 0, -1, 1, 0},
      {0, 1, -1, 1, 0, 0, 0},
      {1, -1, 1, -1, 1, -1, 1},
      {0, 1, -1, 1, 0, 0, 0},
      {0, 0, 1, 0, -1, 1, 0},
      {0, 0, 0, 0, 1, 0, 0},
  };
  REQUIRE(is_asm(b));
  MonotoneTriangle full = asm_to_mt(b);
  std::vector<Row> expect = {{5},          {3, 6},          {2, 4, 6},
                             {1, 3, 5, 7}, {1, 2, 4, 5, 7}, {1, 2, 3, 4, 6, 7},
                             {1, 2, 3, 4, 5, 6, 7}};
  CHECK(full.rows == expect);
  CHECK(mt_to_asm(full) == b);

  // The vertically symmetric original it came from.
  Matrix a = {
      {0, 0, 0, 1, 0, 0, 0},
      {0, 1, 0, -1, 0, 1, 0},
      {1, -1, 0, 1, 0, -1, 1},
      {0, 0, 1, -1, 1, 0, 0},
      {0, 1, -1, 1, -1, 1, 0},
      {0, 0, 1, -1, 1, 0, 0},
      {0, 0, 0, 1, 0, 0, 0},
  };
  REQUIRE(is_vsasm(a));
  MonotoneTriangle half = vsasm_to_mt(a);
  CHECK(half.rows == std::vector<Row>{{3}, {1, 4}, {0, 2, 4}});
  CHECK(mt_to_vsasm(half) == a);
}

TEST_CASE("VSASM correspondence is a bijection at small order") {
  for (int n = 1; n <= 3; ++n) {
    // Forward: every staircase triangle encodes a distinct VSASM.
    std::set<Matrix> images;
    int total = 0;
    for_each_mt(staircase_bottom(n), [&](const MonotoneTriangle& t) {
      Matrix m = mt_to_vsasm(t);
      CHECK(is_vsasm(m));
      CHECK(vsasm_to_mt(m).rows == t.rows);
      images.insert(std::move(m));
      ++total;
    });
    CHECK(static_cast<int>(images.size()) == total);

    // Surjectivity: filter all ASMs of order 2n+1 for vertical symmetry.
    if (n <= 2) {
      Row full(2 * n + 1);
      std::iota(full.begin(), full.end(), 1);
      int symmetric = 0;
      for_each_mt(full, [&](const MonotoneTriangle& t) {
        if (is_vsasm(mt_to_asm(t))) ++symmetric;
      });
      CHECK(symmetric == total);
    }
  }
}
