/* Identity-catalogue test suite: anchor cases with hand-built expected
   values, the full default sweeps of every symbolic and integer identity,
   and the error behavior of the lookup front end. */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>

#include "vsasm/identities.hpp"
#include "vsasm/laurent.hpp"
#include "vsasm/symfunc.hpp"

using namespace vsasm;

namespace {

constexpr int U = 0, V = 1;

LaurentPoly mono(const RingPtr& ring, Int c, const std::map<int, int>& e) {
  Expo x(ring->size(), 0);
  for (const auto& [var, exp] : e) x[static_cast<size_t>(var)] = exp;
  return LaurentPoly::monomial(ring, std::move(c), x);
}

void sweep_passes(const std::string& name) {
  for (const auto& params : identity_default_params(name)) {
    const IdentityCase c = verify_identity(name, params);
    INFO("identity ", name, " params size ", params.size());
    CHECK(c.pass);
    CHECK(c.lhs == c.rhs);
    CHECK(c.name == name);
  }
}

}  // namespace

TEST_CASE("order-one antisymmetrizer case reduces to a single difference") {
  const IdentityCase c = verify_identity("lemma_general", {1});
  CHECK(c.pass);
  auto ring = c.lhs.ring();
  const LaurentPoly expected =
      LaurentPoly::var_pow(ring, 3, 1) - LaurentPoly::var_pow(ring, 4, 1);
  CHECK(c.lhs == expected);
  CHECK(c.rhs == expected);
}

TEST_CASE("antisymmetrized pair products match the power determinant") {
  sweep_passes("lemma_general");
}

TEST_CASE("telescoped power sum clears the two-term divisor") {
  sweep_passes("lemma_basis");
  // The divided form at l = 3.
  auto ring = Ring::uvwx(1);
  const int X1 = 3;
  const LaurentPoly quotient = mono(ring, 1, {{U, 2}, {X1, 2}}) +
                               mono(ring, 1, {{U, 1}, {V, 1}}) +
                               mono(ring, 1, {{V, 2}, {X1, -2}});
  const LaurentPoly divisor =
      mono(ring, 1, {{U, 1}, {X1, 1}}) - mono(ring, 1, {{V, 1}, {X1, -1}});
  const IdentityCase c = verify_identity("lemma_basis", {3});
  CHECK(c.lhs == divisor * quotient);
}

TEST_CASE("cofactor sums vanish below the top power and collapse at it") {
  sweep_passes("lemma_prefactor");
  const IdentityCase top = verify_identity("lemma_prefactor", {3, 2});
  CHECK(!top.rhs.is_zero());
  const IdentityCase low = verify_identity("lemma_prefactor", {3, 1});
  CHECK(low.rhs.is_zero());
  CHECK(low.lhs.is_zero());
}

TEST_CASE("bialternant transform holds on randomized coefficient lists") {
  int count = 0;
  for (const auto& params : identity_default_params("lemma_det")) {
    const IdentityCase c = verify_identity("lemma_det", params);
    CHECK(c.pass);
    ++count;
  }
  CHECK(count == 20);
}

TEST_CASE("split-alphabet convolution collapses to one complete function") {
  sweep_passes("eh_lemma");
}

TEST_CASE("paired determinant products factor into the transformed dets") {
  sweep_passes("jt3lem_1");
  sweep_passes("jt3lem_2");
}

TEST_CASE("single determinant quotients match their transformed dets") {
  sweep_passes("cor_1");
  sweep_passes("cor_2");
  sweep_passes("cor_3");
}

TEST_CASE("binomial convolution flattens the two-choice path weights") {
  sweep_passes("id_sum1");
}

TEST_CASE("alternating binomial sum equals the tiling-count matrix entry") {
  sweep_passes("id_sum2");
  // Entry values of the unrefined count matrix at small orders.
  CHECK(verify_identity("id_sum2", {1, 1}).lhs ==
        LaurentPoly::constant(Ring::uvwx(0), 1));
  CHECK(verify_identity("id_sum2", {2, 1}).pass);
  CHECK(verify_identity("id_sum2", {1, 2}).pass);
}

TEST_CASE("complete functions at any degree obey the inversion relation") {
  sweep_passes("neg_h");
  // Deep negative degrees are nonzero and carry global inverses.
  const IdentityCase c = verify_identity("neg_h", {2, -4});
  CHECK(!c.lhs.is_zero());
  // Band degrees vanish on both sides.
  const IdentityCase band = verify_identity("neg_h", {3, -2});
  CHECK(band.lhs.is_zero());
  CHECK(band.rhs.is_zero());
}

TEST_CASE("equal-variable specialization turns h into one binomial") {
  sweep_passes("hspecial");
}

TEST_CASE("catalogue lookup rejects unknown names and bad parameters") {
  CHECK_THROWS_AS(verify_identity("no_such_identity", {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("lemma_general", {}), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("lemma_general", {17}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("lemma_prefactor", {3, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("hspecial", {2, -2}), std::invalid_argument);
  CHECK_THROWS_AS(identity_default_params("nope"), std::invalid_argument);
}

TEST_CASE("full catalogue passes and covers every name") {
  const auto cases = identity_catalogue();
  std::map<std::string, int> seen;
  for (const auto& c : cases) {
    CHECK(c.pass);
    ++seen[c.name];
  }
  CHECK(seen.size() == identity_names().size());
  for (const auto& name : identity_names()) CHECK(seen[name] > 0);
  CHECK(cases.size() > 250);
}
