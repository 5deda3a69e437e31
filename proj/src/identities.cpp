/* Identity instances are verified with both sides constructed from scratch:
   the raw side from determinants, antisymmetrized products, or explicit
   coefficient sums, the transformed side from the rewritten expressions.
   Nothing is shared between the two constructions beyond the polynomial
   core, so an equality here is evidence and not a tautology. */
#include "vsasm/identities.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <stdexcept>

#include "vsasm/symfunc.hpp"

namespace vsasm {

namespace {

constexpr int U = 0, V = 1, W = 2;
int xi(int i) { return 2 + i; }

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

LaurentPoly xv(const RingPtr& ring, int i, int e = 1) {
  return LaurentPoly::var_pow(ring, xi(i), e);
}

// c * u^du * v^dv * X_i^dx (i = 0 means no X factor)
LaurentPoly uvx_mono(const RingPtr& ring, Int c, int du, int dv, int i = 0,
                     int dx = 0) {
  Expo e(ring->size(), 0);
  e[U] = du;
  e[V] = dv;
  if (i > 0) e[static_cast<size_t>(xi(i))] = dx;
  return LaurentPoly::monomial(ring, std::move(c), e);
}

LaurentPoly ux(const RingPtr& ring, int i) { return uvx_mono(ring, 1, 1, 0, i, 1); }
LaurentPoly vx_inv(const RingPtr& ring, int i) {
  return uvx_mono(ring, 1, 0, 1, i, -1);
}

// Exponent vector with a single variable set.
Expo unit_expo(const RingPtr& ring, int var, int e) {
  Expo x(ring->size(), 0);
  x[static_cast<size_t>(var)] = e;
  return x;
}

// Exponent vector of (u v)^e.
Expo uv_expo(const RingPtr& ring, int e) {
  Expo x(ring->size(), 0);
  x[U] = e;
  x[V] = e;
  return x;
}

// u X_1, ..., u X_n, v X_1^-1, ..., v X_n^-1
std::vector<LaurentPoly> uv_alphabet(const RingPtr& ring, int n) {
  std::vector<LaurentPoly> a;
  for (int i = 1; i <= n; ++i) a.push_back(ux(ring, i));
  for (int i = 1; i <= n; ++i) a.push_back(vx_inv(ring, i));
  return a;
}

// u X_lo, v X_lo^-1, ..., u X_hi, v X_hi^-1; empty when lo > hi
std::vector<LaurentPoly> uv_alphabet_range(const RingPtr& ring, int lo, int hi) {
  std::vector<LaurentPoly> a;
  for (int i = lo; i <= hi; ++i) {
    a.push_back(ux(ring, i));
    a.push_back(vx_inv(ring, i));
  }
  return a;
}

// e_k over a possibly empty argument list
LaurentPoly elem0(const RingPtr& ring, long k,
                  const std::vector<LaurentPoly>& args) {
  if (args.empty())
    return k == 0 ? LaurentPoly::constant(ring, 1) : LaurentPoly::zero(ring);
  return elem_sym(k, args);
}

void for_each_perm(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> sigma(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = i + 1;
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (sigma[static_cast<size_t>(a)] > sigma[static_cast<size_t>(b)]) ++inv;
    fn(sigma, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

// h_d by its raw definition: for d >= 0 the sum over nonnegative exponent
// vectors, for d <= -(#args) the signed sum over strictly negative ones,
// zero in the band between.  Arguments must be coefficient-one monomials;
// kept separate from the library h on purpose.
LaurentPoly hom_raw(const RingPtr& ring, long d,
                    const std::vector<LaurentPoly>& args) {
  const long m = static_cast<long>(args.size());
  std::vector<Expo> base;
  for (const auto& a : args) {
    if (a.term_count() != 1 || a.terms()[0].c != 1)
      throw std::invalid_argument("hom_raw: arguments must be unit monomials");
    base.push_back(a.terms()[0].e);
  }
  if (m == 0)
    return d == 0 ? LaurentPoly::constant(ring, 1) : LaurentPoly::zero(ring);
  if (d < 0 && d > -m) return LaurentPoly::zero(ring);
  std::vector<Term> raw;
  const Int sign = (d >= 0 || m % 2 == 1) ? 1 : -1;
  std::vector<long> expo(static_cast<size_t>(m), 0);
  std::function<void(long, long)> rec = [&](long k, long left) {
    const long rest = m - k - 1;
    if (rest == 0) {
      if ((d >= 0 && left >= 0) || (d < 0 && left <= -1)) {
        expo[static_cast<size_t>(k)] = left;
        Expo e(ring->size(), 0);
        for (long p = 0; p < m; ++p)
          for (size_t v = 0; v < e.size(); ++v)
            e[v] += static_cast<std::int32_t>(expo[static_cast<size_t>(p)]) *
                    base[static_cast<size_t>(p)][v];
        raw.push_back({std::move(e), sign});
      }
      return;
    }
    if (d >= 0) {
      for (long c = 0; c <= left; ++c) {
        expo[static_cast<size_t>(k)] = c;
        rec(k + 1, left - c);
      }
    } else {
      for (long c = -1; c >= left + rest; --c) {
        expo[static_cast<size_t>(k)] = c;
        rec(k + 1, left - c);
      }
    }
  };
  rec(0, d);
  return LaurentPoly::from_terms(ring, std::move(raw));
}

// ---- the individual identities ----------------------------------------

IdentityCase make_case(std::string name, std::vector<long> params,
                       LaurentPoly lhs, LaurentPoly rhs) {
  IdentityCase c{std::move(name), std::move(params), std::move(lhs),
                 std::move(rhs), false};
  c.pass = c.lhs == c.rhs;
  return c;
}

// det(Y_i^j - Z_i^j) equals the signed sum over simultaneous permutations
// of both alphabets of prod_{i<=j} (Y_j - Z_i).
IdentityCase do_lemma_general(long n) {
  require(n >= 1 && n <= 4, "lemma_general: n must be in 1..4");
  const int nn = static_cast<int>(n);
  auto ring = Ring::uvwx(2 * nn);
  auto Y = [&](int i) { return xv(ring, i); };
  auto Z = [&](int i) { return xv(ring, nn + i); };
  PolyMatrix m(ring, static_cast<size_t>(nn));
  for (int i = 1; i <= nn; ++i)
    for (int j = 1; j <= nn; ++j)
      m.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) =
          Y(i).pow(static_cast<unsigned>(j)) - Z(i).pow(static_cast<unsigned>(j));
  LaurentPoly lhs = det_poly(m);
  LaurentPoly rhs = LaurentPoly::zero(ring);
  for_each_perm(nn, [&](const std::vector<int>& sigma, int sign) {
    LaurentPoly t = LaurentPoly::constant(ring, 1);
    for (int i = 1; i <= nn; ++i)
      for (int j = i; j <= nn; ++j)
        t = t * (Y(sigma[static_cast<size_t>(j - 1)]) -
                 Z(sigma[static_cast<size_t>(i - 1)]));
    rhs += t.scaled(sign);
  });
  return make_case("lemma_general", {n}, std::move(lhs), std::move(rhs));
}

// Bialternant-to-Jacobi-Trudi transform for random univariate Laurent
// coefficient lists f_j, compared after clearing the Vandermonde product.
IdentityCase do_lemma_det(long n, long seed) {
  require(n >= 1 && n <= 3, "lemma_det: n must be in 1..3");
  require(seed >= 0, "lemma_det: seed must be nonnegative");
  const int nn = static_cast<int>(n);
  auto ring = Ring::uvwx(nn);
  std::mt19937 rng(static_cast<unsigned>(1000003 * n + seed));
  std::vector<std::map<int, long>> f(static_cast<size_t>(nn));
  for (auto& fj : f) {
    const int nterms = 2 + static_cast<int>(rng() % 3u);
    for (int t = 0; t < nterms; ++t) {
      const int k = -3 + static_cast<int>(rng() % 8u);
      long c = 1 + static_cast<long>(rng() % 5u);
      if (rng() % 2u) c = -c;
      fj[k] += c;
    }
    for (auto it = fj.begin(); it != fj.end();)
      it = it->second == 0 ? fj.erase(it) : std::next(it);
  }
  PolyMatrix num(ring, static_cast<size_t>(nn));
  PolyMatrix tr(ring, static_cast<size_t>(nn));
  for (int i = 1; i <= nn; ++i) {
    std::vector<LaurentPoly> prefix;
    for (int p = 1; p <= i; ++p) prefix.push_back(xv(ring, p));
    for (int j = 1; j <= nn; ++j) {
      LaurentPoly a = LaurentPoly::zero(ring);
      LaurentPoly b = LaurentPoly::zero(ring);
      for (const auto& [k, c] : f[static_cast<size_t>(j - 1)]) {
        a += xv(ring, i, k).scaled(c);
        b += hom_sym(k - i + 1, prefix).scaled(c);
      }
      num.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = a;
      tr.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = b;
    }
  }
  std::vector<int> xvars;
  for (int p = 1; p <= nn; ++p) xvars.push_back(xi(p));
  LaurentPoly lhs = det_poly(num);
  LaurentPoly rhs = det_poly(tr) * vandermonde(ring, xvars);
  return make_case("lemma_det", {n, seed}, std::move(lhs), std::move(rhs));
}

// (u^l X^l - v^l X^-l) equals (u X - v X^-1) times the telescoped sum of
// powers of (u X + v X^-1).
IdentityCase do_lemma_basis(long l) {
  require(l >= 0 && l <= 12, "lemma_basis: l must be in 0..12");
  auto ring = Ring::uvwx(1);
  const int li = static_cast<int>(l);
  LaurentPoly lhs =
      uvx_mono(ring, 1, li, 0, 1, li) - uvx_mono(ring, 1, 0, li, 1, -li);
  LaurentPoly base = ux(ring, 1) + vx_inv(ring, 1);
  LaurentPoly sum = LaurentPoly::zero(ring);
  for (long r = 0; l - 2 * r - 1 >= 0; ++r) {
    Int c = binom(l - r - 1, r);
    if (r % 2) c = -c;
    sum += base.pow(static_cast<unsigned>(l - 2 * r - 1))
               .scaled(c)
               .shifted(uv_expo(ring, static_cast<int>(r)));
  }
  LaurentPoly rhs = (ux(ring, 1) - vx_inv(ring, 1)) * sum;
  return make_case("lemma_basis", {l}, std::move(lhs), std::move(rhs));
}

// Partial-fraction delta: the signed sum of (-u X_l - v X_l^-1)^m over the
// cofactor products collapses to the full product exactly when m = n-1.
IdentityCase do_lemma_prefactor(long n, long m) {
  require(n >= 1 && n <= 4, "lemma_prefactor: n must be in 1..4");
  require(m >= 0 && m <= n - 1, "lemma_prefactor: m must be in 0..n-1");
  const int nn = static_cast<int>(n);
  auto ring = Ring::uvwx(nn);
  auto pair_factor = [&](int i, int j) {
    // (X_j - X_i) (u - v X_i^-1 X_j^-1)
    Expo e(ring->size(), 0);
    e[static_cast<size_t>(xi(i))] = -1;
    e[static_cast<size_t>(xi(j))] = -1;
    e[V] = 1;
    LaurentPoly cross = LaurentPoly::monomial(ring, 1, e);
    return (xv(ring, j) - xv(ring, i)) *
           (LaurentPoly::var_pow(ring, U, 1) - cross);
  };
  LaurentPoly lhs = LaurentPoly::zero(ring);
  for (int l = 1; l <= nn; ++l) {
    LaurentPoly t = (ux(ring, l) + vx_inv(ring, l)).pow(static_cast<unsigned>(m));
    if (m % 2) t = -t;
    if (l % 2 == 0) t = -t;
    for (int i = 1; i <= nn; ++i)
      for (int j = i + 1; j <= nn; ++j)
        if (i != l && j != l) t = t * pair_factor(i, j);
    lhs += t;
  }
  LaurentPoly rhs = LaurentPoly::zero(ring);
  if (m == n - 1) {
    rhs = LaurentPoly::constant(ring, 1);
    for (int i = 1; i <= nn; ++i)
      for (int j = i + 1; j <= nn; ++j) rhs = rhs * pair_factor(i, j);
  }
  return make_case("lemma_prefactor", {n, m}, std::move(lhs), std::move(rhs));
}

// e/h convolution over the split alphabet collapsing to a single h on the
// truncated alphabet; the one-half at l = 1 is cleared by doubling.
IdentityCase do_eh_lemma(long n, long m, long i) {
  require(n >= 1 && n <= 3, "eh_lemma: n must be in 1..3");
  require(i >= 1 && i <= n, "eh_lemma: i must be in 1..n");
  require(m >= -n && m <= 8, "eh_lemma: m must be in -n..8");
  const int nn = static_cast<int>(n);
  const int ii = static_cast<int>(i);
  auto ring = Ring::uvwx(nn);
  const auto full = uv_alphabet_range(ring, 1, nn);
  const auto tail = uv_alphabet_range(ring, nn - ii + 2, nn);
  LaurentPoly lhs = LaurentPoly::zero(ring);
  for (long l = 1; l <= n; ++l) {
    LaurentPoly bracket =
        hom_sym(m + l - 1, full) +
        hom_sym(m - l + 1, full).shifted(uv_expo(ring, static_cast<int>(l - 1)));
    LaurentPoly t = elem0(ring, i - l, tail) * bracket;
    t = t.scaled(l == 1 ? 1 : 2);
    if ((i + l) % 2) t = -t;
    lhs += t;
  }
  LaurentPoly rhs =
      hom_sym(m + i - 1, uv_alphabet_range(ring, 1, nn - ii + 1)).scaled(2);
  return make_case("eh_lemma", {n, m, i}, std::move(lhs), std::move(rhs));
}

// Shared building blocks of the paired-determinant identities.
struct JtParts {
  RingPtr ring;
  int n;
  LaurentPoly det_minus;   // det(Y_i^j - Z_i^j)
  LaurentPoly det_plus;    // det(Y_i^j + Z_i^j)
  LaurentPoly det_plus0;   // det(Y_i^{j-1} + Z_i^{j-1})
  LaurentPoly m1;          // det of the h_{k+i-n-1} + (uv)^{i-1} h_{k-i-n+1} matrix
  LaurentPoly m2;          // det of the h_{k-i+1} - (uv)^{n-i+1} h_{k+i-2n-1} matrix
  LaurentPoly m3;          // det of the (n-1)-order h_{k-i} - (uv)^{n-i} h_{k+i-2n} matrix
};

JtParts jt_parts(long n) {
  const int nn = static_cast<int>(n);
  auto ring = Ring::uvwx(nn);
  JtParts out{ring, nn, LaurentPoly::zero(ring), LaurentPoly::zero(ring),
              LaurentPoly::zero(ring), LaurentPoly::zero(ring),
              LaurentPoly::zero(ring), LaurentPoly::zero(ring)};
  auto Y = [&](int i) { return uvx_mono(ring, 1, 2, 0, i, 2) + uvx_mono(ring, 1, 1, 0, i, 1).shifted(unit_expo(ring, W, 1)); };
  auto Z = [&](int i) { return uvx_mono(ring, 1, 0, 2, i, -2) + uvx_mono(ring, 1, 0, 1, i, -1).shifted(unit_expo(ring, W, 1)); };
  PolyMatrix dm(ring, static_cast<size_t>(nn)), dp(ring, static_cast<size_t>(nn)),
      dp0(ring, static_cast<size_t>(nn));
  for (int i = 1; i <= nn; ++i) {
    const LaurentPoly yi = Y(i), zi = Z(i);
    for (int j = 1; j <= nn; ++j) {
      const auto r = static_cast<size_t>(i - 1);
      const auto c = static_cast<size_t>(j - 1);
      dm.at(r, c) = yi.pow(static_cast<unsigned>(j)) - zi.pow(static_cast<unsigned>(j));
      dp.at(r, c) = yi.pow(static_cast<unsigned>(j)) + zi.pow(static_cast<unsigned>(j));
      dp0.at(r, c) =
          yi.pow(static_cast<unsigned>(j - 1)) + zi.pow(static_cast<unsigned>(j - 1));
    }
  }
  out.det_minus = det_poly(dm);
  out.det_plus = det_poly(dp);
  out.det_plus0 = det_poly(dp0);
  const auto alpha = uv_alphabet(ring, nn);
  auto h = [&](long d) { return hom_sym(d, alpha); };
  auto uv_shift = [&](const LaurentPoly& p, int e) {
    return p.shifted(uv_expo(ring, e));
  };
  PolyMatrix m1(ring, static_cast<size_t>(nn)), m2(ring, static_cast<size_t>(nn)),
      m3(ring, static_cast<size_t>(nn - 1));
  for (int i = 1; i <= nn; ++i)
    for (int j = 1; j <= nn; ++j) {
      LaurentPoly a = LaurentPoly::zero(ring);
      LaurentPoly b = LaurentPoly::zero(ring);
      for (long k = j; k <= 2 * j; ++k) {
        const Int c = binom(j, k - j);
        const int wexp = static_cast<int>(2 * j - k);
        a += (h(k + i - nn - 1) + uv_shift(h(k - i - nn + 1), i - 1))
                 .scaled(c)
                 .shifted(unit_expo(ring, W, wexp));
        b += (h(k - i + 1) - uv_shift(h(k + i - 2 * nn - 1), nn - i + 1))
                 .scaled(c)
                 .shifted(unit_expo(ring, W, wexp));
      }
      m1.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = a;
      m2.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = b;
    }
  for (int i = 1; i <= nn - 1; ++i)
    for (int j = 1; j <= nn - 1; ++j) {
      LaurentPoly a = LaurentPoly::zero(ring);
      for (long k = j; k <= 2 * j; ++k)
        a += (h(k - i) - uv_shift(h(k + i - 2 * nn), nn - i))
                 .scaled(binom(j, k - j))
                 .shifted(unit_expo(ring, W, static_cast<int>(2 * j - k)));
      m3.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = a;
    }
  out.m1 = det_poly(m1);
  out.m2 = det_poly(m2);
  out.m3 = det_poly(m3);
  return out;
}

// prod_{i<j} (X_j - X_i)(u^-1 v X_j^-1 - u^-1 v X_i^-1) * prod_{i,j} (u^-1 v X_j^-1 - X_i)
LaurentPoly jt_denominator(const JtParts& p) {
  const auto& ring = p.ring;
  auto uvxinv = [&](int j) { return uvx_mono(ring, 1, -1, 1, j, -1); };
  LaurentPoly d = LaurentPoly::constant(ring, 1);
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      d = d * (xv(ring, j) - xv(ring, i)) * (uvxinv(j) - uvxinv(i));
  for (int i = 1; i <= p.n; ++i)
    for (int j = 1; j <= p.n; ++j) d = d * (uvxinv(j) - xv(ring, i));
  return d;
}

// (-1)^n u^{n^2 + n(n-1)/2} v^{-n(n-1)/2}
LaurentPoly jt_scalar(const JtParts& p) {
  const int half = p.n * (p.n - 1) / 2;
  return uvx_mono(p.ring, p.n % 2 ? -1 : 1, p.n * p.n + half, -half);
}

IdentityCase do_jt3lem(long n, bool first) {
  require(n >= 1 && n <= 3, "jt3lem: n must be in 1..3");
  const JtParts p = jt_parts(n);
  const LaurentPoly den = jt_denominator(p);
  const LaurentPoly sc = jt_scalar(p);
  if (first) {
    LaurentPoly lhs = (p.det_plus * p.det_minus).scaled(2);
    LaurentPoly rhs = sc * p.m2 * p.m1 * den;
    return make_case("jt3lem_1", {n}, std::move(lhs), std::move(rhs));
  }
  LaurentPoly lhs = p.det_plus0 * p.det_minus;
  LaurentPoly rhs = sc * p.m3 * p.m1 * den;
  return make_case("jt3lem_2", {n}, std::move(lhs), std::move(rhs));
}

IdentityCase do_cor(long n, int part) {
  require(n >= 1 && n <= 3, "cor: n must be in 1..3");
  const JtParts p = jt_parts(n);
  const auto& ring = p.ring;
  LaurentPoly anti = LaurentPoly::constant(ring, 1);   // prod (X_j-X_i)(v X_i^-1 X_j^-1 - u)
  LaurentPoly plain = LaurentPoly::constant(ring, 1);  // prod (X_j-X_i)(u - v X_i^-1 X_j^-1)
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j) {
      Expo e(ring->size(), 0);
      e[V] = 1;
      e[static_cast<size_t>(xi(i))] = -1;
      e[static_cast<size_t>(xi(j))] = -1;
      const LaurentPoly cross = LaurentPoly::monomial(ring, 1, e);
      const LaurentPoly diff = xv(ring, j) - xv(ring, i);
      anti = anti * diff * (cross - LaurentPoly::var_pow(ring, U, 1));
      plain = plain * diff * (LaurentPoly::var_pow(ring, U, 1) - cross);
    }
  if (part == 1) {
    LaurentPoly extra = LaurentPoly::constant(ring, 1);
    for (int i = 1; i <= p.n; ++i) extra = extra * (ux(ring, i) - vx_inv(ring, i));
    LaurentPoly lhs = p.det_minus.scaled(2);
    LaurentPoly rhs = p.m1 * anti * extra;
    return make_case("cor_1", {n}, std::move(lhs), std::move(rhs));
  }
  if (part == 2) {
    LaurentPoly lhs = p.det_plus;
    LaurentPoly rhs = p.m2 * plain;
    return make_case("cor_2", {n}, std::move(lhs), std::move(rhs));
  }
  LaurentPoly lhs = p.det_plus0;
  LaurentPoly rhs = (p.m3 * plain).scaled(2);
  return make_case("cor_3", {n}, std::move(lhs), std::move(rhs));
}

// Integer identities are carried as constant polynomials so that every
// catalogue case exposes the same lhs/rhs shape.
IdentityCase int_case(std::string name, std::vector<long> params, Int lhs,
                      Int rhs) {
  auto ring = Ring::uvwx(0);
  return make_case(std::move(name), std::move(params),
                   LaurentPoly::constant(ring, std::move(lhs)),
                   LaurentPoly::constant(ring, std::move(rhs)));
}

IdentityCase do_id_sum1(long j, long p) {
  require(j >= 1 && j <= 40, "id_sum1: j must be in 1..40");
  require(p >= 1 && p <= 40, "id_sum1: p must be in 1..40");
  Int lhs = 0;
  for (long q = p % 2 ? 1 : 2; q <= p; q += 2) {
    if (q < j) continue;
    const long t = (p - q) / 2;
    Int term = (Int(1) << static_cast<unsigned>(q - j)) *
               binom((p + q) / 2 - 1, t) * binom(q - 1, j - 1);
    lhs += t % 2 ? -term : term;
  }
  return int_case("id_sum1", {j, p}, std::move(lhs), binom(p + j - 1, p - j));
}

IdentityCase do_id_sum2(long i, long j) {
  require(i >= 1 && i <= 40, "id_sum2: i must be in 1..40");
  require(j >= 1 && j <= 40, "id_sum2: j must be in 1..40");
  Int lhs = 0;
  for (long p = i; p <= 2 * i; ++p) {
    const Int term = binom(i, 2 * i - p) * binom(p + j - 1, p - j);
    lhs += p % 2 ? -term : term;
  }
  return int_case("id_sum2", {i, j}, std::move(lhs),
                  binom(i + j - 1, 2 * j - i - 1));
}

// h at any degree against the inversion formula, with the raw-sum h on the
// right so the comparison does not reuse the library convention.
IdentityCase do_neg_h(long n, long k) {
  require(n >= 1 && n <= 4, "neg_h: n must be in 1..4");
  require(k >= -12 && k <= 12, "neg_h: k must be in -12..12");
  const int nn = static_cast<int>(n);
  auto ring = Ring::uvwx(nn);
  std::vector<LaurentPoly> direct, inverted;
  Expo all_inv(ring->size(), 0);
  for (int i = 1; i <= nn; ++i) {
    direct.push_back(xv(ring, i));
    inverted.push_back(xv(ring, i, -1));
    all_inv[static_cast<size_t>(xi(i))] = -1;
  }
  LaurentPoly lhs = hom_sym(k, direct);
  LaurentPoly rhs =
      hom_raw(ring, -k - n, inverted) * LaurentPoly::monomial(ring, 1, all_inv);
  if (n % 2 == 0) rhs = -rhs;
  return make_case("neg_h", {n, k}, std::move(lhs), std::move(rhs));
}

// Principal specialization of h into a single variable.
IdentityCase do_hspecial(long n, long k) {
  require(n >= 1 && n <= 6, "hspecial: n must be in 1..6");
  require(k >= -n + 1 && k <= 12, "hspecial: k must be in -n+1..12");
  auto ring = Ring::uvwx(1);
  std::vector<LaurentPoly> args(static_cast<size_t>(n), xv(ring, 1));
  LaurentPoly lhs = hom_sym(k, args);
  LaurentPoly rhs = xv(ring, 1, static_cast<int>(k)).scaled(binom(n + k - 1, k));
  return make_case("hspecial", {n, k}, std::move(lhs), std::move(rhs));
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "lemma_general", "lemma_det", "lemma_basis", "lemma_prefactor",
      "eh_lemma",      "jt3lem_1",  "jt3lem_2",    "cor_1",
      "cor_2",         "cor_3",     "id_sum1",     "id_sum2",
      "neg_h",         "hspecial"};
  return names;
}

std::vector<std::vector<long>> identity_default_params(const std::string& name) {
  std::vector<std::vector<long>> out;
  if (name == "lemma_general") {
    for (long n = 1; n <= 4; ++n) out.push_back({n});
  } else if (name == "lemma_det") {
    long seed = 1;
    for (long n = 1; n <= 3; ++n)
      for (long s = 0; s < (n == 1 ? 6 : 7); ++s) out.push_back({n, seed++});
  } else if (name == "lemma_basis") {
    for (long l = 0; l <= 10; ++l) out.push_back({l});
  } else if (name == "lemma_prefactor") {
    for (long n = 1; n <= 4; ++n)
      for (long m = 0; m <= n - 1; ++m) out.push_back({n, m});
  } else if (name == "eh_lemma") {
    for (long n = 1; n <= 3; ++n)
      for (long m = -n; m <= 4; ++m)
        for (long i = 1; i <= n; ++i) out.push_back({n, m, i});
  } else if (name == "jt3lem_1" || name == "jt3lem_2" || name == "cor_1" ||
             name == "cor_2" || name == "cor_3") {
    for (long n = 1; n <= 3; ++n) out.push_back({n});
  } else if (name == "id_sum1") {
    for (long j = 1; j <= 6; ++j)
      for (long p = 1; p <= 12; ++p) out.push_back({j, p});
  } else if (name == "id_sum2") {
    for (long i = 1; i <= 6; ++i)
      for (long j = 1; j <= 6; ++j) out.push_back({i, j});
  } else if (name == "neg_h") {
    for (long n = 1; n <= 4; ++n)
      for (long k = -6; k <= 6; ++k) out.push_back({n, k});
  } else if (name == "hspecial") {
    for (long n = 1; n <= 4; ++n)
      for (long k = -n + 1; k <= 6; ++k) out.push_back({n, k});
  } else {
    throw std::invalid_argument("unknown identity: " + name);
  }
  return out;
}

IdentityCase verify_identity(const std::string& name,
                             const std::vector<long>& params) {
  auto arity = [&](size_t want) {
    if (params.size() != want)
      throw std::invalid_argument("identity " + name + ": expected " +
                                  std::to_string(want) + " parameters");
  };
  if (name == "lemma_general") { arity(1); return do_lemma_general(params[0]); }
  if (name == "lemma_det") { arity(2); return do_lemma_det(params[0], params[1]); }
  if (name == "lemma_basis") { arity(1); return do_lemma_basis(params[0]); }
  if (name == "lemma_prefactor") {
    arity(2);
    return do_lemma_prefactor(params[0], params[1]);
  }
  if (name == "eh_lemma") {
    arity(3);
    return do_eh_lemma(params[0], params[1], params[2]);
  }
  if (name == "jt3lem_1") { arity(1); return do_jt3lem(params[0], true); }
  if (name == "jt3lem_2") { arity(1); return do_jt3lem(params[0], false); }
  if (name == "cor_1") { arity(1); return do_cor(params[0], 1); }
  if (name == "cor_2") { arity(1); return do_cor(params[0], 2); }
  if (name == "cor_3") { arity(1); return do_cor(params[0], 3); }
  if (name == "id_sum1") { arity(2); return do_id_sum1(params[0], params[1]); }
  if (name == "id_sum2") { arity(2); return do_id_sum2(params[0], params[1]); }
  if (name == "neg_h") { arity(2); return do_neg_h(params[0], params[1]); }
  if (name == "hspecial") { arity(2); return do_hspecial(params[0], params[1]); }
  throw std::invalid_argument("unknown identity: " + name);
}

std::vector<IdentityCase> identity_catalogue() {
  std::vector<IdentityCase> out;
  for (const auto& name : identity_names())
    for (const auto& params : identity_default_params(name))
      out.push_back(verify_identity(name, params));
  return out;
}

}  // namespace vsasm
