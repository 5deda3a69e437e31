/* Symmetric functions of polynomial arguments.

   h_k uses the column recurrence h_k(a_1..a_j) = h_k(a_1..a_{j-1})
   + a_j h_{k-1}(a_1..a_j); e_k uses e_k(a_1..a_j) = e_k(a_1..a_{j-1})
   + a_j e_{k-1}(a_1..a_{j-1}).  Extended Schur polynomials go through the
   bialternant quotient, which exact_div performs exactly. */

#include "vsasm/symfunc.hpp"

#include <map>
#include <stdexcept>

namespace vsasm {

namespace {

// Extracts the single variable index of a monomial argument a = c * v^e,
// throwing unless the argument is invertible (unit coefficient not needed,
// but the product of arguments must divide 1 monomially).
bool is_monomial(const LaurentPoly& p) { return p.term_count() == 1; }

LaurentPoly monomial_inverse(const LaurentPoly& p) {
  if (!is_monomial(p))
    throw ring_error("negative h-degree needs invertible monomial arguments");
  const Term& t = p.terms()[0];
  if (t.c != 1 && t.c != -1)
    throw ring_error("negative h-degree needs unit monomial arguments");
  Expo e(t.e.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = -t.e[i];
  return LaurentPoly::from_terms(p.ring(), {Term{std::move(e), t.c}});
}

LaurentPoly hom_sym_nonneg(long k, const std::vector<LaurentPoly>& args,
                           RingPtr ring) {
  if (k < 0) throw std::logic_error("hom_sym_nonneg: negative degree");
  // table[d] = h_d of the arguments processed so far.
  std::vector<LaurentPoly> table(static_cast<size_t>(k) + 1,
                                 LaurentPoly::zero(ring));
  table[0] = LaurentPoly::constant(ring, 1);
  for (const LaurentPoly& a : args)
    for (long d = 1; d <= k; ++d) table[d] += a * table[d - 1];
  return table[static_cast<size_t>(k)];
}

}  // namespace

LaurentPoly hom_sym(long k, const std::vector<LaurentPoly>& args) {
  if (args.empty()) throw std::invalid_argument("hom_sym: no arguments");
  RingPtr ring = args[0].ring();
  const long m = static_cast<long>(args.size());
  if (k >= 0) return hom_sym_nonneg(k, args, ring);
  if (k >= -m + 1) return LaurentPoly::zero(ring);
  // h_{-k-m} at inverted arguments, times (-1)^{m+1} / (a_1...a_m).
  std::vector<LaurentPoly> inv;
  inv.reserve(args.size());
  LaurentPoly prod_inv = LaurentPoly::constant(ring, 1);
  for (const LaurentPoly& a : args) {
    inv.push_back(monomial_inverse(a));
    prod_inv *= inv.back();
  }
  LaurentPoly h = hom_sym_nonneg(-k - m, inv, ring);
  LaurentPoly out = prod_inv * h;
  if (m % 2 == 0) out = -out;
  return out;
}

LaurentPoly elem_sym(long k, const std::vector<LaurentPoly>& args) {
  if (args.empty()) throw std::invalid_argument("elem_sym: no arguments");
  RingPtr ring = args[0].ring();
  const long m = static_cast<long>(args.size());
  if (k < 0 || k > m) return LaurentPoly::zero(ring);
  std::vector<LaurentPoly> table(static_cast<size_t>(k) + 1,
                                 LaurentPoly::zero(ring));
  table[0] = LaurentPoly::constant(ring, 1);
  for (const LaurentPoly& a : args)
    for (long d = std::min<long>(k, m); d >= 1; --d)
      table[d] += a * table[d - 1];
  return table[static_cast<size_t>(k)];
}

LaurentPoly vandermonde(RingPtr ring, const std::vector<int>& xvars) {
  LaurentPoly out = LaurentPoly::constant(ring, 1);
  for (size_t i = 0; i < xvars.size(); ++i)
    for (size_t j = i + 1; j < xvars.size(); ++j)
      out *= LaurentPoly::var_pow(ring, xvars[j], 1) -
             LaurentPoly::var_pow(ring, xvars[i], 1);
  return out;
}

LaurentPoly schur_extended(const std::vector<int>& k, RingPtr ring,
                           const std::vector<int>& xvars) {
  const size_t n = k.size();
  if (xvars.size() != n)
    throw std::invalid_argument("schur_extended: size mismatch");
  if (n == 0) return LaurentPoly::constant(ring, 1);
  // Exponents k_j + j - 1; a repeated exponent kills the determinant.
  std::vector<long> expo(n);
  for (size_t j = 0; j < n; ++j) expo[j] = k[j] + static_cast<long>(j);
  PolyMatrix m(ring, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m.at(i, j) = LaurentPoly::var_pow(ring, xvars[i], expo[j]);
  LaurentPoly num = det_poly(m);
  if (num.is_zero()) return num;
  return exact_div(num, vandermonde(ring, xvars));
}

}  // namespace vsasm
