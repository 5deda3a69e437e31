/* Complete homogeneous and elementary symmetric functions of polynomial
   arguments, with the negative-degree extension of h, and extended Schur
   polynomials for arbitrary integer index vectors. */
#pragma once

#include "vsasm/laurent.hpp"

namespace vsasm {

// h_k(a_1,...,a_m) for any integer k.  The band k = -m+1..-1 vanishes;
// for k <= -m the value is (-1)^{m+1} (a_1...a_m)^{-1} h_{-k-m} at inverted
// arguments, which requires every argument to be an invertible monomial.
LaurentPoly hom_sym(long k, const std::vector<LaurentPoly>& args);

// e_k(a_1,...,a_m); zero outside 0 <= k <= m.
LaurentPoly elem_sym(long k, const std::vector<LaurentPoly>& args);

// det(X_i^{k_j + j - 1}) / prod_{i<j}(X_j - X_i) over the listed variables,
// for an arbitrary integer vector k = (k_1,...,k_n).  Equals the classical
// Schur polynomial of (k_n,...,k_1) when 0 <= k_1 <= ... <= k_n.
LaurentPoly schur_extended(const std::vector<int>& k, RingPtr ring,
                           const std::vector<int>& xvars);

// prod_{i<j} (X_j - X_i) over the listed variables.
LaurentPoly vandermonde(RingPtr ring, const std::vector<int>& xvars);

}  // namespace vsasm
