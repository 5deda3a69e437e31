/* Instance checking of the standalone algebraic identities behind the
   determinant transformations.  Each case builds both sides independently
   as exact Laurent polynomials and compares them; identities stated with
   denominators are compared after multiplying both sides by the product of
   the denominator factors, and one-half prefactors are cleared by doubling. */
#pragma once

#include <string>
#include <vector>

#include "vsasm/laurent.hpp"

namespace vsasm {

struct IdentityCase {
  std::string name;
  std::vector<long> params;
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool pass = false;
};

// Catalogue names in canonical order.
const std::vector<std::string>& identity_names();

// The default parameter sweep for one name.
std::vector<std::vector<long>> identity_default_params(const std::string& name);

// Checks one instance; throws std::invalid_argument for an unknown name or
// parameters outside the supported ranges.
IdentityCase verify_identity(const std::string& name,
                             const std::vector<long>& params);

// Every name at its default sweep, in catalogue order.
std::vector<IdentityCase> identity_catalogue();

}  // namespace vsasm
