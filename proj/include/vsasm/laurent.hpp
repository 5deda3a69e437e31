/* Sparse exact Laurent polynomials over a fixed ordered variable alphabet.
   All coefficients are arbitrary-precision integers; exponents may be negative. */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsasm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exponent vector, dense over the ring's alphabet. Entries are signed.
using Expo = std::vector<std::int32_t>;

struct ring_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct divisibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A ring is an ordered list of variable names. Polynomials over different
// rings never mix; the alphabet is fixed at construction.
class Ring {
  public:
    explicit Ring(std::vector<std::string> vars);

    // The alphabet u, v, w, X1..Xn used by all generating functions here.
    static std::shared_ptr<const Ring> uvwx(int n);
    // A plain alphabet from the given names (identity checks, scratch rings).
    static std::shared_ptr<const Ring> of(std::vector<std::string> vars);

    std::size_t size() const { return vars_.size(); }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }
    // Index of a variable name, -1 if absent.
    int index_of(const std::string& name) const;
    bool same_alphabet(const Ring& other) const { return vars_ == other.vars_; }

  private:
    std::vector<std::string> vars_;
    std::map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Canonical term order: total degree first, then lexicographic in alphabet
// order, higher terms first. Equal polynomials serialize identically.
bool expo_before(const Expo& a, const Expo& b);

struct Term {
    Expo e;
    Int c;  // never zero in a normalized polynomial
};

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(RingPtr ring);  // zero polynomial

    static LaurentPoly zero(RingPtr ring) { return LaurentPoly(ring); }
    static LaurentPoly constant(RingPtr ring, Int c);
    static LaurentPoly monomial(RingPtr ring, Int c, Expo e);
    // Single variable to a (possibly negative) power.
    static LaurentPoly var_pow(RingPtr ring, int var, std::int32_t k, Int c = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly scaled(const Int& c) const;
    LaurentPoly pow(unsigned k) const;
    // Multiply by a single monomial (fast path; keeps order).
    LaurentPoly shifted(const Expo& e, const Int& c = 1) const;

    // Substitute X_i -> X_i^{-1} for each listed variable index.
    LaurentPoly invert_vars(const std::vector<int>& vars) const;
    // Permute the listed variables: slot i receives variable vars[perm[i]].
    LaurentPoly permute_vars(const std::vector<int>& vars, const std::vector<int>& perm) const;
    // Evaluate at rational points (one value per ring variable).
    Rat eval(const std::vector<Rat>& values) const;

    // Minimum exponent of one variable over all terms (0 for the zero poly).
    std::int32_t min_exp(int var) const;

    std::string str() const;  // human-readable, canonical order

    // Construction helper: accumulate arbitrary terms, then normalize once.
    static LaurentPoly from_terms(RingPtr ring, std::vector<Term> raw);

  private:
    RingPtr ring_;
    std::vector<Term> terms_;  // canonically ordered, nonzero coefficients

    void check_same_ring(const LaurentPoly& o) const;
};

// q with q*den == num exactly; throws divisibility_error otherwise.
// Works by clearing negative exponents per variable, then greedy leading-term
// division in the canonical order over the nonnegative-exponent ring.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

// Sum over all permutations sigma of the listed variables of
// sgn(sigma) * f(X_sigma(1), ..., X_sigma(n)); other variables fixed.
LaurentPoly antisymmetrize(const LaurentPoly& f, const std::vector<int>& vars);

class PolyMatrix {
  public:
    PolyMatrix(RingPtr ring, std::size_t n);
    std::size_t size() const { return n_; }
    LaurentPoly& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const RingPtr& ring() const { return ring_; }

  private:
    RingPtr ring_;
    std::size_t n_;
    std::vector<LaurentPoly> entries_;
};

enum class DetMethod { automatic, leibniz, bareiss };

// Exact determinant. Leibniz serves as the small-size oracle; Bareiss
// (fraction-free elimination with exact division) takes over for n >= 5.
// The empty 0x0 determinant is 1 by convention.
LaurentPoly det_poly(const PolyMatrix& m, DetMethod method = DetMethod::automatic);

Int binom(long n, long k);       // C(n,k), zero when k < 0 or k > n >= 0
Int factorial(unsigned n);

}  // namespace vsasm
