#include "vsasm/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace vsasm {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto [it, fresh] = index_.emplace(vars_[i], static_cast<int>(i));
        if (!fresh) throw ring_error("duplicate variable name: " + vars_[i]);
    }
}

std::shared_ptr<const Ring> Ring::uvwx(int n) {
    std::vector<std::string> vars = {"u", "v", "w"};
    for (int i = 1; i <= n; ++i) vars.push_back("X" + std::to_string(i));
    return std::make_shared<const Ring>(std::move(vars));
}

std::shared_ptr<const Ring> Ring::of(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

int Ring::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool expo_before(const Expo& a, const Expo& b) {
    long da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

struct ExpoHash {
    std::size_t operator()(const Expo& e) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : e) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

LaurentPoly::LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw ring_error("polynomial needs a ring");
}

LaurentPoly LaurentPoly::constant(RingPtr ring, Int c) {
    return monomial(std::move(ring), std::move(c), Expo{});
}

LaurentPoly LaurentPoly::monomial(RingPtr ring, Int c, Expo e) {
    LaurentPoly p(std::move(ring));
    if (c == 0) return p;
    e.resize(p.ring_->size(), 0);
    p.terms_.push_back(Term{std::move(e), std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::var_pow(RingPtr ring, int var, std::int32_t k, Int c) {
    Expo e(ring->size(), 0);
    if (var < 0 || static_cast<std::size_t>(var) >= ring->size())
        throw ring_error("variable index out of range");
    e[var] = k;
    return monomial(std::move(ring), std::move(c), std::move(e));
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
    if (!ring_ || !o.ring_) throw ring_error("operation on ringless polynomial");
    if (ring_ != o.ring_ && !ring_->same_alphabet(*o.ring_))
        throw ring_error("variable alphabet mismatch");
}

LaurentPoly LaurentPoly::from_terms(RingPtr ring, std::vector<Term> raw) {
    LaurentPoly p(std::move(ring));
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return expo_before(a.e, b.e); });
    for (auto& t : raw) {
        assert(t.e.size() == p.ring_->size());
        if (!p.terms_.empty() && p.terms_.back().e == t.e)
            p.terms_.back().c += t.c;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
    }
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_ring(o);
    LaurentPoly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].e == o.terms_[j].e) {
            Int c = terms_[i].c + o.terms_[j].c;
            if (c != 0) r.terms_.push_back(Term{terms_[i].e, std::move(c)});
            ++i, ++j;
        } else if (expo_before(terms_[i].e, o.terms_[j].e)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_ring(o);
    LaurentPoly r(ring_);
    if (terms_.empty() || o.terms_.empty()) return r;
    // Fast path: multiplying by a single monomial preserves the order.
    if (o.terms_.size() == 1) return shifted(o.terms_[0].e, o.terms_[0].c);
    if (terms_.size() == 1) return o.shifted(terms_[0].e, terms_[0].c);

    std::unordered_map<Expo, Int, ExpoHash> acc;
    acc.reserve(terms_.size() * 2);
    const std::size_t nv = ring_->size();
    Expo e(nv);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            for (std::size_t k = 0; k < nv; ++k) e[k] = a.e[k] + b.e[k];
            acc[e] += a.c * b.c;
        }
    }
    std::vector<Term> raw;
    raw.reserve(acc.size());
    for (auto& [ee, cc] : acc)
        if (cc != 0) raw.push_back(Term{ee, std::move(cc)});
    return from_terms(ring_, std::move(raw));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    check_same_ring(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    if (c == 0) return LaurentPoly(ring_);
    LaurentPoly r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r = constant(ring_, 1);
    LaurentPoly base(*this);
    while (k) {
        if (k & 1u) r *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(const Expo& e, const Int& c) const {
    if (c == 0) return LaurentPoly(ring_);
    LaurentPoly r(*this);
    for (auto& t : r.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) t.e[k] += e[k];
        t.c *= c;
    }
    // A uniform shift keeps the canonical order: degrees move by a common
    // constant and the lex tiebreak is translation invariant.
    return r;
}

LaurentPoly LaurentPoly::invert_vars(const std::vector<int>& vars) const {
    std::vector<Term> raw(terms_);
    for (auto& t : raw)
        for (int v : vars) t.e[v] = -t.e[v];
    return from_terms(ring_, std::move(raw));
}

LaurentPoly LaurentPoly::permute_vars(const std::vector<int>& vars,
                                      const std::vector<int>& perm) const {
    std::vector<Term> raw(terms_);
    std::vector<std::int32_t> tmp(vars.size());
    for (auto& t : raw) {
        for (std::size_t i = 0; i < vars.size(); ++i) tmp[i] = t.e[vars[i]];
        // Argument slot i receives variable vars[perm[i]].
        for (std::size_t i = 0; i < vars.size(); ++i) t.e[vars[perm[i]]] = tmp[i];
    }
    return from_terms(ring_, std::move(raw));
}

Rat LaurentPoly::eval(const std::vector<Rat>& values) const {
    if (values.size() != ring_->size()) throw ring_error("evaluation arity mismatch");
    auto power = [](const Rat& base, std::int32_t k) {
        if (k == 0) return Rat(1);
        if (base == 0) throw ring_error("zero raised to a negative power");
        Rat b = k > 0 ? base : Rat(1) / base;
        Rat r(1);
        for (std::int32_t i = 0; i < (k > 0 ? k : -k); ++i) r *= b;
        return r;
    };
    Rat sum(0);
    for (const auto& t : terms_) {
        Rat m(t.c);
        for (std::size_t i = 0; i < values.size(); ++i)
            if (t.e[i] != 0) m *= power(values[i], t.e[i]);
        sum += m;
    }
    return sum;
}

std::int32_t LaurentPoly::min_exp(int var) const {
    std::int32_t m = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.e[var] < m) m = t.e[var];
        first = false;
    }
    return m;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Int c = t.c;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (c < 0) c = -c;
        bool bare = true;
        for (std::size_t i = 0; i < t.e.size(); ++i)
            if (t.e[i] != 0) bare = false;
        if (c != 1 || bare) os << c.str();
        bool star = (c != 1);
        for (std::size_t i = 0; i < t.e.size(); ++i) {
            if (t.e[i] == 0) continue;
            if (star) os << "*";
            os << ring_->var(i);
            if (t.e[i] != 1) os << "^" << t.e[i];
            star = true;
        }
    }
    return os.str();
}

namespace {

// Division of nonnegative-exponent polynomials by greedy leading-term steps.
// Exact when the quotient exists; otherwise the leading monomial of the
// remainder fails to be divisible and we report that.
LaurentPoly divide_nonneg(const LaurentPoly& num, const LaurentPoly& den) {
    const auto& ring = num.ring();
    std::map<Expo, Int, decltype(&expo_before)> rem(&expo_before);
    for (const auto& t : num.terms()) rem.emplace(t.e, t.c);
    const auto& lead = den.terms().front();
    std::vector<Term> q;
    const std::size_t nv = ring->size();
    while (!rem.empty()) {
        const auto& [re, rc] = *rem.begin();
        Expo qe(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            qe[i] = re[i] - lead.e[i];
            if (qe[i] < 0) throw divisibility_error("exact division: monomial mismatch");
        }
        if (rc % lead.c != 0) throw divisibility_error("exact division: coefficient mismatch");
        Int qc = rc / lead.c;
        // rem -= qc * X^qe * den
        Expo e(nv);
        for (const auto& d : den.terms()) {
            for (std::size_t i = 0; i < nv; ++i) e[i] = qe[i] + d.e[i];
            auto it = rem.find(e);
            Int delta = qc * d.c;
            if (it == rem.end()) {
                if (delta != 0) rem.emplace(e, -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
        q.push_back(Term{std::move(qe), std::move(qc)});
    }
    return LaurentPoly::from_terms(ring, std::move(q));
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw divisibility_error("division by zero polynomial");
    if (num.is_zero()) return num;
    const auto& ring = num.ring();
    if (ring != den.ring() && !ring->same_alphabet(*den.ring()))
        throw ring_error("variable alphabet mismatch");
    const std::size_t nv = ring->size();
    // Shift so that numerator, denominator, and quotient all have
    // nonnegative exponents: min_v(num) = min_v(q) + min_v(den) per variable.
    Expo snum(nv), sden(nv), sq(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        std::int32_t mn = num.min_exp(static_cast<int>(v));
        std::int32_t md = den.min_exp(static_cast<int>(v));
        snum[v] = -mn;
        sden[v] = -md;
        sq[v] = mn - md;
    }
    LaurentPoly q0 = divide_nonneg(num.shifted(snum), den.shifted(sden));
    return q0.shifted(sq);
}

LaurentPoly antisymmetrize(const LaurentPoly& f, const std::vector<int>& vars) {
    const std::size_t n = vars.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPoly sum(f.ring());
    do {
        int s = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) s = -s;
        LaurentPoly g = f.permute_vars(vars, perm);
        sum += (s > 0) ? g : -g;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), entries_(n * n, LaurentPoly(ring_)) {}

namespace {

LaurentPoly det_leibniz(const PolyMatrix& m) {
    const std::size_t n = m.size();
    LaurentPoly sum(m.ring());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int s = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) s = -s;
        LaurentPoly prod = LaurentPoly::constant(m.ring(), 1);
        for (std::size_t i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
        sum += (s > 0) ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

LaurentPoly det_bareiss(const PolyMatrix& input) {
    const std::size_t n = input.size();
    PolyMatrix m = input;
    LaurentPoly prev = LaurentPoly::constant(m.ring(), 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return LaurentPoly(m.ring());  // singular column
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_div(t, prev);
            }
            m.at(i, k) = LaurentPoly(m.ring());
        }
        prev = m.at(k, k);
    }
    LaurentPoly d = m.at(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

}  // namespace

LaurentPoly det_poly(const PolyMatrix& m, DetMethod method) {
    if (m.size() == 0) return LaurentPoly::constant(m.ring(), 1);
    switch (method) {
        case DetMethod::leibniz: return det_leibniz(m);
        case DetMethod::bareiss: return det_bareiss(m);
        case DetMethod::automatic: break;
    }
    return m.size() <= 4 ? det_leibniz(m) : det_bareiss(m);
}

Int binom(long n, long k) {
    if (k < 0 || (n >= 0 && k > n)) return 0;
    // Negative upper index never arises in the formulas here.
    if (n < 0) throw std::invalid_argument("binom: negative upper index");
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace vsasm
