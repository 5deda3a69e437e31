#include "vsasm/amt.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "vsasm/symfunc.hpp"

namespace vsasm {

namespace {

bool strictly_increasing(const Row& r) {
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (r[i] >= r[i + 1]) return false;
  return true;
}

void check_bottom(const Row& bottom) {
  if (bottom.empty()) throw std::invalid_argument("empty bottom row");
  if (!strictly_increasing(bottom))
    throw std::invalid_argument("bottom row must increase strictly");
}

// Ring uvwx(n): variable indices.
constexpr int U = 0, V = 1, W = 2;
int XI(int i) { return 2 + i; }  // X_i, 1-based i

}  // namespace

bool MonotoneTriangle::valid() const {
  const int n = order();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != i + 1) return false;
    if (!strictly_increasing(rows[i])) return false;
  }
  // Diagonal weak increase: rows[i+1][j] <= rows[i][j] <= rows[i+1][j+1].
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (rows[i + 1][j] > rows[i][j] || rows[i][j] > rows[i + 1][j + 1]) return false;
  return true;
}

EntryStatus entry_status(const MonotoneTriangle& t, int i, int j) {
  bool eq_nw = i > 0 && j > 0 && t.rows[i][j] == t.rows[i - 1][j - 1];
  bool eq_ne = i > 0 && j <= i - 1 && t.rows[i][j] == t.rows[i - 1][j];
  assert(!(eq_nw && eq_ne));
  if (eq_nw) return EntryStatus::ForcedNE;
  if (eq_ne) return EntryStatus::ForcedNW;
  return EntryStatus::Free;
}

bool ArrowedMT::valid() const {
  if (!base.valid()) return false;
  if (dec.size() != base.rows.size()) return false;
  for (int i = 0; i < base.order(); ++i) {
    if (dec[i].size() != base.rows[i].size()) return false;
    for (int j = 0; j <= i; ++j) {
      EntryStatus s = entry_status(base, i, j);
      if (s == EntryStatus::ForcedNE && dec[i][j] != Arrow::NE) return false;
      if (s == EntryStatus::ForcedNW && dec[i][j] != Arrow::NW) return false;
    }
  }
  return true;
}

void for_each_mt(const Row& bottom, const std::function<void(const MonotoneTriangle&)>& fn) {
  check_bottom(bottom);
  const int n = static_cast<int>(bottom.size());
  // stack[m] holds the row of length m+1; filled from the bottom up.
  std::vector<Row> stack(n);
  stack[n - 1] = bottom;

  std::function<void(int)> extend = [&](int m) {
    // stack[m..n-1] fixed; choose the row of length m.
    if (m == 0) {
      MonotoneTriangle t;
      t.rows = stack;
      fn(t);
      return;
    }
    const Row& below = stack[m];
    Row& row = stack[m - 1];
    row.assign(m, 0);
    std::function<void(int)> pick = [&](int j) {
      if (j == m) {
        extend(m - 1);
        return;
      }
      int lo = below[j];
      if (j > 0) lo = std::max(lo, row[j - 1] + 1);
      for (int x = lo; x <= below[j + 1]; ++x) {
        row[j] = x;
        pick(j + 1);
      }
    };
    pick(0);
  };
  extend(n - 1);
}

std::vector<MonotoneTriangle> enumerate_mt(const Row& bottom) {
  std::vector<MonotoneTriangle> out;
  for_each_mt(bottom, [&](const MonotoneTriangle& t) { out.push_back(t); });
  return out;
}

void for_each_amt(const Row& bottom, const std::function<void(const ArrowedMT&)>& fn) {
  for_each_mt(bottom, [&](const MonotoneTriangle& t) {
    ArrowedMT a;
    a.base = t;
    a.dec.resize(t.rows.size());
    std::vector<std::pair<int, int>> free_entries;
    for (int i = 0; i < t.order(); ++i) {
      a.dec[i].assign(t.rows[i].size(), Arrow::Both);
      for (int j = 0; j <= i; ++j) {
        switch (entry_status(t, i, j)) {
          case EntryStatus::ForcedNE: a.dec[i][j] = Arrow::NE; break;
          case EntryStatus::ForcedNW: a.dec[i][j] = Arrow::NW; break;
          case EntryStatus::Free: free_entries.emplace_back(i, j); break;
        }
      }
    }
    std::function<void(std::size_t)> choose = [&](std::size_t k) {
      if (k == free_entries.size()) {
        fn(a);
        return;
      }
      auto [i, j] = free_entries[k];
      for (Arrow ar : {Arrow::NW, Arrow::NE, Arrow::Both}) {
        a.dec[i][j] = ar;
        choose(k + 1);
      }
    };
    choose(0);
  });
}

Int count_mt(const Row& bottom) {
  Int c = 0;
  for_each_mt(bottom, [&](const MonotoneTriangle&) { ++c; });
  return c;
}

Int count_amt(const Row& bottom) {
  Int c = 0;
  for_each_mt(bottom, [&](const MonotoneTriangle& t) {
    int f = 0;
    for (int i = 0; i < t.order(); ++i)
      for (int j = 0; j <= i; ++j)
        if (entry_status(t, i, j) == EntryStatus::Free) ++f;
    Int p = 1;
    for (int k = 0; k < f; ++k) p *= 3;
    c += p;
  });
  return c;
}

namespace {

// Per-row decoration profile of one monotone triangle.
struct RowProfile {
  int ne = 0, nw = 0, both = 0, free = 0;
  long rowsum = 0;
};

std::vector<RowProfile> profile(const MonotoneTriangle& t) {
  std::vector<RowProfile> p(t.order());
  for (int i = 0; i < t.order(); ++i) {
    for (int j = 0; j <= i; ++j) {
      p[i].rowsum += t.rows[i][j];
      switch (entry_status(t, i, j)) {
        case EntryStatus::ForcedNE: ++p[i].ne; break;
        case EntryStatus::ForcedNW: ++p[i].nw; break;
        case EntryStatus::Free: ++p[i].free; break;
      }
    }
  }
  return p;
}

}  // namespace

LaurentPoly amt_weight(const ArrowedMT& t, RingPtr ring) {
  const int n = t.base.order();
  if (ring->size() != static_cast<std::size_t>(n) + 3)
    throw ring_error("ring does not match triangle order");
  Expo e(ring->size(), 0);
  long prev = 0;
  for (int i = 0; i < n; ++i) {
    long rowsum = 0;
    int ne = 0, nw = 0;
    for (int j = 0; j <= i; ++j) {
      rowsum += t.base.rows[i][j];
      switch (t.dec[i][j]) {
        case Arrow::NE: ++ne; break;
        case Arrow::NW: ++nw; break;
        case Arrow::Both: ++e[W]; break;
      }
    }
    e[U] += ne;
    e[V] += nw;
    e[XI(i + 1)] = static_cast<std::int32_t>(rowsum - prev + ne - nw);
    prev = rowsum;
  }
  return LaurentPoly::monomial(ring, 1, std::move(e));
}

LaurentPoly gf_brute(const Row& bottom, RingPtr ring) {
  const int n = static_cast<int>(bottom.size());
  if (ring->size() != static_cast<std::size_t>(n) + 3)
    throw ring_error("ring does not match bottom row length");
  // Free factors per row: (u X_i + v X_i^-1 + w)^c, cached by (i, c).
  std::vector<std::vector<LaurentPoly>> freepow(n + 1);
  for (int i = 1; i <= n; ++i) {
    LaurentPoly base = LaurentPoly::var_pow(ring, U, 1) * LaurentPoly::var_pow(ring, XI(i), 1) +
                       LaurentPoly::var_pow(ring, V, 1) * LaurentPoly::var_pow(ring, XI(i), -1) +
                       LaurentPoly::var_pow(ring, W, 1);
    freepow[i].push_back(LaurentPoly::constant(ring, 1));
    for (int c = 1; c <= i; ++c) freepow[i].push_back(freepow[i].back() * base);
  }
  LaurentPoly total = LaurentPoly::zero(ring);
  for_each_mt(bottom, [&](const MonotoneTriangle& t) {
    auto prof = profile(t);
    Expo e(ring->size(), 0);
    long prev = 0;
    for (int i = 0; i < n; ++i) {
      e[U] += prof[i].ne;
      e[V] += prof[i].nw;
      e[XI(i + 1)] =
          static_cast<std::int32_t>(prof[i].rowsum - prev + prof[i].ne - prof[i].nw);
      prev = prof[i].rowsum;
    }
    LaurentPoly term = LaurentPoly::monomial(ring, 1, std::move(e));
    for (int i = 0; i < n; ++i)
      if (prof[i].free > 0) term *= freepow[i + 1][prof[i].free];
    total += term;
  });
  return total;
}

namespace {

// Powers of a fixed rational, grown on demand.
class RatPowers {
 public:
  explicit RatPowers(Rat base) : base_(std::move(base)) {}

  const Rat& at(long k) {
    if (k >= 0) {
      while (static_cast<long>(pos_.size()) <= k)
        pos_.push_back(pos_.back() * base_);
      return pos_[k];
    }
    if (base_ == 0) throw ring_error("zero raised to a negative power");
    while (static_cast<long>(neg_.size()) < -k)
      neg_.push_back((neg_.empty() ? Rat(1) : neg_.back()) / base_);
    return neg_[-k - 1];
  }

 private:
  Rat base_;
  std::vector<Rat> pos_{Rat(1)};
  std::vector<Rat> neg_;
};

}  // namespace

Rat gf_eval(const Row& bottom, const std::vector<Rat>& values) {
  const int n = static_cast<int>(bottom.size());
  if (values.size() != static_cast<std::size_t>(n) + 3)
    throw ring_error("value vector does not match bottom row length");
  const Rat &u = values[U], &v = values[V], &w = values[W];
  auto x = [&](int i) -> const Rat& { return values[XI(i)]; };
  std::vector<RatPowers> xpow, upow, vpow, freepow;
  for (int i = 1; i <= n; ++i) {
    if (x(i) == 0) throw ring_error("X assigned zero");
    xpow.emplace_back(x(i));
    upow.emplace_back(u * x(i));
    vpow.emplace_back(v / x(i));
    freepow.emplace_back(u * x(i) + v / x(i) + w);
  }
  Rat total(0);
  for_each_mt(bottom, [&](const MonotoneTriangle& t) {
    auto prof = profile(t);
    Rat term(1);
    long prev = 0;
    for (int i = 0; i < n; ++i) {
      term *= xpow[i].at(prof[i].rowsum - prev);
      term *= upow[i].at(prof[i].ne);
      term *= vpow[i].at(prof[i].nw);
      term *= freepow[i].at(prof[i].free);
      prev = prof[i].rowsum;
    }
    total += term;
  });
  return total;
}

namespace {

LaurentPoly surrounding_factor(RingPtr ring, int n) {
  // prod_i (u X_i + v X_i^-1 + w)
  LaurentPoly p = LaurentPoly::constant(ring, 1);
  for (int i = 1; i <= n; ++i)
    p *= LaurentPoly::var_pow(ring, U, 1) * LaurentPoly::var_pow(ring, XI(i), 1) +
         LaurentPoly::var_pow(ring, V, 1) * LaurentPoly::var_pow(ring, XI(i), -1) +
         LaurentPoly::var_pow(ring, W, 1);
  return p;
}

std::vector<int> xvar_indices(int n) {
  std::vector<int> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = XI(i + 1);
  return xs;
}

}  // namespace

LaurentPoly gf_operator(const Row& bottom, RingPtr ring) {
  check_bottom(bottom);
  const int n = static_cast<int>(bottom.size());
  const auto xs = xvar_indices(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::map<std::vector<int>, LaurentPoly> schur_cache;
  auto schur_of = [&](const std::vector<int>& k) -> const LaurentPoly& {
    auto it = schur_cache.find(k);
    if (it == schur_cache.end())
      it = schur_cache.emplace(k, schur_extended(k, ring, xs)).first;
    return it->second;
  };

  LaurentPoly sum = LaurentPoly::zero(ring);
  std::vector<int> k(bottom.begin(), bottom.end());
  // Choice per pair (i,j): 0 -> u E_{k_i}, 1 -> v E_{k_j}^-1, 2 -> w both.
  std::vector<int> choice(pairs.size(), 0);
  for (;;) {
    std::vector<int> shifted = k;
    int nu = 0, nv = 0, nw = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [i, j] = pairs[p];
      switch (choice[p]) {
        case 0: ++shifted[i]; ++nu; break;
        case 1: --shifted[j]; ++nv; break;
        case 2: ++shifted[i]; --shifted[j]; ++nw; break;
      }
    }
    Expo e(ring->size(), 0);
    e[U] = nu;
    e[V] = nv;
    e[W] = nw;
    sum += schur_of(shifted).shifted(e);

    std::size_t p = 0;
    while (p < pairs.size() && choice[p] == 2) choice[p++] = 0;
    if (p == pairs.size()) break;
    ++choice[p];
  }
  return surrounding_factor(ring, n) * sum;
}

LaurentPoly gf_antisym(const Row& bottom, RingPtr ring) {
  check_bottom(bottom);
  const int n = static_cast<int>(bottom.size());
  LaurentPoly f = LaurentPoly::constant(ring, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      f *= LaurentPoly::var_pow(ring, U, 1) * LaurentPoly::var_pow(ring, XI(j), 1) +
           LaurentPoly::var_pow(ring, V, 1) * LaurentPoly::var_pow(ring, XI(i), -1) +
           LaurentPoly::var_pow(ring, W, 1);
  Expo e(ring->size(), 0);
  for (int i = 1; i <= n; ++i) e[XI(i)] = bottom[i - 1] + n - i;
  f = f.shifted(e);
  const auto xs = xvar_indices(n);
  return exact_div(antisymmetrize(f, xs), vandermonde(ring, xs));
}

LaurentPoly gf_bialternant(int n, RingPtr ring) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  auto u = LaurentPoly::var_pow(ring, U, 1);
  auto v = LaurentPoly::var_pow(ring, V, 1);
  auto w = LaurentPoly::var_pow(ring, W, 1);
  std::vector<LaurentPoly> Y(n + 1, LaurentPoly::zero(ring)), Z = Y;
  for (int i = 1; i <= n; ++i) {
    auto xi = [&](int p) { return LaurentPoly::var_pow(ring, XI(i), p); };
    Y[i] = u * u * xi(2) + u * w * xi(1);
    Z[i] = v * v * xi(-2) + v * w * xi(-1);
  }
  PolyMatrix m(ring, static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m.at(i - 1, j - 1) = Y[i].pow(j) - Z[i].pow(j);
  LaurentPoly num = det_poly(m);

  const auto xs = xvar_indices(n);
  LaurentPoly den = vandermonde(ring, xs);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      den *= u - v * LaurentPoly::var_pow(ring, XI(i), -1) *
                     LaurentPoly::var_pow(ring, XI(j), -1);
  LaurentPoly q = exact_div(num, den);
  Expo e(ring->size(), 0);
  for (int i = 1; i <= n; ++i) e[XI(i)] = n - 2;
  return q.shifted(e);
}

Row staircase_bottom(int n) {
  Row r(n);
  for (int i = 0; i < n; ++i) r[i] = 2 * i;
  return r;
}

// ---- ASM conversions ----

namespace {

bool alternating_line(const std::vector<int>& line) {
  int partial = 0;
  for (int x : line) {
    if (x < -1 || x > 1) return false;
    partial += x;
    if (partial < 0 || partial > 1) return false;
  }
  return partial == 1;
}

}  // namespace

bool is_asm(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return false;
  for (const auto& row : a)
    if (row.size() != n || !alternating_line(row)) return false;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = a[i][j];
    if (!alternating_line(col)) return false;
  }
  return true;
}

bool is_vsasm(const Matrix& a) {
  if (!is_asm(a)) return false;
  const std::size_t n = a.size();
  if (n % 2 == 0) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j] != a[i][n - 1 - j]) return false;
  return true;
}

MonotoneTriangle asm_to_mt(const Matrix& a) {
  if (!is_asm(a)) throw std::invalid_argument("not an alternating sign matrix");
  const int n = static_cast<int>(a.size());
  MonotoneTriangle t;
  t.rows.resize(n);
  std::vector<int> colsum(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      colsum[j] += a[i][j];
      if (colsum[j] == 1) t.rows[i].push_back(j + 1);
    }
  }
  assert(t.valid());
  return t;
}

Matrix mt_to_asm(const MonotoneTriangle& t) {
  const int n = t.order();
  if (!t.valid()) throw std::invalid_argument("invalid monotone triangle");
  for (int j = 0; j < n; ++j)
    if (t.bottom()[j] != j + 1)
      throw std::invalid_argument("bottom row must be 1..n");
  Matrix a(n, std::vector<int>(n, 0));
  std::vector<int> prev(n, 0), cur(n, 0);
  for (int i = 0; i < n; ++i) {
    std::fill(cur.begin(), cur.end(), 0);
    for (int c : t.rows[i]) cur[c - 1] = 1;
    for (int j = 0; j < n; ++j) a[i][j] = cur[j] - prev[j];
    std::swap(prev, cur);
  }
  if (!is_asm(a)) throw std::invalid_argument("triangle does not encode an ASM");
  return a;
}

MonotoneTriangle vsasm_to_mt(const Matrix& a) {
  if (!is_vsasm(a)) throw std::invalid_argument("not a vertically symmetric ASM");
  const int nn = static_cast<int>(a.size());
  const int n = (nn - 1) / 2;
  if (n < 1) throw std::invalid_argument("order too small");
  // Rotate 90 degrees: b[i][j] = a[nn-1-j][i]; b mirrors around its middle row.
  Matrix b(nn, std::vector<int>(nn));
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) b[i][j] = a[nn - 1 - j][i];
  MonotoneTriangle full = asm_to_mt(b);
  MonotoneTriangle t;
  t.rows.assign(full.rows.begin(), full.rows.begin() + n);
  for (auto& row : t.rows)
    for (int& x : row) x -= 2;
  assert(t.valid());
  return t;
}

Matrix mt_to_vsasm(const MonotoneTriangle& t) {
  const int n = t.order();
  if (!t.valid()) throw std::invalid_argument("invalid monotone triangle");
  if (t.bottom() != staircase_bottom(n))
    throw std::invalid_argument("bottom row must be 0,2,..,2n-2");
  const int nn = 2 * n + 1;
  // Rebuild the rotated matrix: rows 1..n from the shifted triangle, the
  // middle row alternates +1/-1, the lower half mirrors the upper.
  Matrix b(nn, std::vector<int>(nn, 0));
  std::vector<int> prev(nn, 0), cur(nn, 0);
  for (int i = 0; i < n; ++i) {
    std::fill(cur.begin(), cur.end(), 0);
    for (int x : t.rows[i]) cur[x + 1] = 1;  // +2 shift, 1-based -> index x+2-1
    for (int j = 0; j < nn; ++j) b[i][j] = cur[j] - prev[j];
    std::swap(prev, cur);
  }
  for (int j = 0; j < nn; ++j) b[n][j] = (j % 2 == 0) ? 1 : -1;
  for (int i = n + 1; i < nn; ++i) b[i] = b[nn - 1 - i];
  // Rotate back: a[r][c] = b[c][nn-1-r].
  Matrix a(nn, std::vector<int>(nn));
  for (int r = 0; r < nn; ++r)
    for (int c = 0; c < nn; ++c) a[r][c] = b[c][nn - 1 - r];
  if (!is_vsasm(a)) throw std::invalid_argument("triangle does not encode a VSASM");
  return a;
}

}  // namespace vsasm
