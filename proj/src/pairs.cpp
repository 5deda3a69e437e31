/* Plane partition pairs: validation, monomial weights, enumeration, the
   bijection with the single-start path families, and the Magog chain. */
#include "vsasm/pairs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vsasm {

namespace {

[[noreturn]] void bad(const char* msg) { throw std::invalid_argument(msg); }

// Row lengths, checked to form a Young diagram with n rows.
std::vector<int> shape_of(const PPRows& rows, int n) {
  if (static_cast<int>(rows.size()) != n) bad("expected exactly n rows");
  std::vector<int> len(n);
  for (int r = 0; r < n; ++r) len[r] = static_cast<int>(rows[r].size());
  for (int r = 0; r + 1 < n; ++r)
    if (len[r] < len[r + 1]) bad("row lengths must weakly decrease");
  return len;
}

void validate_filling(const PPRows& rows, int n, bool column_strict) {
  std::vector<int> len = shape_of(rows, n);
  for (int r = 0; r < n; ++r) {
    int bound = column_strict ? 2 * (n - r) : n - r;
    for (int c = 0; c < len[r]; ++c) {
      int e = rows[r][c];
      if (e < 1) bad("entries must be positive");
      if (e > bound) bad("entry exceeds its bottom-indexed row bound");
      if (c > 0) {
        if (column_strict ? rows[r][c - 1] < e : rows[r][c - 1] <= e)
          bad("row monotonicity violated");
      }
      if (r + 1 < n && c < len[r + 1]) {
        if (column_strict ? e <= rows[r + 1][c] : e < rows[r + 1][c])
          bad("column monotonicity violated");
      }
    }
  }
}

// All fillings of `len` of the given kind, bottom row first, each row
// left to right. Cell ranges follow from the already filled neighbors.
void gen_fillings(const std::vector<int>& len, int n, bool column_strict,
                  PPRows& cur, int r, int c,
                  const std::function<void(const PPRows&)>& emit) {
  if (r < 0) {
    emit(cur);
    return;
  }
  if (c == len[r]) {
    gen_fillings(len, n, column_strict, cur, r - 1, 0, emit);
    return;
  }
  int i = n - r;  // row index from the bottom
  int lo = 1, hi = column_strict ? 2 * i : i;
  if (r + 1 < n && c < len[r + 1])
    lo = std::max(lo, cur[r + 1][c] + (column_strict ? 1 : 0));
  if (c > 0) hi = std::min(hi, cur[r][c - 1] - (column_strict ? 0 : 1));
  for (int e = lo; e <= hi; ++e) {
    cur[r][c] = e;
    gen_fillings(len, n, column_strict, cur, r, c + 1, emit);
  }
}

void for_each_filling(const std::vector<int>& len, int n, bool column_strict,
                      const std::function<void(const PPRows&)>& emit) {
  PPRows cur(n);
  for (int r = 0; r < n; ++r) cur[r].assign(len[r], 0);
  gen_fillings(len, n, column_strict, cur, n - 1, 0, emit);
}

// Shapes inside the staircase (n, n-1, ..., 1), as top-to-bottom lengths.
void for_each_shape(int n, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> len(n, 0);
  std::function<void(int, int)> rec = [&](int r, int cap) {
    if (r == n) {
      emit(len);
      return;
    }
    for (int l = std::min(cap, n - r); l >= 0; --l) {
      len[r] = l;
      rec(r + 1, l);
    }
  };
  rec(0, n);
}

}  // namespace

void validate_cspp(const PPRows& p, int n) { validate_filling(p, n, true); }
void validate_rspp(const PPRows& q, int n) { validate_filling(q, n, false); }

LaurentPoly pair_weight(const PPPair& pair, int n, RingPtr ring) {
  validate_cspp(pair.p, n);
  validate_rspp(pair.q, n);
  int entries = 0;
  for (int r = 0; r < n; ++r) {
    if (pair.p[r].size() != pair.q[r].size()) bad("pair shapes differ");
    entries += static_cast<int>(pair.q[r].size());
  }
  Expo e(ring->size(), 0);
  e[2] = n * (n + 1) / 2 - entries;
  for (int i = 1; i <= n; ++i) e[2 + i] = n - 1;
  for (const auto& row : pair.p)
    for (int v : row) {
      int i = (v + 1) / 2;
      if (v % 2 == 1) {
        ++e[0];
        ++e[2 + i];
      } else {
        ++e[1];
        --e[2 + i];
      }
    }
  return LaurentPoly::monomial(ring, 1, e);
}

void for_each_pair(int n, const std::function<void(const PPPair&)>& fn) {
  for_each_shape(n, [&](const std::vector<int>& len) {
    for_each_filling(len, n, true, [&](const PPRows& p) {
      for_each_filling(len, n, false, [&](const PPRows& q) {
        fn(PPPair{p, q});
      });
    });
  });
}

LaurentPoly enum_gf_pairs(int n, RingPtr ring) {
  LaurentPoly total = LaurentPoly::zero(ring);
  // Group by shape and column-strict filling; the row-strict fillings
  // contribute only their count.
  for_each_shape(n, [&](const std::vector<int>& len) {
    long long q_count = 0;
    for_each_filling(len, n, false, [&](const PPRows&) { ++q_count; });
    if (q_count == 0) return;
    PPRows q(n);
    // Any one row-strict filling stands in; only the sizes matter.
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < len[r]; ++c) q[r].push_back((n - r) - c);
    for_each_filling(len, n, true, [&](const PPRows& p) {
      total += pair_weight(PPPair{p, q}, n, ring).scaled(Int(q_count));
    });
  });
  return total;
}

PPPair paths3_to_pair(const PathFamily& f) {
  if (f.interp != Interp::JT4) bad("family is not from the single-start model");
  int n = f.n;
  if (static_cast<int>(f.paths.size()) != n) bad("wrong number of paths");
  PPRows p(n), q(n);
  std::set<Point> seen;
  for (int a = 0; a < n; ++a) {
    int i = a + 1;
    const PathPoints& pts = f.paths[a];
    if (pts.empty() || pts.front() != Point{i, 2 * i} ||
        pts.back() != Point{i, 1 - i})
      bad("path endpoints do not fit the model");
    std::vector<int> heights, diag;
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
      Point from = pts[s], to = pts[s + 1];
      if (!seen.insert(from).second) bad("paths intersect");
      int dx = to.x - from.x, dy = to.y - from.y;
      if (dx == 1 && dy == 0 && from.y >= 1)
        heights.push_back(from.y);
      else if (dx == -1 && dy == -1 && from.y <= 1)
        diag.push_back(from.x - from.y);
      else if (!(dx == 0 && dy == -1))
        bad("illegal step");
    }
    if (!seen.insert(pts.back()).second) bad("paths intersect");
    p[n - i] = heights;
    std::reverse(diag.begin(), diag.end());
    for (std::size_t c = 0; c < diag.size(); ++c)
      diag[c] -= (i - 1) + static_cast<int>(c);
    q[n - i] = diag;
  }
  PPPair pair{p, q};
  validate_cspp(pair.p, n);
  validate_rspp(pair.q, n);
  return pair;
}

PathFamily pair_to_paths3(const PPPair& pair, int n, RingPtr ring) {
  validate_cspp(pair.p, n);
  validate_rspp(pair.q, n);
  std::vector<PathPoints> paths;
  for (int i = 1; i <= n; ++i) {
    const std::vector<int>& pr = pair.p[n - i];
    const std::vector<int>& qr = pair.q[n - i];
    int l = static_cast<int>(pr.size());
    if (static_cast<int>(qr.size()) != l) bad("pair shapes differ");
    PathPoints pts = {{i, 2 * i}};
    for (int h : pr) {
      while (pts.back().y > h) pts.push_back({pts.back().x, pts.back().y - 1});
      pts.push_back({pts.back().x + 1, pts.back().y});
    }
    while (pts.back().y > 1) pts.push_back({pts.back().x, pts.back().y - 1});
    // Diagonal positions relative to y = x, in path order.
    for (int c = l - 1; c >= 0; --c) {
      int s = qr[c] + (i - 1) + c;
      while (pts.back().x - pts.back().y < s)
        pts.push_back({pts.back().x, pts.back().y - 1});
      if (pts.back().x - pts.back().y != s) bad("diagonal positions clash");
      pts.push_back({pts.back().x - 1, pts.back().y - 1});
    }
    while (pts.back().y > 1 - i) pts.push_back({pts.back().x, pts.back().y - 1});
    if (pts.back() != Point{i, 1 - i}) bad("pair does not close up to the end point");
    paths.push_back(std::move(pts));
  }
  PathFamily f;
  f.interp = Interp::JT4;
  f.n = n;
  f.paths = paths;
  f.sigma.resize(n);
  for (int a = 0; a < n; ++a) f.sigma[a] = a;
  f.right_start.assign(n, false);
  f.weight = family_weight(Interp::JT4, n, paths, ring);
  return f;
}

void validate_magog(const MagogTriangle& m, int n) {
  if (static_cast<int>(m.size()) != n + 1) bad("expected n+1 rows");
  for (int k = 0; k <= n; ++k) {
    if (static_cast<int>(m[k].size()) != k + 1) bad("row k must hold k entries");
    for (int j = 0; j <= k; ++j) {
      if (m[k][j] < 1) bad("entries must be positive");
      if (m[k][j] > j + 1) bad("entry exceeds its diagonal bound");
      if (k > 0 && j > 0 && m[k][j] < m[k - 1][j - 1])
        bad("rows must interlace");
      if (k > 0 && j < k && m[k][j] > m[k - 1][j])
        bad("rows must interlace");
    }
  }
}

PPRows rspp_to_ssyt(const PPRows& q, int n) {
  validate_rspp(q, n);
  int cols = q.empty() ? 0 : static_cast<int>(q[0].size());
  PPRows t;
  for (int c = 0; c < cols; ++c) {
    std::vector<int> row;
    for (int r = 0; r < n && c < static_cast<int>(q[r].size()); ++r)
      row.push_back(n + 1 - q[r][c]);
    t.push_back(row);
  }
  return t;
}

PPRows ssyt_to_gt(const PPRows& t, int n) {
  PPRows g;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row;
    for (const auto& trow : t) {
      int cnt = 0;
      for (int e : trow)
        if (e <= i) ++cnt;
      if (cnt > 0) row.push_back(cnt);
    }
    row.resize(i, 0);
    std::reverse(row.begin(), row.end());
    g.push_back(row);
  }
  return g;
}

MagogTriangle gt_to_magog(const PPRows& g, int n) {
  MagogTriangle m = {{1}};
  for (int k = 1; k <= n; ++k) {
    std::vector<int> row = {1};
    for (int e : g[k - 1]) row.push_back(e + 1);
    m.push_back(row);
  }
  return m;
}

MagogTriangle rspp_to_magog(const PPRows& q, int n) {
  return gt_to_magog(ssyt_to_gt(rspp_to_ssyt(q, n), n), n);
}

PPRows magog_to_rspp(const MagogTriangle& m, int n) {
  validate_magog(m, n);
  // Shapes of the tableau entries at most i, from the pattern rows.
  std::vector<std::vector<int>> shapes(n + 1);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> lam(m[i].begin() + 1, m[i].end());
    for (int& e : lam) --e;
    std::reverse(lam.begin(), lam.end());
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    shapes[i] = lam;
  }
  // Fill the skew of consecutive shapes with entry i.
  PPRows t;
  for (int i = 1; i <= n; ++i) {
    const auto& prev = shapes[i - 1];
    const auto& next = shapes[i];
    if (next.size() < prev.size()) bad("shapes must grow");
    for (std::size_t r = 0; r < next.size(); ++r) {
      int from = r < prev.size() ? prev[r] : 0;
      if (next[r] < from) bad("shapes must grow");
      if (r + 1 < next.size() && next[r + 1] > from)
        bad("new cells must form a horizontal strip");
      if (r == t.size()) t.push_back({});
      for (int c = from; c < next[r]; ++c) t[r].push_back(i);
    }
  }
  // Conjugate, then send entry e back to n+1-e.
  int rows = t.empty() ? 0 : static_cast<int>(t[0].size());
  PPRows q(n);
  for (int r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < t.size() && r < static_cast<int>(t[c].size()); ++c)
      q[r].push_back(n + 1 - t[c][r]);
  validate_rspp(q, n);
  return q;
}

}  // namespace vsasm
