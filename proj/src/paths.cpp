/* Path enumeration and determinant forms for the staircase generating
   function. Single paths are stored as point lists; one region-aware walk
   per model both validates a path and computes its weight, so enumerated
   and user-supplied families share the same weight definition. */
#include "vsasm/paths.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "vsasm/symfunc.hpp"

namespace vsasm {

namespace {

constexpr int U = 0, V = 1, W = 2;
int xi(int i) { return 2 + i; }

long long key_of(Point p) {
  return static_cast<long long>(p.x) * 100000 + p.y;
}

LaurentPoly uvw_mono(const RingPtr& ring, Int c, int du, int dv, int dw) {
  Expo e(ring->size(), 0);
  e[U] = du;
  e[V] = dv;
  e[W] = dw;
  return LaurentPoly::monomial(ring, std::move(c), e);
}

LaurentPoly var_mono(const RingPtr& ring, int uv, int d, int dx) {
  Expo e(ring->size(), 0);
  e[uv] = 1;
  e[xi(d)] = dx;
  return LaurentPoly::monomial(ring, 1, e);
}

// u X_d + v X_d^-1
LaurentPoly hv_pair(const RingPtr& ring, int d) {
  return var_mono(ring, U, d, 1) + var_mono(ring, V, d, -1);
}

// u X_d + w + v X_d^-1
LaurentPoly hvw(const RingPtr& ring, int d) {
  return hv_pair(ring, d) + LaurentPoly::var_pow(ring, W, 1);
}

// height 2d-1 -> u X_d, height 2d -> v X_d^-1
LaurentPoly ladder(const RingPtr& ring, int h) {
  return h % 2 ? var_mono(ring, U, (h + 1) / 2, 1)
               : var_mono(ring, V, h / 2, -1);
}

int ring_order(const RingPtr& ring) { return static_cast<int>(ring->size()) - 3; }

[[noreturn]] void bad_path(const char* what) {
  throw std::invalid_argument(std::string("path family: ") + what);
}

// ---- weight walks ----

LaurentPoly walk_i1(const PathPoints& pts, const RingPtr& ring) {
  if (pts.empty()) bad_path("empty path");
  int n = ring_order(ring);
  LaurentPoly wt = LaurentPoly::constant(ring, 1);
  int phase = pts[0].x < 0 ? 1 : (pts[0].y > 1 ? 2 : 3);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    Point a = pts[k], b = pts[k + 1];
    int dx = b.x - a.x, dy = b.y - a.y;
    if (phase == 1) {
      if (dx == 1 && dy == 1) {
      } else if (dx == 1 && dy == 0) {
        wt = wt * LaurentPoly::var_pow(ring, W, 1);
      } else {
        bad_path("illegal step left of the axis");
      }
    } else if (phase == 2) {
      if (b.y < 1) bad_path("descent below y=1 before touching it");
      if (dx == 1 && dy == -1) {
      } else if (dx == 0 && dy == -2) {
        wt = wt * uvw_mono(ring, -1, 1, 1, 0);
      } else {
        bad_path("illegal step in the descent region");
      }
    } else {
      if (dx == -1 && dy == 0) {
        int d = 2 - a.y;
        if (d < 1 || d > n) bad_path("horizontal outside the variable range");
        wt = wt * hv_pair(ring, d);
      } else if (dx == 0 && dy == -1) {
      } else {
        bad_path("illegal step below y=1");
      }
    }
    if (phase == 1 && b.x == 0) phase = 2;
    if (phase == 2 && b.y == 1) phase = 3;
  }
  return wt;
}

LaurentPoly walk_i2(const PathPoints& pts, const RingPtr& ring) {
  if (pts.empty()) bad_path("empty path");
  int n = ring_order(ring);
  LaurentPoly wt = LaurentPoly::constant(ring, 1);
  bool lower = false;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    Point a = pts[k], b = pts[k + 1];
    int dx = b.x - a.x, dy = b.y - a.y;
    if (!lower && dx == 1 && dy == 0) {
      if (a.y < 1 || a.y > n) bad_path("horizontal outside the variable range");
      wt = wt * hvw(ring, a.y);
    } else if (!lower && dx == 0 && dy == -1 && b.y >= 1) {
    } else if (dx == -1 && dy == -1) {
      if (a.y > 1) bad_path("diagonal above y=1");
      lower = true;
      wt = wt * LaurentPoly::var_pow(ring, W, 1, Int(-1));
    } else if (dx == -2 && dy == -2) {
      if (a.y > 1) bad_path("double diagonal above y=1");
      lower = true;
      wt = wt * uvw_mono(ring, -1, 1, 1, 0);
    } else if (dx == -2 && dy == -1) {
      if (a.y > 1) bad_path("knight step above y=1");
      lower = true;
    } else {
      bad_path("illegal step");
    }
  }
  return wt;
}

// Shared by I3 and JT4: a vertical from y=1 downward is a weighted lower
// step, a vertical ending on or above y=1 is a free upper step.
LaurentPoly walk_i3(const PathPoints& pts, const RingPtr& ring) {
  if (pts.empty()) bad_path("empty path");
  int n = ring_order(ring);
  LaurentPoly wt = LaurentPoly::constant(ring, 1);
  bool lower = false;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    Point a = pts[k], b = pts[k + 1];
    int dx = b.x - a.x, dy = b.y - a.y;
    if (!lower && dx == 1 && dy == 0) {
      if (a.y < 1 || a.y > 2 * n) bad_path("horizontal outside the ladder");
      wt = wt * ladder(ring, a.y);
    } else if (!lower && dx == 0 && dy == -1 && b.y >= 1) {
    } else if (dx == 0 && dy == -1 && b.y <= 0) {
      if (a.y > 1) bad_path("weighted vertical above y=1");
      lower = true;
      wt = wt * LaurentPoly::var_pow(ring, W, 1);
    } else if (dx == -1 && dy == -1) {
      if (a.y > 1) bad_path("diagonal above y=1");
      lower = true;
    } else {
      bad_path("illegal step");
    }
  }
  return wt;
}

LaurentPoly walk(Interp interp, const PathPoints& pts, const RingPtr& ring) {
  switch (interp) {
    case Interp::I1:
      return walk_i1(pts, ring);
    case Interp::I2:
      return walk_i2(pts, ring);
    default:
      return walk_i3(pts, ring);
  }
}

// ---- start and end points ----

Point start_of(Interp interp, int n, int i, bool right) {
  switch (interp) {
    case Interp::I1:
      return {-i, i};
    case Interp::I2:
      return {i, i};
    case Interp::I3:
      return {right ? n + i - 1 : n - i + 1, 2 * n};
    default:
      return {i, 2 * i};
  }
}

Point end_of(Interp interp, int j) {
  switch (interp) {
    case Interp::I1:
      return {j - 1, 2 - j};
    case Interp::I2:
      return {2, 2 - j};
    default:
      return {j, 1 - j};
  }
}

// Disjointness key sets. "hard" keys may not repeat across paths; for I2
// they are the points with y >= 1 and the "soft" keys are the end points
// of the weighted lower steps (points with y <= 0), which may not repeat
// across paths either, while mid-edge crossings stay legal.
void path_keys(Interp interp, const PathPoints& pts,
               std::vector<long long>& hard, std::vector<long long>& soft) {
  hard.clear();
  soft.clear();
  for (Point p : pts) {
    if (interp == Interp::I2 && p.y <= 0)
      soft.push_back(key_of(p));
    else
      hard.push_back(key_of(p));
  }
}

// ---- single path generation ----

void gen_i1(int i, int j, const std::function<void(const PathPoints&)>& sink) {
  PathPoints pts;
  std::function<void()> below;  // region x>=0, y<=1
  std::function<void()> middle;
  below = [&] {
    Point cur = pts.back();
    if (cur.x == j - 1 && cur.y == 2 - j) {
      sink(pts);
      return;
    }
    if (cur.x > j - 1) {
      pts.push_back({cur.x - 1, cur.y});
      below();
      pts.pop_back();
    }
    if (cur.y > 2 - j) {
      pts.push_back({cur.x, cur.y - 1});
      below();
      pts.pop_back();
    }
  };
  middle = [&] {
    Point cur = pts.back();
    if (cur.y == 1) {
      if (cur.x >= j - 1) below();
      return;
    }
    pts.push_back({cur.x + 1, cur.y - 1});
    middle();
    pts.pop_back();
    if (cur.y >= 3) {
      pts.push_back({cur.x, cur.y - 2});
      middle();
      pts.pop_back();
    }
  };
  for (unsigned mask = 0; mask < (1u << i); ++mask) {
    pts.assign(1, {-i, i});
    for (int s = 0; s < i; ++s)
      pts.push_back({pts.back().x + 1,
                     pts.back().y + static_cast<int>((mask >> s) & 1u)});
    middle();
  }
}

// Right/down paths from `from` to (t,1).
void gen_rd(Point from, int t, PathPoints& pts,
            const std::function<void()>& done) {
  Point cur = pts.back();
  if (cur.x == t && cur.y == 1) {
    done();
    return;
  }
  if (cur.x < t) {
    pts.push_back({cur.x + 1, cur.y});
    gen_rd(from, t, pts, done);
    pts.pop_back();
  }
  if (cur.y > 1) {
    pts.push_back({cur.x, cur.y - 1});
    gen_rd(from, t, pts, done);
    pts.pop_back();
  }
}

void gen_i2(int i, int j, const std::function<void(const PathPoints&)>& sink) {
  PathPoints pts;
  std::function<void()> below = [&] {
    Point cur = pts.back();
    int dx = cur.x - 2, dy = cur.y - (2 - j);
    if (dx == 0 && dy == 0) {
      sink(pts);
      return;
    }
    for (Point s : {Point{-1, -1}, Point{-2, -2}, Point{-2, -1}}) {
      int nx = dx + s.x, ny = dy + s.y;
      if (nx < 0 || ny < 0 || nx < ny || nx > 2 * ny) continue;
      pts.push_back({cur.x + s.x, cur.y + s.y});
      below();
      pts.pop_back();
    }
  };
  int tlo = std::max(i, j + 1);
  for (int t = tlo; t <= 2 * j; ++t) {
    pts.assign(1, {i, i});
    gen_rd({i, i}, t, pts, below);
  }
}

void gen_i3(Point from, int j, const std::function<void(const PathPoints&)>& sink) {
  PathPoints pts;
  std::function<void()> below = [&] {
    Point cur = pts.back();
    int diag = cur.x - j, vert = (cur.y - (1 - j)) - diag;
    if (diag == 0 && vert == 0) {
      sink(pts);
      return;
    }
    if (diag > 0) {
      pts.push_back({cur.x - 1, cur.y - 1});
      below();
      pts.pop_back();
    }
    if (vert > 0) {
      pts.push_back({cur.x, cur.y - 1});
      below();
      pts.pop_back();
    }
  };
  int tlo = std::max(from.x, j);
  for (int t = tlo; t <= 2 * j; ++t) {
    pts.assign(1, from);
    gen_rd(from, t, pts, below);
  }
}

void gen_paths(Interp interp, int n, int i, bool right, int j,
               const std::function<void(const PathPoints&)>& sink) {
  switch (interp) {
    case Interp::I1:
      gen_i1(i, j, sink);
      break;
    case Interp::I2:
      gen_i2(i, j, sink);
      break;
    default:
      gen_i3(start_of(interp, n, i, right), j, sink);
      break;
  }
}

// ---- family assembly ----

int perm_sign(const std::vector<int>& sigma) {
  int s = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) s = -s;
  return s;
}

LaurentPoly prefactor(int n, const RingPtr& ring) {
  Expo e(ring->size(), 0);
  for (int i = 1; i <= n; ++i) e[xi(i)] = n - 1;
  return LaurentPoly::monomial(ring, 1, e);
}

LaurentPoly compose_weight(Interp interp, int n, const RingPtr& ring,
                           const std::vector<LaurentPoly>& wts,
                           const std::vector<int>& sigma,
                           const std::vector<bool>& right) {
  LaurentPoly w = prefactor(n, ring);
  for (const LaurentPoly& p : wts) w = w * p;
  if (interp == Interp::I3) {
    for (int a = 0; a < n; ++a)
      if (right[a]) w = w * uvw_mono(ring, a % 2 ? -1 : 1, a, a, 0);
  } else if (perm_sign(sigma) < 0) {
    w = -w;
  }
  return w;
}

struct Candidate {
  PathPoints pts;
  LaurentPoly wt;
  std::vector<long long> hard, soft;
};

struct StartOption {
  bool right = false;
  std::vector<std::vector<Candidate>> to_end;  // indexed by 0-based end
};

}  // namespace

void for_each_family(Interp interp, int n, RingPtr ring,
                     const std::function<void(const PathFamily&)>& fn) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::vector<std::vector<StartOption>> options(n);
  for (int a = 0; a < n; ++a) {
    int variants = (interp == Interp::I3 && a > 0) ? 2 : 1;
    for (int v = 0; v < variants; ++v) {
      StartOption opt;
      opt.right = v == 1;
      opt.to_end.resize(n);
      for (int b = 0; b < n; ++b)
        gen_paths(interp, n, a + 1, opt.right, b + 1, [&](const PathPoints& pts) {
          Candidate c;
          c.pts = pts;
          c.wt = walk(interp, pts, ring);
          path_keys(interp, pts, c.hard, c.soft);
          opt.to_end[b].push_back(std::move(c));
        });
      options[a].push_back(std::move(opt));
    }
  }

  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false), right(n, false);
  std::vector<const Candidate*> chosen(n, nullptr);
  std::unordered_set<long long> occ_hard, occ_soft;

  auto fits = [&](const Candidate& c) {
    for (long long k : c.hard)
      if (occ_hard.count(k)) return false;
    for (long long k : c.soft)
      if (occ_soft.count(k)) return false;
    return true;
  };
  auto place = [&](const Candidate& c, bool add) {
    for (long long k : c.hard)
      if (add)
        occ_hard.insert(k);
      else
        occ_hard.erase(k);
    for (long long k : c.soft)
      if (add)
        occ_soft.insert(k);
      else
        occ_soft.erase(k);
  };

  std::function<void(int)> rec = [&](int a) {
    if (a == n) {
      PathFamily f;
      f.interp = interp;
      f.n = n;
      f.sigma = sigma;
      if (interp == Interp::I3) f.right_start = right;
      std::vector<LaurentPoly> wts;
      for (int k = 0; k < n; ++k) {
        f.paths.push_back(chosen[k]->pts);
        wts.push_back(chosen[k]->wt);
      }
      f.weight = compose_weight(interp, n, ring, wts, sigma, right);
      fn(f);
      return;
    }
    for (const StartOption& opt : options[a])
      for (int b = 0; b < n; ++b) {
        if (used[b]) continue;
        for (const Candidate& c : opt.to_end[b]) {
          if (!fits(c)) continue;
          place(c, true);
          used[b] = true;
          sigma[a] = b;
          right[a] = opt.right;
          chosen[a] = &c;
          rec(a + 1);
          place(c, false);
          used[b] = false;
        }
      }
  };
  rec(0);
}

LaurentPoly family_weight(Interp interp, int n,
                          const std::vector<PathPoints>& paths, RingPtr ring) {
  if (static_cast<int>(paths.size()) != n) bad_path("wrong number of paths");
  std::vector<int> sigma(n, -1);
  std::vector<bool> right(n, false), used(n, false);
  std::vector<LaurentPoly> wts;
  std::set<long long> occ_hard, occ_soft;
  for (int a = 0; a < n; ++a) {
    const PathPoints& p = paths[a];
    if (p.empty()) bad_path("empty path");
    if (interp == Interp::I3 && p.front() == start_of(interp, n, a + 1, true))
      right[a] = a > 0;
    else if (p.front() != start_of(interp, n, a + 1, false))
      bad_path("wrong start point");
    int b = -1;
    for (int e = 0; e < n; ++e)
      if (p.back() == end_of(interp, e + 1)) b = e;
    if (b < 0 || used[b]) bad_path("wrong or repeated end point");
    used[b] = true;
    sigma[a] = b;
    wts.push_back(walk(interp, p, ring));
    std::vector<long long> hard, soft;
    path_keys(interp, p, hard, soft);
    for (long long k : hard)
      if (!occ_hard.insert(k).second) bad_path("paths share a point");
    for (long long k : soft)
      if (!occ_soft.insert(k).second) bad_path("lower steps share an end point");
  }
  return compose_weight(interp, n, ring, wts, sigma, right);
}

LaurentPoly path_weight(Interp interp, const PathPoints& pts, RingPtr ring) {
  if (pts.empty()) bad_path("empty path");
  return walk(interp, pts, ring);
}

namespace {

LaurentPoly enum_gf(Interp interp, int n, RingPtr ring) {
  LaurentPoly total = LaurentPoly::zero(ring);
  for_each_family(interp, n, ring,
                  [&](const PathFamily& f) { total += f.weight; });
  return total;
}

}  // namespace

LaurentPoly enum_gf_interp1(int n, RingPtr ring) { return enum_gf(Interp::I1, n, ring); }
LaurentPoly enum_gf_interp2(int n, RingPtr ring) { return enum_gf(Interp::I2, n, ring); }
LaurentPoly enum_gf_interp3(int n, RingPtr ring) { return enum_gf(Interp::I3, n, ring); }
LaurentPoly enum_gf_jt4(int n, RingPtr ring) { return enum_gf(Interp::JT4, n, ring); }

LaurentPoly entry_interp1(int i, int j, RingPtr ring) {
  if (i < 1 || j < 1) throw std::invalid_argument("indices must be positive");
  std::vector<LaurentPoly> args;
  for (int d = 1; d <= j; ++d) args.push_back(hv_pair(ring, d));
  LaurentPoly total = LaurentPoly::zero(ring);
  for (int p = i; p <= 2 * i; ++p) {
    Int bp = binom(i, 2 * i - p);
    for (int q = p; q >= 1; q -= 2) {
      int r = (p - q) / 2;
      Int bq = binom((p + q) / 2 - 1, r);
      if (bq == 0) continue;
      LaurentPoly h = hom_sym(q - j, args);
      if (h.is_zero()) continue;
      total += h * uvw_mono(ring, bp * bq * (r % 2 ? -1 : 1), r, r, 2 * i - p);
    }
  }
  return total;
}

LaurentPoly single_gf_interp1(int i, int j, RingPtr ring) {
  LaurentPoly total = LaurentPoly::zero(ring);
  gen_i1(i, j, [&](const PathPoints& pts) { total += walk_i1(pts, ring); });
  return total;
}

LaurentPoly det_gf_interp1(int n, RingPtr ring) {
  PolyMatrix m(ring, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i - 1, j - 1) = entry_interp1(i, j, ring);
  return det_poly(m) * prefactor(n, ring);
}

LaurentPoly c_tj(int t, int j, RingPtr ring) {
  LaurentPoly total = LaurentPoly::zero(ring);
  if (j < 1 || t - j - 1 < 0) return total;
  for (int r = 0;; ++r) {
    int steps = j - r - 1, b = 2 * j - 2 * r - t;
    if (steps < r || b < 0) break;
    Int m = binom(steps, r) * binom(steps - r, b);
    total += uvw_mono(ring, m * ((r + b) % 2 ? -1 : 1), r, r, b);
  }
  return total;
}

LaurentPoly c_tj_paths(int t, int j, RingPtr ring) {
  LaurentPoly total = LaurentPoly::zero(ring);
  int tx = t - 2, ty = j - 1;
  std::function<void(int, int, int, int)> rec = [&](int x, int y, int r, int b) {
    if (x == tx && y == ty) {
      total += uvw_mono(ring, (r + b) % 2 ? -1 : 1, r, r, b);
      return;
    }
    int dx = tx - x, dy = ty - y;
    if (dx < 0 || dy < 1 || dx < dy || dx > 2 * dy) return;
    rec(x + 1, y + 1, r, b + 1);
    rec(x + 2, y + 2, r + 1, b);
    rec(x + 2, y + 1, r, b);
  };
  rec(0, 0, 0, 0);
  return total;
}

LaurentPoly det_gf_interp2(int n, RingPtr ring) {
  PolyMatrix m(ring, n);
  for (int i = 1; i <= n; ++i) {
    std::vector<LaurentPoly> args;
    for (int d = 1; d <= i; ++d) args.push_back(hvw(ring, d));
    for (int j = 1; j <= n; ++j) {
      LaurentPoly entry = LaurentPoly::zero(ring);
      for (int t = j + 1; t <= 2 * j; ++t) {
        LaurentPoly c = c_tj(t, j, ring);
        if (c.is_zero()) continue;
        LaurentPoly h = hom_sym(t - i, args);
        if (!h.is_zero()) entry += c * h;
      }
      m.at(i - 1, j - 1) = entry;
    }
  }
  return det_poly(m) * prefactor(n, ring);
}

namespace {

LaurentPoly halve_coefficients(const LaurentPoly& p) {
  std::vector<Term> ts = p.terms();
  for (Term& t : ts) {
    if (t.c % 2 != 0)
      throw divisibility_error("halved determinant has an odd coefficient");
    t.c /= 2;
  }
  return LaurentPoly::from_terms(p.ring(), std::move(ts));
}

}  // namespace

LaurentPoly det_gf_interp3(int n, RingPtr ring) {
  std::vector<LaurentPoly> args;
  for (int d = 1; d <= n; ++d) args.push_back(var_mono(ring, U, d, 1));
  for (int d = 1; d <= n; ++d) args.push_back(var_mono(ring, V, d, -1));
  PolyMatrix m(ring, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      LaurentPoly entry = LaurentPoly::zero(ring);
      for (int k = j; k <= 2 * j; ++k) {
        LaurentPoly inner = hom_sym(k + i - n - 1, args) +
                            hom_sym(k - i - n + 1, args) *
                                uvw_mono(ring, 1, i - 1, i - 1, 0);
        entry += inner * uvw_mono(ring, binom(j, k - j), 0, 0, 2 * j - k);
      }
      m.at(i - 1, j - 1) = entry;
    }
  LaurentPoly d = det_poly(m) * prefactor(n, ring);
  if ((n / 2) % 2 == 1) d = -d;  // (-1)^C(n,2)
  return halve_coefficients(d);
}

LaurentPoly det_gf_jt4(int n, RingPtr ring) {
  PolyMatrix m(ring, n);
  for (int i = 1; i <= n; ++i) {
    std::vector<LaurentPoly> args;
    for (int d = 1; d <= i; ++d) {
      args.push_back(var_mono(ring, U, d, 1));
      args.push_back(var_mono(ring, V, d, -1));
    }
    for (int j = 1; j <= n; ++j) {
      LaurentPoly entry = LaurentPoly::zero(ring);
      for (int k = j; k <= 2 * j; ++k) {
        LaurentPoly h = hom_sym(k - i, args);
        if (!h.is_zero())
          entry += h * uvw_mono(ring, binom(j, k - j), 0, 0, 2 * j - k);
      }
      m.at(i - 1, j - 1) = entry;
    }
  }
  return det_poly(m) * prefactor(n, ring);
}

namespace {

Int int_det(std::vector<std::vector<Int>> m) {
  int n = static_cast<int>(m.size());
  Int sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n && piv < 0; ++r)
      if (m[r][k] != 0) piv = r;
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Int unrefined_det(int n) {
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = binom(i + j - 1, 2 * j - i - 1);
  return int_det(std::move(m));
}

Int count_tilings(int n) {
  // paths[i][j]: key lists of all paths from (2i-1,i-1) to (j-1,2j-2)
  std::vector<std::vector<std::vector<std::vector<long long>>>> paths(
      n, std::vector<std::vector<std::vector<long long>>>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<long long> keys;
      std::function<void(int, int)> rec = [&](int x, int y) {
        keys.push_back(key_of({x, y}));
        if (x == j - 1 && y == 2 * j - 2) {
          paths[i - 1][j - 1].push_back(keys);
        } else {
          if (x > j - 1) rec(x - 1, y);
          if (y < 2 * j - 2) rec(x, y + 1);
        }
        keys.pop_back();
      };
      if (2 * i - j >= 0 && 2 * j - i - 1 >= 0) rec(2 * i - 1, i - 1);
    }
  std::vector<bool> used(n, false);
  std::unordered_set<long long> occ;
  Int total = 0;
  std::function<void(int)> rec = [&](int a) {
    if (a == n) {
      total += 1;
      return;
    }
    for (int b = 0; b < n; ++b) {
      if (used[b]) continue;
      for (const std::vector<long long>& keys : paths[a][b]) {
        bool ok = true;
        for (long long k : keys)
          if (occ.count(k)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (long long k : keys) occ.insert(k);
        used[b] = true;
        rec(a + 1);
        used[b] = false;
        for (long long k : keys) occ.erase(k);
      }
    }
  };
  rec(0);
  return total;
}

}  // namespace vsasm
