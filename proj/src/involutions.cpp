/* Implementation of the sign-reversing involutions and path rewritings. */
#include "vsasm/involutions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "vsasm/symfunc.hpp"

namespace vsasm {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(msg);
}

bool is(const ColoredStep& s, int dx, int dy) {
  return s.dx == dx && s.dy == dy;
}

ColoredStep step(int dx, int dy, StepColor c = StepColor::uncolored) {
  return ColoredStep{dx, dy, c};
}

using Steps = std::vector<ColoredStep>;

}  // namespace

Point ColoredPath::end() const {
  Point p = start;
  for (const auto& s : steps) {
    p.x += s.dx;
    p.y += s.dy;
  }
  return p;
}

std::vector<Point> ColoredPath::points() const {
  std::vector<Point> pts{start};
  for (const auto& s : steps)
    pts.push_back(Point{pts.back().x + s.dx, pts.back().y + s.dy});
  return pts;
}

void validate_plain_path(const ColoredPath& path, int p, int j) {
  require(j >= 1 && p >= j, "plain path: parameters need p >= j >= 1");
  require(path.start == Point{0, p}, "plain path: wrong start");
  for (const auto& s : path.steps) {
    require(s.color == StepColor::uncolored, "plain path: colored step");
    require(is(s, 1, -1) || is(s, 0, -1), "plain path: illegal step");
  }
  require(path.end() == Point{2 * j - 1, -j + 1}, "plain path: wrong end");
}

void for_each_plain_path(int p, int j,
                         const std::function<void(const ColoredPath&)>& fn) {
  if (j < 1 || p < j) return;
  ColoredPath cur{Point{0, p}, {}};
  std::function<void(int, int)> rec = [&](int nd, int nv) {
    if (nd == 0 && nv == 0) {
      fn(cur);
      return;
    }
    if (nd > 0) {
      cur.steps.push_back(step(1, -1));
      rec(nd - 1, nv);
      cur.steps.pop_back();
    }
    if (nv > 0) {
      cur.steps.push_back(step(0, -1));
      rec(nd, nv - 1);
      cur.steps.pop_back();
    }
  };
  rec(2 * j - 1, p - j);
}

void validate_colored_path(const ColoredPath& path, int p, int j) {
  require(j >= 1 && p >= j, "colored path: parameters need p >= j >= 1");
  require(path.start == Point{0, p}, "colored path: wrong start");
  int y = p;
  size_t k = 0;
  while (y > 1) {
    require(k < path.steps.size(), "colored path: stops above y=1");
    const auto& s = path.steps[k];
    require(s.color == StepColor::green, "colored path: upper step not green");
    require(is(s, 1, -1) || is(s, 0, -2), "colored path: illegal upper step");
    y += s.dy;
    require(y >= 1, "colored path: upper section crosses y=1");
    ++k;
  }
  for (; k < path.steps.size(); ++k) {
    const auto& s = path.steps[k];
    if (is(s, 0, -1))
      require(s.color == StepColor::green, "colored path: vertical not green");
    else if (is(s, -1, 0))
      require(s.color == StepColor::blue || s.color == StepColor::red,
              "colored path: horizontal neither blue nor red");
    else
      require(false, "colored path: illegal lower step");
  }
  require(path.end() == Point{j - 1, -j + 2}, "colored path: wrong end");
}

void for_each_colored_path(int p, int j,
                           const std::function<void(const ColoredPath&)>& fn) {
  if (j < 1 || p < j) return;
  for (int q = p; q >= j; q -= 2) {
    ColoredPath cur{Point{0, p}, {}};
    std::function<void(int, int)> lower = [&](int nh, int nv) {
      if (nh == 0 && nv == 0) {
        fn(cur);
        return;
      }
      if (nh > 0) {
        for (StepColor c : {StepColor::blue, StepColor::red}) {
          cur.steps.push_back(step(-1, 0, c));
          lower(nh - 1, nv);
          cur.steps.pop_back();
        }
      }
      if (nv > 0) {
        cur.steps.push_back(step(0, -1, StepColor::green));
        lower(nh, nv - 1);
        cur.steps.pop_back();
      }
    };
    std::function<void(int, int)> upper = [&](int nd, int ndd) {
      if (nd == 0 && ndd == 0) {
        lower(q - j, j - 1);
        return;
      }
      if (nd > 0) {
        cur.steps.push_back(step(1, -1, StepColor::green));
        upper(nd - 1, ndd);
        cur.steps.pop_back();
      }
      if (ndd > 0) {
        cur.steps.push_back(step(0, -2, StepColor::green));
        upper(nd, ndd - 1);
        cur.steps.pop_back();
      }
    };
    upper(q - 1, (p - q) / 2);
  }
}

int colored_sign(const ColoredPath& path) {
  int dd = 0;
  for (const auto& s : path.steps)
    if (is(s, 0, -2)) ++dd;
  return dd % 2 == 0 ? 1 : -1;
}

std::vector<std::pair<ColoredPath, int>> expand_plain_path(
    const ColoredPath& path, int p, int j) {
  validate_plain_path(path, p, j);
  std::vector<std::pair<ColoredPath, int>> out;
  std::vector<std::pair<ColoredPath, int>> work;
  work.emplace_back(path, 1);
  while (!work.empty()) {
    ColoredPath cur = std::move(work.back().first);
    int sign = work.back().second;
    work.pop_back();
    size_t first = 0, count = 0;
    for (size_t k = 0; k < cur.steps.size(); ++k) {
      if (cur.steps[k].color == StepColor::uncolored) {
        if (count == 0) first = k;
        ++count;
      }
    }
    check(count >= 1, "expansion: no uncolored step left");
    if (count == 1) {
      check(is(cur.steps[first], 1, -1),
            "expansion: last uncolored step not diagonal");
      cur.steps.erase(cur.steps.begin() + static_cast<long>(first));
      validate_colored_path(cur, p, j);
      out.emplace_back(std::move(cur), sign);
      continue;
    }
    check(cur.steps[first + 1].color == StepColor::uncolored,
          "expansion: uncolored block not contiguous");
    const ColoredStep s1 = cur.steps[first];
    const ColoredStep s2 = cur.steps[first + 1];
    auto at = [&](size_t k) { return cur.steps.begin() + static_cast<long>(k); };
    if (is(s1, 1, -1) && is(s2, 1, -1)) {
      cur.steps[first].color = StepColor::green;
      cur.steps.erase(at(first + 1));
      cur.steps.push_back(step(0, -1, StepColor::green));
      work.emplace_back(std::move(cur), sign);
    } else if (is(s1, 1, -1) && is(s2, 0, -1)) {
      cur.steps[first].color = StepColor::green;
      cur.steps[first + 1] = step(1, -1);
      cur.steps.push_back(step(-1, 0, StepColor::blue));
      work.emplace_back(std::move(cur), sign);
    } else if (is(s1, 0, -1) && is(s2, 1, -1)) {
      cur.steps[first] = step(1, -1, StepColor::green);
      cur.steps.push_back(step(-1, 0, StepColor::red));
      work.emplace_back(std::move(cur), sign);
    } else {
      ColoredPath blue = cur;
      blue.steps[first] = step(1, -1, StepColor::green);
      blue.steps.push_back(step(-1, 0, StepColor::blue));
      work.emplace_back(std::move(blue), sign);
      ColoredPath red = cur;
      red.steps[first] = step(1, -1, StepColor::green);
      red.steps.push_back(step(-1, 0, StepColor::red));
      work.emplace_back(std::move(red), sign);
      cur.steps[first] = step(0, -2, StepColor::green);
      cur.steps.erase(at(first + 1));
      work.emplace_back(std::move(cur), -sign);
    }
  }
  return out;
}

ColoredPath colored_to_plain(const ColoredPath& path, int p, int j) {
  validate_colored_path(path, p, j);
  ColoredPath cur = path;
  int y = p;
  size_t k = 0;
  while (y > 1) {
    y += cur.steps[k].dy;
    ++k;
  }
  auto at = [&](size_t pos) {
    return cur.steps.begin() + static_cast<long>(pos);
  };
  cur.steps.insert(at(k), step(1, -1));
  for (;;) {
    size_t m = 0;
    while (m < cur.steps.size() && cur.steps[m].color == StepColor::green &&
           (is(cur.steps[m], 1, -1) || is(cur.steps[m], 0, -2)))
      ++m;
    if (m == 0) break;
    if (is(cur.steps[m - 1], 0, -2)) {
      cur.steps[m - 1] = step(0, -1);
      cur.steps.insert(at(m - 1), step(0, -1));
      continue;
    }
    check(is(cur.steps[m - 1], 1, -1), "uncoloring: malformed section end");
    check(m < cur.steps.size(), "uncoloring: nothing after the green section");
    const ColoredStep back = cur.steps.back();
    if (is(back, 0, -1) && back.color == StepColor::green) {
      cur.steps.pop_back();
      cur.steps[m - 1] = step(1, -1);
      cur.steps.insert(at(m - 1), step(1, -1));
      continue;
    }
    check(is(back, -1, 0) &&
              (back.color == StepColor::blue || back.color == StepColor::red),
          "uncoloring: malformed path end");
    const ColoredStep follower = cur.steps[m];
    check(follower.color == StepColor::uncolored,
          "uncoloring: step after the green section is colored");
    if (is(follower, 0, -1)) {
      cur.steps[m - 1] = step(0, -1);
      cur.steps.pop_back();
    } else if (is(follower, 1, -1)) {
      if (back.color == StepColor::red) {
        cur.steps[m - 1] = step(0, -1);
      } else {
        cur.steps[m] = step(0, -1);
        cur.steps[m - 1].color = StepColor::uncolored;
      }
      cur.steps.pop_back();
    } else {
      check(false, "uncoloring: illegal step after the green section");
    }
  }
  validate_plain_path(cur, p, j);
  return cur;
}

namespace {

// Split index of a reflected path: steps before it rise, steps after fall.
struct ReflectedParts {
  size_t split = 0;
  int p = 0;  // height of the last axis point
};

ReflectedParts parse_reflected(const ColoredPath& path, int i, int j) {
  require(i >= 1 && j >= 1, "reflected path: parameters need i, j >= 1");
  require(path.start == Point{2 * j - 1, -j + 1}, "reflected path: wrong start");
  size_t split = 0;
  while (split < path.steps.size() &&
         (is(path.steps[split], -1, 1) || is(path.steps[split], 0, 1)))
    ++split;
  Point axis = path.start;
  for (size_t k = 0; k < split; ++k) {
    axis.x += path.steps[k].dx;
    axis.y += path.steps[k].dy;
  }
  require(axis.x == 0, "reflected path: rising half misses the axis");
  for (size_t k = split; k < path.steps.size(); ++k)
    require(is(path.steps[k], 1, -1) || is(path.steps[k], 1, 0),
            "reflected path: illegal falling step");
  for (const auto& s : path.steps)
    require(s.color == StepColor::uncolored, "reflected path: colored step");
  require(path.end() == Point{i, i}, "reflected path: wrong end");
  return ReflectedParts{split, axis.y};
}

}  // namespace

void validate_reflected_path(const ColoredPath& path, int i, int j) {
  parse_reflected(path, i, j);
}

void for_each_reflected_path(int i, int j,
                             const std::function<void(const ColoredPath&)>& fn) {
  if (i < 1 || j < 1) return;
  for (int p = std::max(i, j); p <= 2 * i; ++p) {
    ColoredPath cur{Point{2 * j - 1, -j + 1}, {}};
    std::function<void(int, int)> falling = [&](int nd, int nh) {
      if (nd == 0 && nh == 0) {
        fn(cur);
        return;
      }
      if (nd > 0) {
        cur.steps.push_back(step(1, -1));
        falling(nd - 1, nh);
        cur.steps.pop_back();
      }
      if (nh > 0) {
        cur.steps.push_back(step(1, 0));
        falling(nd, nh - 1);
        cur.steps.pop_back();
      }
    };
    std::function<void(int, int)> rising = [&](int nd, int nv) {
      if (nd == 0 && nv == 0) {
        falling(p - i, 2 * i - p);
        return;
      }
      if (nd > 0) {
        cur.steps.push_back(step(-1, 1));
        rising(nd - 1, nv);
        cur.steps.pop_back();
      }
      if (nv > 0) {
        cur.steps.push_back(step(0, 1));
        rising(nd, nv - 1);
        cur.steps.pop_back();
      }
    };
    rising(2 * j - 1, p - j);
  }
}

int reflected_sign(const ColoredPath& path) {
  int nh = 0;
  for (const auto& s : path.steps)
    if (is(s, 1, 0)) ++nh;
  return nh % 2 == 0 ? 1 : -1;
}

namespace {

// Length of the shared diagonal run at the axis: the minimum of the
// trailing (-1,1)-run of the rising half and the leading (1,-1)-run of
// the falling half.
int reflected_shared_run(const ColoredPath& path, size_t split) {
  int tr = 0;
  for (size_t k = split; k-- > 0 && is(path.steps[k], -1, 1);) ++tr;
  int lr = 0;
  for (size_t k = split; k < path.steps.size() && is(path.steps[k], 1, -1); ++k)
    ++lr;
  return std::min(tr, lr);
}

}  // namespace

bool is_reflected_fixed(const ColoredPath& path, int i, int j) {
  auto parts = parse_reflected(path, i, j);
  return reflected_shared_run(path, parts.split) >= i;
}

ColoredPath reflected_involution(const ColoredPath& path, int i, int j) {
  auto parts = parse_reflected(path, i, j);
  const size_t split = parts.split;
  int tr = 0;
  for (size_t k = split; k-- > 0 && is(path.steps[k], -1, 1);) ++tr;
  int lr = 0;
  for (size_t k = split; k < path.steps.size() && is(path.steps[k], 1, -1); ++k)
    ++lr;
  const int run = std::min(tr, lr);
  if (run >= i) return path;
  ColoredPath cur = path;
  auto at = [&](size_t pos) {
    return cur.steps.begin() + static_cast<long>(pos);
  };
  const size_t k = static_cast<size_t>(run);
  if (lr > run) {
    // The falling half continues diagonally: push the run down by turning
    // the rising vertical below it into a falling horizontal.
    check(tr == run, "reflected involution: run bookkeeping broken");
    check(split > k, "reflected involution: rising half too short");
    check(is(cur.steps[split - k - 1], 0, 1),
          "reflected involution: step below the shared run not vertical");
    cur.steps.erase(at(split - k - 1));
    cur.steps[split - 1 + k] = step(1, 0);
  } else {
    // The falling half continues horizontally: push the run up.
    check(split + k < cur.steps.size(),
          "reflected involution: falling half too short");
    check(is(cur.steps[split + k], 1, 0),
          "reflected involution: step after the shared run not horizontal");
    cur.steps[split + k] = step(1, -1);
    cur.steps.insert(at(split - k), step(0, 1));
  }
  validate_reflected_path(cur, i, j);
  return cur;
}

LaurentPoly colored_path_weight(const ColoredPath& path, RingPtr ring) {
  require(ring != nullptr, "colored path weight: null ring");
  Expo e(ring->size(), 0);
  bool neg = false;
  int y = path.start.y;
  for (const auto& s : path.steps) {
    if (is(s, 0, -2)) {
      neg = !neg;
      e[0] += 1;
      e[1] += 1;
    } else if (is(s, -1, 0)) {
      const int d = 2 - y;
      require(d >= 1 && static_cast<size_t>(d + 2) < ring->size(),
              "colored path weight: ring too small for X_d");
      if (s.color == StepColor::blue) {
        e[0] += 1;
        e[static_cast<size_t>(d + 2)] += 1;
      } else {
        e[1] += 1;
        e[static_cast<size_t>(d + 2)] -= 1;
      }
    }
    y += s.dy;
  }
  return LaurentPoly::monomial(ring, neg ? Int(-1) : Int(1), e);
}

bool is_signless_fixed(const ColoredPath& path) {
  for (size_t k = 0; k < path.steps.size(); ++k) {
    if (is(path.steps[k], 0, -2)) return false;
    if (k + 1 < path.steps.size() && is(path.steps[k], -1, 0) &&
        path.steps[k].color == StepColor::blue &&
        is(path.steps[k + 1], -1, 0) &&
        path.steps[k + 1].color == StepColor::red)
      return false;
  }
  return true;
}

ColoredPath signless_involution(const ColoredPath& path, int p, int j) {
  validate_colored_path(path, p, j);
  ColoredPath cur = path;
  auto at = [&](size_t pos) {
    return cur.steps.begin() + static_cast<long>(pos);
  };
  size_t r = 0;
  while (r < cur.steps.size() && is(cur.steps[r], 1, -1)) ++r;
  int y = p;
  size_t m = 0;
  while (y > 1) {
    y += cur.steps[m].dy;
    ++m;
  }
  // Blue-red pair fully within the first r steps after the first point
  // on y=1, closest first.
  for (size_t s = 1; s + 1 <= r; ++s) {
    const auto& a = cur.steps[m + s - 1];
    const auto& b = cur.steps[m + s];
    if (is(a, -1, 0) && a.color == StepColor::blue && is(b, -1, 0) &&
        b.color == StepColor::red) {
      cur.steps.erase(at(m + s - 1), at(m + s + 1));
      check(is(cur.steps[s - 1], 1, -1) && is(cur.steps[s], 1, -1),
            "signless involution: paired steps not diagonal");
      cur.steps[s - 1] = step(0, -2, StepColor::green);
      cur.steps.erase(at(s));
      validate_colored_path(cur, p, j);
      return cur;
    }
  }
  if (r >= cur.steps.size() || !is(cur.steps[r], 0, -2)) return cur;
  cur.steps[r] = step(1, -1, StepColor::green);
  cur.steps.insert(at(r + 1), step(1, -1, StepColor::green));
  const size_t m2 = m + 1;
  cur.steps.insert(at(m2 + r), step(-1, 0, StepColor::blue));
  cur.steps.insert(at(m2 + r + 1), step(-1, 0, StepColor::red));
  validate_colored_path(cur, p, j);
  return cur;
}

LaurentPoly signless_class_gf(int p, int j, RingPtr ring) {
  require(ring != nullptr && ring->size() >= static_cast<size_t>(j + 3),
          "signless class gf: ring too small");
  std::vector<LaurentPoly> args;
  for (int d = 1; d <= j; ++d) {
    Expo ue(ring->size(), 0), ve(ring->size(), 0);
    ue[0] = 1;
    ue[static_cast<size_t>(d + 2)] = 1;
    ve[1] = 1;
    ve[static_cast<size_t>(d + 2)] = -1;
    args.push_back(LaurentPoly::monomial(ring, 1, ue) +
                   LaurentPoly::monomial(ring, 1, ve));
  }
  LaurentPoly total = LaurentPoly::zero(ring);
  for (int q = p; q >= j; q -= 2) {
    const int t = (p - q) / 2;
    Expo e(ring->size(), 0);
    e[0] = t;
    e[1] = t;
    const Int c = binom(p - t - 1, t) * (t % 2 == 0 ? Int(1) : Int(-1));
    if (c == 0) continue;
    total += hom_sym(q - j, args) * LaurentPoly::monomial(ring, c, e);
  }
  return total;
}

namespace {

// Region boundaries of a reduced path: i steps left of the axis, then
// diagonals down to y=1, then the staircase to the end.
struct ReducedParts {
  int i = 0;
  int h = 0;          // height at the axis
  size_t r2_begin = 0;  // first diagonal step
  size_t r3_begin = 0;  // first staircase step
};

ReducedParts parse_reduced(const ColoredPath& path) {
  const int i = -path.start.x;
  require(i >= 1 && path.start.y == i, "reduced path: wrong start");
  require(path.steps.size() >= static_cast<size_t>(i),
          "reduced path: fewer steps than the start demands");
  int y = i;
  for (size_t k = 0; k < static_cast<size_t>(i); ++k) {
    const auto& s = path.steps[k];
    require(s.color == StepColor::uncolored, "reduced path: colored left step");
    require(is(s, 1, 1) || is(s, 1, 0), "reduced path: illegal left step");
    y += s.dy;
  }
  const int h = y;
  size_t k = static_cast<size_t>(i);
  while (y > 1) {
    require(k < path.steps.size(), "reduced path: stops above y=1");
    const auto& s = path.steps[k];
    require(s.color == StepColor::uncolored && is(s, 1, -1),
            "reduced path: illegal diagonal step");
    y += s.dy;
    ++k;
  }
  const size_t r3 = k;
  bool last_blue = false;
  for (; k < path.steps.size(); ++k) {
    const auto& s = path.steps[k];
    if (is(s, -1, 0)) {
      require(s.color == StepColor::blue || s.color == StepColor::red,
              "reduced path: horizontal neither blue nor red");
      if (s.color == StepColor::red)
        require(!last_blue, "reduced path: red horizontal after a blue one");
      last_blue = s.color == StepColor::blue;
    } else if (is(s, 0, -1)) {
      require(s.color == StepColor::uncolored,
              "reduced path: colored vertical step");
      last_blue = false;
    } else {
      require(false, "reduced path: illegal staircase step");
    }
  }
  const Point e = path.end();
  require(e.x >= 0 && e.y == 1 - e.x, "reduced path: wrong end");
  return ReducedParts{i, h, static_cast<size_t>(i), r3};
}

// All points of a path with x <= 0; the left region plus, for a path
// ending on the axis, its end point.
std::set<Point> left_points(const ColoredPath& path) {
  std::set<Point> pts;
  for (const auto& pt : path.points())
    if (pt.x <= 0) pts.insert(pt);
  return pts;
}

int perm_sign(const std::vector<int>& sigma) {
  int inv = 0;
  for (size_t a = 0; a < sigma.size(); ++a)
    for (size_t b = a + 1; b < sigma.size(); ++b)
      if (sigma[a] > sigma[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// One row of the staircase of a path: entered at x_enter, left at
// x_exit, red steps before blue ones, their boundary at center.
struct StairRow {
  int y = 0;
  int x_enter = 0;
  int x_exit = 0;
  int center = 0;
};

std::vector<StairRow> stair_rows(const ColoredPath& path) {
  const auto parts = parse_reduced(path);
  std::vector<StairRow> rows;
  int y = 1;
  int x = parts.h - 1;
  StairRow cur{y, x, x, x};
  int reds = 0;
  for (size_t k = parts.r3_begin; k < path.steps.size(); ++k) {
    const auto& s = path.steps[k];
    if (is(s, -1, 0)) {
      x -= 1;
      cur.x_exit = x;
      if (s.color == StepColor::red) ++reds;
    } else {
      cur.center = cur.x_enter - reds;
      rows.push_back(cur);
      y -= 1;
      cur = StairRow{y, x, x, x};
      reds = 0;
    }
  }
  cur.center = cur.x_enter - reds;
  rows.push_back(cur);
  return rows;
}

// A row crossed without horizontal steps is a degenerate one point run;
// that point counts as both the run and its center.
bool stair_contains(const std::vector<StairRow>& rows, Point v) {
  for (const auto& r : rows)
    if (r.y == v.y && r.x_exit <= v.x && v.x <= r.x_enter) return true;
  return false;
}

bool stair_center_at(const std::vector<StairRow>& rows, Point v) {
  for (const auto& r : rows)
    if (r.y == v.y && r.center == v.x) return true;
  return false;
}

std::set<Point> shared_points(const ColoredPath& a, const ColoredPath& b) {
  std::set<Point> pa, out;
  for (const auto& pt : a.points()) pa.insert(pt);
  for (const auto& pt : b.points())
    if (pa.count(pt)) out.insert(pt);
  return out;
}

// A pair intersects strongly unless every shared point lies inside a
// horizontal run of both paths and none of them is a run boundary.
bool strongly_intersect(const ColoredPath& a, const ColoredPath& b) {
  const auto shared = shared_points(a, b);
  if (shared.empty()) return false;
  const auto ra = stair_rows(a);
  const auto rb = stair_rows(b);
  for (const auto& v : shared) {
    if (!stair_contains(ra, v) || !stair_contains(rb, v)) return true;
    if (stair_center_at(ra, v) || stair_center_at(rb, v)) return true;
  }
  return false;
}

size_t point_index(const ColoredPath& path, Point v) {
  const auto pts = path.points();
  for (size_t k = 0; k < pts.size(); ++k)
    if (pts[k] == v) return k;
  throw std::logic_error("crossing point not on the path");
}

ColoredPath cross_paths(const ColoredPath& a, const ColoredPath& b, Point v) {
  ColoredPath out;
  out.start = a.start;
  const size_t ka = point_index(a, v);
  const size_t kb = point_index(b, v);
  out.steps.assign(a.steps.begin(), a.steps.begin() + static_cast<long>(ka));
  out.steps.insert(out.steps.end(), b.steps.begin() + static_cast<long>(kb),
                   b.steps.end());
  return out;
}

}  // namespace

void validate_reduced_family(const ReducedFamily& family) {
  const int n = family.n;
  require(n >= 1, "reduced family: order must be positive");
  require(family.paths.size() == static_cast<size_t>(n) &&
              family.sigma.size() == static_cast<size_t>(n),
          "reduced family: wrong number of paths");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int e : family.sigma) {
    require(e >= 0 && e < n && !seen[static_cast<size_t>(e)],
            "reduced family: connection not a permutation");
    seen[static_cast<size_t>(e)] = true;
  }
  std::set<Point> used;
  for (int a = 0; a < n; ++a) {
    const auto& path = family.paths[static_cast<size_t>(a)];
    require(path.start == Point{-(a + 1), a + 1},
            "reduced family: wrong start");
    parse_reduced(path);
    const int e = family.sigma[static_cast<size_t>(a)];
    require(path.end() == Point{e, 1 - e}, "reduced family: wrong end");
    for (const auto& pt : left_points(path)) {
      require(!used.count(pt), "reduced family: shared point left of the axis");
      used.insert(pt);
    }
  }
}

void for_each_reduced_family(
    int n, const std::function<void(const ReducedFamily&)>& fn) {
  if (n < 1) return;
  std::vector<int> sigma(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) sigma[static_cast<size_t>(a)] = a;
  ReducedFamily family;
  family.n = n;
  family.paths.resize(static_cast<size_t>(n));
  std::set<Point> used;
  std::function<void(int)> build = [&](int a) {
    if (a == n) {
      fn(family);
      return;
    }
    const int i = a + 1;
    const int e = family.sigma[static_cast<size_t>(a)];
    for (unsigned mask = 0; mask < (1u << i); ++mask) {
      ColoredPath cur{Point{-i, i}, {}};
      int h = i;
      for (int b = 0; b < i; ++b) {
        if (mask & (1u << b)) {
          cur.steps.push_back(step(1, 1));
          ++h;
        } else {
          cur.steps.push_back(step(1, 0));
        }
      }
      if (h < e + 1) continue;
      std::set<Point> mine;
      {
        Point pt = cur.start;
        mine.insert(pt);
        for (const auto& s : cur.steps) {
          pt.x += s.dx;
          pt.y += s.dy;
          mine.insert(pt);
        }
        if (e == 0) mine.insert(Point{0, 1});
      }
      bool clash = false;
      for (const auto& pt : mine)
        if (used.count(pt)) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (const auto& pt : mine) used.insert(pt);
      for (int d = 0; d < h - 1; ++d) cur.steps.push_back(step(1, -1));
      const size_t base = cur.steps.size();
      std::function<void(int, int, bool)> stair = [&](int nh, int nv,
                                                      bool last_blue) {
        if (nh == 0 && nv == 0) {
          family.paths[static_cast<size_t>(a)] = cur;
          build(a + 1);
          return;
        }
        if (nh > 0) {
          if (!last_blue) {
            cur.steps.push_back(step(-1, 0, StepColor::red));
            stair(nh - 1, nv, false);
            cur.steps.pop_back();
          }
          cur.steps.push_back(step(-1, 0, StepColor::blue));
          stair(nh - 1, nv, true);
          cur.steps.pop_back();
        }
        if (nv > 0) {
          cur.steps.push_back(step(0, -1));
          stair(nh, nv - 1, false);
          cur.steps.pop_back();
        }
      };
      stair(h - 1 - e, e, false);
      cur.steps.resize(base);
      for (const auto& pt : mine) used.erase(pt);
    }
  };
  std::sort(sigma.begin(), sigma.end());
  do {
    family.sigma = sigma;
    build(0);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

LaurentPoly reduced_family_weight(const ReducedFamily& family, RingPtr ring) {
  validate_reduced_family(family);
  require(ring != nullptr &&
              ring->size() >= static_cast<size_t>(family.n + 3),
          "reduced family weight: ring too small");
  Expo e(ring->size(), 0);
  for (const auto& path : family.paths) {
    const auto parts = parse_reduced(path);
    for (size_t k = 0; k < parts.r2_begin; ++k)
      if (is(path.steps[k], 1, 0)) e[2] += 1;
    int y = 1;
    for (size_t k = parts.r3_begin; k < path.steps.size(); ++k) {
      const auto& s = path.steps[k];
      if (is(s, -1, 0)) {
        const int d = 2 - y;
        require(static_cast<size_t>(d + 2) < ring->size(),
                "reduced family weight: ring too small for X_d");
        if (s.color == StepColor::blue) {
          e[0] += 1;
          e[static_cast<size_t>(d + 2)] += 1;
        } else {
          e[1] += 1;
          e[static_cast<size_t>(d + 2)] -= 1;
        }
      }
      y += s.dy;
    }
  }
  return LaurentPoly::monomial(ring, Int(perm_sign(family.sigma)), e);
}

bool is_touching_fixed(const ReducedFamily& family) {
  validate_reduced_family(family);
  for (size_t a = 0; a < family.paths.size(); ++a)
    for (size_t b = a + 1; b < family.paths.size(); ++b)
      if (strongly_intersect(family.paths[a], family.paths[b])) return false;
  return true;
}

ReducedFamily touching_involution(const ReducedFamily& family) {
  validate_reduced_family(family);
  const size_t n = family.paths.size();
  size_t a1 = n, a2 = n;
  for (size_t a = 0; a < n && a1 == n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (strongly_intersect(family.paths[a], family.paths[b])) {
        a1 = a;
        break;
      }
  if (a1 == n) return family;
  for (size_t b = a1 + 1; b < n; ++b)
    if (strongly_intersect(family.paths[a1], family.paths[b])) {
      a2 = b;
      break;
    }
  check(a2 < n, "touching involution: partner disappeared");
  const ColoredPath& pa = family.paths[a1];
  const ColoredPath& pb = family.paths[a2];

  // Shared vertical steps, identified by their lower vertex.
  std::set<std::pair<Point, Point>> edges_b;
  {
    const auto pts = pb.points();
    for (size_t k = 0; k + 1 < pts.size(); ++k)
      edges_b.insert({pts[k], pts[k + 1]});
  }
  Point site{0, 0};
  bool have_site = false;
  {
    const auto pts = pa.points();
    for (size_t k = 0; k + 1 < pts.size(); ++k)
      if (pa.steps[k].dy == -1 && pa.steps[k].dx == 0 &&
          edges_b.count({pts[k], pts[k + 1]})) {
        site = pts[k + 1];
        have_site = true;
      }
  }
  if (!have_site) {
    // No shared vertical step: cross at the rightmost run boundary that
    // the paths share.
    const auto shared = shared_points(pa, pb);
    const auto ra = stair_rows(pa);
    const auto rb = stair_rows(pb);
    for (const auto& v : shared) {
      if (!stair_center_at(ra, v) && !stair_center_at(rb, v)) continue;
      if (!have_site || v.x > site.x || (v.x == site.x && v.y > site.y)) {
        site = v;
        have_site = true;
      }
    }
    check(have_site, "touching involution: no crossing site");
  }
  ReducedFamily out = family;
  out.paths[a1] = cross_paths(pa, pb, site);
  out.paths[a2] = cross_paths(pb, pa, site);
  std::swap(out.sigma[a1], out.sigma[a2]);
  validate_reduced_family(out);
  return out;
}

PPPair touching_to_pair(const ReducedFamily& family) {
  validate_reduced_family(family);
  require(is_touching_fixed(family), "pair reading: family not fixed");
  const int n = family.n;
  for (int a = 0; a < n; ++a)
    require(family.sigma[static_cast<size_t>(a)] == a,
            "pair reading: connection not the identity");
  PPRows p(static_cast<size_t>(n)), q(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    const auto& path = family.paths[static_cast<size_t>(a)];
    const auto parts = parse_reduced(path);
    std::vector<int> prow;
    int y = 1;
    for (size_t k = parts.r3_begin; k < path.steps.size(); ++k) {
      const auto& s = path.steps[k];
      if (is(s, -1, 0)) {
        const int d = 2 - y;
        prow.push_back(s.color == StepColor::red ? 2 * d - 1 : 2 * d);
      }
      y += s.dy;
    }
    std::reverse(prow.begin(), prow.end());
    std::vector<int> qrow;
    Point pt = path.start;
    for (size_t k = 0; k < parts.r2_begin; ++k) {
      if (is(path.steps[k], 1, 1)) qrow.push_back(pt.y - pt.x - 1);
      pt.x += path.steps[k].dx;
      pt.y += path.steps[k].dy;
    }
    for (size_t c = 0; c < qrow.size(); ++c)
      qrow[c] -= a + static_cast<int>(c);
    p[static_cast<size_t>(n - 1 - a)] = std::move(prow);
    q[static_cast<size_t>(n - 1 - a)] = std::move(qrow);
  }
  validate_cspp(p, n);
  validate_rspp(q, n);
  for (size_t k = 0; k < p.size(); ++k)
    require(p[k].size() == q[k].size(), "pair reading: shapes differ");
  return PPPair{std::move(p), std::move(q)};
}

LaurentPoly enum_gf_touching(int n, RingPtr ring) {
  require(n >= 1, "touching sum: order must be positive");
  LaurentPoly total = LaurentPoly::zero(ring);
  for_each_reduced_family(n, [&](const ReducedFamily& family) {
    total += reduced_family_weight(family, ring);
  });
  Expo e(ring->size(), 0);
  for (int d = 1; d <= n; ++d) e[static_cast<size_t>(d + 2)] = n - 1;
  return total * LaurentPoly::monomial(ring, 1, e);
}

namespace {

// Phase boundary of a second-model path: the number of steps above the
// line y=1 and the x-coordinate of the last point on it.
struct LookbackParts {
  size_t m = 0;
  int t = 0;
};

LookbackParts parse_lookback(const ColoredPath& path, int i, int j) {
  require(i >= 1 && j >= 1, "second-model path: parameters need i, j >= 1");
  require(path.start == Point{i, i}, "second-model path: wrong start");
  int y = i;
  int x = i;
  size_t k = 0;
  while (k < path.steps.size() &&
         (is(path.steps[k], 1, 0) || is(path.steps[k], 0, -1))) {
    const auto& s = path.steps[k];
    if (is(s, 1, 0))
      require(s.color == StepColor::red || s.color == StepColor::blue ||
                  s.color == StepColor::green,
              "second-model path: uncolored horizontal above y=1");
    else
      require(s.color == StepColor::uncolored,
              "second-model path: colored vertical");
    x += s.dx;
    y += s.dy;
    require(y >= 1, "second-model path: vertical crosses y=1");
    ++k;
  }
  require(y == 1, "second-model path: lower section starts off the line y=1");
  const LookbackParts parts{k, x};
  for (; k < path.steps.size(); ++k) {
    const auto& s = path.steps[k];
    require(s.color == StepColor::uncolored,
            "second-model path: colored lower step");
    require(is(s, -1, -1) || is(s, -2, -2) || is(s, -2, -1),
            "second-model path: illegal lower step");
  }
  require(path.end() == Point{2, 2 - j}, "second-model path: wrong end");
  return parts;
}

}  // namespace

void validate_lookback_path(const ColoredPath& path, int i, int j) {
  parse_lookback(path, i, j);
}

void for_each_lookback_path(int i, int j,
                            const std::function<void(const ColoredPath&)>& fn) {
  if (i < 1 || j < 1) return;
  for (int t = std::max(i, j + 1); t <= 2 * j; ++t) {
    const int c = t - j - 1;
    ColoredPath cur{Point{i, i}, {}};
    std::function<void(int, int, int)> lower = [&](int na, int nb, int nc) {
      if (na == 0 && nb == 0 && nc == 0) {
        fn(cur);
        return;
      }
      if (na > 0) {
        cur.steps.push_back(step(-1, -1));
        lower(na - 1, nb, nc);
        cur.steps.pop_back();
      }
      if (nb > 0) {
        cur.steps.push_back(step(-2, -2));
        lower(na, nb - 1, nc);
        cur.steps.pop_back();
      }
      if (nc > 0) {
        cur.steps.push_back(step(-2, -1));
        lower(na, nb, nc - 1);
        cur.steps.pop_back();
      }
    };
    std::function<void(int, int)> upper = [&](int nh, int nv) {
      if (nh == 0 && nv == 0) {
        for (int b = 0; 2 * b <= 2 * j - t; ++b)
          lower(2 * j - t - 2 * b, b, c);
        return;
      }
      if (nh > 0) {
        for (StepColor col :
             {StepColor::red, StepColor::blue, StepColor::green}) {
          cur.steps.push_back(step(1, 0, col));
          upper(nh - 1, nv);
          cur.steps.pop_back();
        }
      }
      if (nv > 0) {
        cur.steps.push_back(step(0, -1));
        upper(nh, nv - 1);
        cur.steps.pop_back();
      }
    };
    upper(t - i, i - 1);
  }
}

LaurentPoly lookback_path_weight(const ColoredPath& path, RingPtr ring) {
  require(ring != nullptr, "second-model weight: null ring");
  Expo e(ring->size(), 0);
  bool neg = false;
  int y = path.start.y;
  for (const auto& s : path.steps) {
    if (is(s, 1, 0)) {
      if (s.color == StepColor::green) {
        e[2] += 1;
      } else {
        const int d = y;
        require(d >= 1 && static_cast<size_t>(d + 2) < ring->size(),
                "second-model weight: ring too small for X_d");
        if (s.color == StepColor::red) {
          e[0] += 1;
          e[static_cast<size_t>(d + 2)] += 1;
        } else {
          e[1] += 1;
          e[static_cast<size_t>(d + 2)] -= 1;
        }
      }
    } else if (is(s, -1, -1)) {
      neg = !neg;
      e[2] += 1;
    } else if (is(s, -2, -2)) {
      neg = !neg;
      e[0] += 1;
      e[1] += 1;
    }
    y += s.dy;
  }
  return LaurentPoly::monomial(ring, neg ? Int(-1) : Int(1), e);
}

bool is_lookback_fixed(const ColoredPath& path, int i, int j) {
  const auto parts = parse_lookback(path, i, j);
  for (size_t k = parts.m; k < path.steps.size(); ++k)
    if (!is(path.steps[k], -2, -1)) return false;
  const size_t r = path.steps.size() - parts.m;
  for (size_t s = 1; s <= r; ++s) {
    const auto& st = path.steps[parts.m - s];
    if (is(st, 1, 0) && st.color == StepColor::green) return false;
    if (s + 1 <= r && is(st, 1, 0) && st.color == StepColor::red) {
      const auto& prev = path.steps[parts.m - s - 1];
      if (is(prev, 1, 0) && prev.color == StepColor::blue) return false;
    }
  }
  return true;
}

ColoredPath lookback_involution(const ColoredPath& path, int i, int j) {
  const auto parts = parse_lookback(path, i, j);
  const size_t m = parts.m;
  ColoredPath cur = path;
  auto at = [&](size_t pos) {
    return cur.steps.begin() + static_cast<long>(pos);
  };
  size_t r = 0;
  while (m + r < cur.steps.size() && is(cur.steps[m + r], -2, -1)) ++r;
  for (size_t s = 1; s <= r; ++s) {
    const auto& st = cur.steps[m - s];
    if (is(st, 1, 0) && st.color == StepColor::green) {
      cur.steps[m + s - 1] = step(-1, -1);
      cur.steps.erase(at(m - s));
      validate_lookback_path(cur, i, j);
      return cur;
    }
    if (s + 1 <= r && is(st, 1, 0) && st.color == StepColor::red) {
      const auto& prev = cur.steps[m - s - 1];
      if (is(prev, 1, 0) && prev.color == StepColor::blue) {
        cur.steps.erase(at(m + s));
        cur.steps[m + s - 1] = step(-2, -2);
        cur.steps.erase(at(m - s - 1), at(m - s + 1));
        validate_lookback_path(cur, i, j);
        return cur;
      }
    }
  }
  if (m + r >= cur.steps.size()) return cur;
  const ColoredStep term = cur.steps[m + r];
  if (is(term, -1, -1)) {
    cur.steps[m + r] = step(-2, -1);
    cur.steps.insert(at(m - r), step(1, 0, StepColor::green));
  } else {
    check(is(term, -2, -2), "second-model involution: illegal run end");
    cur.steps[m + r] = step(-2, -1);
    cur.steps.insert(at(m + r + 1), step(-2, -1));
    cur.steps.insert(at(m - r), step(1, 0, StepColor::blue));
    cur.steps.insert(at(m - r + 1), step(1, 0, StepColor::red));
  }
  validate_lookback_path(cur, i, j);
  return cur;
}

LaurentPoly lookback_fixed_gf(int i, int j, RingPtr ring) {
  require(i >= 1 && j >= 1, "second-model class gf: parameters need i, j >= 1");
  require(ring != nullptr && ring->size() >= static_cast<size_t>(i + 3),
          "second-model class gf: ring too small");
  std::vector<LaurentPoly> args;
  for (int d = 1; d <= i; ++d) {
    Expo ue(ring->size(), 0), we(ring->size(), 0), ve(ring->size(), 0);
    ue[0] = 1;
    ue[static_cast<size_t>(d + 2)] = 1;
    we[2] = 1;
    ve[1] = 1;
    ve[static_cast<size_t>(d + 2)] = -1;
    args.push_back(LaurentPoly::monomial(ring, 1, ue) +
                   LaurentPoly::monomial(ring, 1, we) +
                   LaurentPoly::monomial(ring, 1, ve));
  }
  LaurentPoly total = LaurentPoly::zero(ring);
  for (int t = 1; t <= 2 * j; ++t) {
    const LaurentPoly c = c_tj(t, j, ring);
    if (c.term_count() == 0) continue;
    total += c * hom_sym(t - i, args);
  }
  return total;
}

}  // namespace vsasm
