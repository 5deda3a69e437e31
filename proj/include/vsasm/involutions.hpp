/* Sign-reversing involutions and rewriting systems on colored lattice
   paths: the expansion of plain paths into two-colored ones and its
   inverse, the reflection involution behind the binomial evaluation of
   the matrix entries, the single-path reduction that removes double-down
   steps, the crossing involution on families reduced by it, and the
   analogous reduction for the second path model. */
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "vsasm/laurent.hpp"
#include "vsasm/pairs.hpp"
#include "vsasm/paths.hpp"

namespace vsasm {

enum class StepColor { uncolored, green, blue, red };

struct ColoredStep {
  int dx = 0;
  int dy = 0;
  StepColor color = StepColor::uncolored;
  friend bool operator==(const ColoredStep&, const ColoredStep&) = default;
};

// A lattice path as a start point and a step sequence.
struct ColoredPath {
  Point start{0, 0};
  std::vector<ColoredStep> steps;
  Point end() const;
  std::vector<Point> points() const;
  friend bool operator==(const ColoredPath&, const ColoredPath&) = default;
};

// Plain paths run from (0,p) to (2j-1,-j+1) with uncolored steps (1,-1)
// and (0,-1).
void validate_plain_path(const ColoredPath& path, int p, int j);
void for_each_plain_path(int p, int j,
                         const std::function<void(const ColoredPath&)>& fn);

// Colored paths run from (0,p) to (j-1,-j+2): green (1,-1) and (0,-2)
// steps down to the line y=1, then blue or red (-1,0) steps and green
// (0,-1) steps.
void validate_colored_path(const ColoredPath& path, int p, int j);
void for_each_colored_path(int p, int j,
                           const std::function<void(const ColoredPath&)>& fn);

// Sign of a colored path, -1 per (0,-2) step.
int colored_sign(const ColoredPath& path);

// Rewrites a plain path into signed colored copies, acting on the first
// two not yet colored steps until a single one is left and deleted.  The
// signs of the copies always add up to 1, and over all plain paths every
// colored path arises exactly once, carrying its own sign.
std::vector<std::pair<ColoredPath, int>> expand_plain_path(
    const ColoredPath& path, int p, int j);

// Inverse rewriting: inserts an uncolored (1,-1) step after the first
// point on the line y=1 and then uncolors the path from the ends of its
// two colored sections inward.  The input is always among the signed
// copies of the result's expansion.
ColoredPath colored_to_plain(const ColoredPath& path, int p, int j);

// Reflected paths run from (2j-1,-j+1) up to the y-axis with steps
// (-1,1) and (0,1), then from the last axis point (0,p) down to (i,i)
// with steps (1,-1) and (1,0).  Weight (-1)^{number of (1,0) steps}.
void validate_reflected_path(const ColoredPath& path, int i, int j);
void for_each_reflected_path(int i, int j,
                             const std::function<void(const ColoredPath&)>& fn);
int reflected_sign(const ColoredPath& path);

// Fixed are the paths whose rising and falling halves share the whole
// diagonal run from (0,2i) to (i,i); they are counted by
// binom(i+j-1, 2j-i-1).
bool is_reflected_fixed(const ColoredPath& path, int i, int j);

// Moves the shared diagonal run next to the axis one unit down or up,
// trading the vertical step below it against a horizontal step of the
// falling half.  An involution that flips reflected_sign off the fixed
// paths and leaves fixed paths unchanged.
ColoredPath reflected_involution(const ColoredPath& path, int i, int j);

// Laurent weight of a colored path: -uv per (0,-2) step, u X_d per blue
// and v X_d^{-1} per red horizontal at distance d below the line y=2.
// The ring must provide u, v, w, X_1..X_j.
LaurentPoly colored_path_weight(const ColoredPath& path, RingPtr ring);

// Fixed are the colored paths with no (0,-2) step and no blue step
// followed directly by a red one.
bool is_signless_fixed(const ColoredPath& path);

// Trades a (0,-2) step against a blue-red pair of horizontals at equal
// height, matching step positions before and after the first point on
// the line y=1.  An involution that negates colored_path_weight off the
// fixed paths and leaves fixed paths unchanged.
ColoredPath signless_involution(const ColoredPath& path, int p, int j);

// Generating function of the fixed class, as the alternating sum of
// complete homogeneous polynomials in u X_d + v X_d^{-1} against the
// count of straight descents.
LaurentPoly signless_class_gf(int p, int j, RingPtr ring);

// A family of n paths for the first model after the single-path
// reduction: path a runs from (-a-1,a+1) with steps (1,1) and (1,0) up
// to the y-axis, straight (1,-1) diagonals down to the line y=1, and
// blue or red (-1,0) plus (0,-1) steps to (sigma[a], 1-sigma[a]).  Paths
// share no point with x <= 0; every maximal horizontal run lists its red
// steps before its blue ones.
struct ReducedFamily {
  int n = 0;
  std::vector<ColoredPath> paths;
  std::vector<int> sigma;
  friend bool operator==(const ReducedFamily&, const ReducedFamily&) = default;
};

void validate_reduced_family(const ReducedFamily& family);
void for_each_reduced_family(
    int n, const std::function<void(const ReducedFamily&)>& fn);

// sgn(sigma) times w per (1,0) step left of the y-axis, u X_d per blue
// and v X_d^{-1} per red horizontal at distance d below the line y=2.
LaurentPoly reduced_family_weight(const ReducedFamily& family, RingPtr ring);

// Fixed are the families in which no two paths intersect strongly: all
// shared points lie inside maximal horizontal runs of both paths and
// none of them is the red-blue boundary of either run.
bool is_touching_fixed(const ReducedFamily& family);

// Crosses a canonical strongly intersecting pair, either after the last
// shared vertical step or at the rightmost run boundary inside the last
// shared run component.  An involution that flips the family sign and
// leaves fixed families unchanged.
ReducedFamily touching_involution(const ReducedFamily& family);

// Reads a fixed family with identity connection as a pair of plane
// partitions: horizontals at distance d give entries 2d-1 (red) and 2d
// (blue) of P, diagonal steps left of the axis give Q after the usual
// row and column normalization.
PPPair touching_to_pair(const ReducedFamily& family);

// Signed sum of reduced_family_weight over all families, times the
// global prefactor prod X_i^{n-1}; equals enum_gf_pairs(n).
LaurentPoly enum_gf_touching(int n, RingPtr ring);

// Paths for the second model run from (i,i) to (2,2-j): horizontal steps
// (1,0) colored red (u X_d), blue (v X_d^{-1}) or green (w) at distance
// d above the x-axis plus vertical (0,-1) steps while y >= 1, then steps
// (-1,-1) of weight -w, (-2,-2) of weight -uv and (-2,-1) of weight 1.
void validate_lookback_path(const ColoredPath& path, int i, int j);
void for_each_lookback_path(int i, int j,
                            const std::function<void(const ColoredPath&)>& fn);
LaurentPoly lookback_path_weight(const ColoredPath& path, RingPtr ring);

// Fixed are the paths with only (-2,-1) steps below the line y=1 and,
// among the steps right of the line y=x-j, no green horizontal and no
// blue horizontal followed directly by a red one.
bool is_lookback_fixed(const ColoredPath& path, int i, int j);

// Trades a green horizontal against a (-1,-1) step and a blue-red pair
// against a (-2,-2) step, matching step positions before and after the
// last point on the line y=1.  An involution that negates
// lookback_path_weight off the fixed paths and leaves fixed paths
// unchanged.
ColoredPath lookback_involution(const ColoredPath& path, int i, int j);

// Generating function of the fixed class: the connection coefficients
// c_{t,j} against complete homogeneous polynomials in
// u X_d + w + v X_d^{-1}.
LaurentPoly lookback_fixed_gf(int i, int j, RingPtr ring);

}  // namespace vsasm
