/* Lattice path models for the staircase generating function: two signed
   families, the signless two-start family, the single-start variant behind
   the plane-partition pairs, their determinant forms, and the unrefined
   count of the matching holey-hexagon tilings. */
#pragma once

#include <functional>
#include <vector>

#include "vsasm/laurent.hpp"

namespace vsasm {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

using PathPoints = std::vector<Point>;  // consecutive lattice points

// I1: starts (-i,i), ends (j-1,2-j); signed via sgn sigma.
//   x <= 0:        steps (1,1), (1,0); (1,0) carries w.
//   x >= 0,y >= 1: steps (1,-1), (0,-2); (0,-2) carries -uv.
//   x >= 0,y <= 1: steps (-1,0), (0,-1); (-1,0) at height y carries
//                  u X_d + v X_d^-1 with d = 2-y.
// I2: starts (i,i), ends (2,2-j); signed via sgn sigma.
//   y >= 1: steps (1,0), (0,-1); (1,0) at height d carries u X_d + w + v X_d^-1.
//   y <= 1: steps (-1,-1), (-2,-2), (-2,-1) with weights -w, -uv, 1.
// I3: starts (n-i+1,2n) or (n+i-1,2n), ends (j,1-j); the right start choice
//   carries (-uv)^(i-1), no permutation sign.
//   y >= 1: steps (1,0), (0,-1); (1,0) at height 2d-1 carries u X_d,
//           at height 2d carries v X_d^-1.
//   y <= 1: steps (-1,-1), (0,-1); (0,-1) carries w.
// JT4: starts (i,2i), ends (j,1-j); step scheme of I3, no start choice.
// Every family weight includes the factor prod_i X_i^(n-1).
enum class Interp { I1, I2, I3, JT4 };

struct PathFamily {
  Interp interp = Interp::I1;
  int n = 0;
  std::vector<PathPoints> paths;  // paths[a] leaves start a+1
  std::vector<int> sigma;         // sigma[a] = 0-based end index of paths[a]
  std::vector<bool> right_start;  // I3 only; empty otherwise
  LaurentPoly weight;
};

// All families of the model, in a deterministic order.
void for_each_family(Interp interp, int n, RingPtr ring,
                     const std::function<void(const PathFamily&)>& fn);

// Weight of a given family in uvwx(n), including sign, start-choice factors
// and prod X_i^(n-1). Throws std::invalid_argument on malformed paths,
// wrong endpoints, or violated disjointness.
LaurentPoly family_weight(Interp interp, int n,
                          const std::vector<PathPoints>& paths, RingPtr ring);

// Product of the step weights of one path (no sign, no global factors).
// Throws std::invalid_argument on steps illegal for the model.
LaurentPoly path_weight(Interp interp, const PathPoints& pts, RingPtr ring);

// Signed sums over all families; each equals gf_brute(0,2,..,2n-2).
LaurentPoly enum_gf_interp1(int n, RingPtr ring);
LaurentPoly enum_gf_interp2(int n, RingPtr ring);
LaurentPoly enum_gf_interp3(int n, RingPtr ring);
LaurentPoly enum_gf_jt4(int n, RingPtr ring);

// Closed-form matrix entry of the first model and its single-path oracle:
// both give the generating function of paths from (-i,i) to (j-1,2-j).
LaurentPoly entry_interp1(int i, int j, RingPtr ring);
LaurentPoly single_gf_interp1(int i, int j, RingPtr ring);

// prod X_i^(n-1) * det(entry_interp1).
LaurentPoly det_gf_interp1(int n, RingPtr ring);

// Polynomial in u, v, w: sum_r (-uv)^r (-w)^(2j-2r-t) multinomial(j-r-1;
// r, 2j-2r-t, t-j-1); equivalently the signed count of paths from (0,0)
// to (t-2,j-1) with steps (1,1) [-w], (2,2) [-uv], (2,1) [1].
LaurentPoly c_tj(int t, int j, RingPtr ring);
LaurentPoly c_tj_paths(int t, int j, RingPtr ring);

// prod X_i^(n-1) * det(sum_t c_tj(t,j) h_(t-i)(u X_1+w+v X_1^-1, ..i args..)).
LaurentPoly det_gf_interp2(int n, RingPtr ring);

// (-1)^C(n,2)/2 * prod X_i^(n-1) * det over h in the 2n arguments
// u X_1,..,u X_n, v X_1^-1,..,v X_n^-1; the halving checks every
// coefficient for evenness and throws divisibility_error otherwise.
LaurentPoly det_gf_interp3(int n, RingPtr ring);

// prod X_i^(n-1) * det(sum_k C(j,k-j) w^(2j-k) h_(k-i)(u X_1, v X_1^-1,
// ..., u X_i, v X_i^-1)).
LaurentPoly det_gf_jt4(int n, RingPtr ring);

// det C(i+j-1, 2j-i-1): the number of cyclically and vertically symmetric
// lozenge tilings of a hexagon with central triangular hole of size 2,
// equivalently the number of (2n+1) x (2n+1) vertically symmetric
// alternating sign matrices.
Int unrefined_det(int n);

// The same count by direct enumeration of vertex-disjoint path families
// from (2i-1,i-1) to (j-1,2j-2) with steps (-1,0), (0,1).
Int count_tilings(int n);

}  // namespace vsasm
