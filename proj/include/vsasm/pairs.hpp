/* Pairs of plane partitions of a common staircase shape: a column-strict
   one and a row-strict one, their monomial weights, the bijection with the
   single-start path families, and the chain from the row-strict partition
   through semistandard tableaux and Gelfand-Tsetlin patterns to Magog
   triangles. */
#pragma once

#include <functional>
#include <vector>

#include "vsasm/laurent.hpp"
#include "vsasm/paths.hpp"

namespace vsasm {

// Rows top-to-bottom, exactly n of them, rows of length zero allowed at
// the tail. Row i counted from the bottom is rows[n-i], 0-based.
using PPRows = std::vector<std::vector<int>>;

struct PPPair {
  PPRows p;  // column-strict: rows weakly decrease, columns strictly
  PPRows q;  // row-strict: rows strictly decrease, columns weakly
  friend bool operator==(const PPPair&, const PPPair&) = default;
};

// Throw std::invalid_argument unless the filling is a valid plane
// partition of the given kind for order n: common staircase-bounded
// shape, positive entries, and the bottom-indexed entry bounds (2i for
// the column-strict kind, i for the row-strict kind in row i from the
// bottom).
void validate_cspp(const PPRows& p, int n);
void validate_rspp(const PPRows& q, int n);

// Weight of a pair of common shape in uvwx(n): w to the power
// C(n+1,2) minus the number of entries, times prod X_i^(n-1), times
// u X_i per entry 2i-1 of the column-strict partition and v X_i^-1 per
// entry 2i. Validates both fillings and their shapes.
LaurentPoly pair_weight(const PPPair& pair, int n, RingPtr ring);

void for_each_pair(int n, const std::function<void(const PPPair&)>& fn);

// Sum of pair_weight over all pairs for order n.
LaurentPoly enum_gf_pairs(int n, RingPtr ring);

// Bijection with the single-start path model: the column-strict rows
// record horizontal step heights, the row-strict rows record diagonal
// step positions relative to the line y = x, normalized row- and
// column-wise. Both directions validate their input.
PPPair paths3_to_pair(const PathFamily& f);
PathFamily pair_to_paths3(const PPPair& pair, int n, RingPtr ring);

// Triangular array with n+1 rows, row k holding k entries. Entry j of
// any row (1-based) lies in 1..j and consecutive rows interlace.
using MagogTriangle = std::vector<std::vector<int>>;

void validate_magog(const MagogTriangle& m, int n);

// Chain stages. The tableau has entries in 1..n with entry i confined to
// the first i columns; the pattern rows list, for each i, the shape of
// entries at most i padded with zeros and reversed.
PPRows rspp_to_ssyt(const PPRows& q, int n);
PPRows ssyt_to_gt(const PPRows& t, int n);
MagogTriangle gt_to_magog(const PPRows& g, int n);

MagogTriangle rspp_to_magog(const PPRows& q, int n);
PPRows magog_to_rspp(const MagogTriangle& m, int n);

}  // namespace vsasm
