/* Monotone triangles, arrowed monotone triangles, their generating
   function over u, v, w, X_1..X_n, and the algebraic routes to it:
   brute enumeration, shift-operator expansion, antisymmetrizer quotient,
   and the bialternant determinant for the staircase bottom row. */
#pragma once

#include <functional>

#include "vsasm/laurent.hpp"

namespace vsasm {

using Row = std::vector<int>;

// rows[0] is the single top entry; rows[i] has i+1 entries.
struct MonotoneTriangle {
  std::vector<Row> rows;
  int order() const { return static_cast<int>(rows.size()); }
  const Row& bottom() const { return rows.back(); }
  bool valid() const;
};

// NW = nw-arrow, NE = ne-arrow, Both = the combined decoration.
enum class Arrow : unsigned char { NW, NE, Both };

struct ArrowedMT {
  MonotoneTriangle base;
  std::vector<std::vector<Arrow>> dec;  // same shape as base.rows
  bool valid() const;
};

// Decoration freedom of entry (i,j), 0-based. An entry equal to its
// nw-neighbor must carry the ne-arrow and vice versa; equality with both
// is impossible in a monotone triangle.
enum class EntryStatus : unsigned char { Free, ForcedNE, ForcedNW };
EntryStatus entry_status(const MonotoneTriangle& t, int i, int j);

void for_each_mt(const Row& bottom, const std::function<void(const MonotoneTriangle&)>& fn);
std::vector<MonotoneTriangle> enumerate_mt(const Row& bottom);
void for_each_amt(const Row& bottom, const std::function<void(const ArrowedMT&)>& fn);

Int count_mt(const Row& bottom);
Int count_amt(const Row& bottom);  // = sum over triangles of 3^(free entries)

// Weight of one AMT in the ring uvwx(n): u^{#ne} v^{#nw} w^{#both} times
// X_i^{(rowsum_i - rowsum_{i-1}) + #ne(i) - #nw(i)}; arrow counts are per
// pure decoration, the combined decoration counts only toward w.
LaurentPoly amt_weight(const ArrowedMT& t, RingPtr ring);

// Reference generating function: sum of amt_weight over all AMTs, computed
// without expanding the 3^f decoration choices.
LaurentPoly gf_brute(const Row& bottom, RingPtr ring);

// Exact evaluation of gf_brute at a point, one value per uvwx(n) variable.
Rat gf_eval(const Row& bottom, const std::vector<Rat>& values);

// Product of shift operators applied to the extended Schur polynomial.
LaurentPoly gf_operator(const Row& bottom, RingPtr ring);

// Antisymmetrizer quotient form.
LaurentPoly gf_antisym(const Row& bottom, RingPtr ring);

// Bialternant determinant form; fixed bottom row 0,2,..,2n-2.
LaurentPoly gf_bialternant(int n, RingPtr ring);

Row staircase_bottom(int n);  // 0, 2, ..., 2n-2

// ---- ASM conversions (test utilities) ----

using Matrix = std::vector<std::vector<int>>;

bool is_asm(const Matrix& a);
bool is_vsasm(const Matrix& a);  // vertically symmetric ASM, odd order

// Classical bijection: N x N ASM <-> monotone triangle with bottom row 1..N
// via column partial sums.
MonotoneTriangle asm_to_mt(const Matrix& a);
Matrix mt_to_asm(const MonotoneTriangle& t);

// A VSASM of order 2n+1 corresponds to a monotone triangle with bottom row
// 0,2,..,2n-2: rotate by 90 degrees, keep the top n rows of its monotone
// triangle, subtract 2. The rotated matrix mirrors around its middle row,
// which reconstructs the lower half.
MonotoneTriangle vsasm_to_mt(const Matrix& a);
Matrix mt_to_vsasm(const MonotoneTriangle& t);

}  // namespace vsasm
