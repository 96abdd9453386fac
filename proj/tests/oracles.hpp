#pragma once

#include <vector>

#include "alexmod/coverings.hpp"

// Independent test-side oracles.  These deliberately avoid the code paths
// they are used to check: the cokernel oracle counts solutions of d*x = 0
// in a finite quotient instead of diagonalizing, and the surface oracle
// builds a CW chain complex of the cover instead of going through the
// derived module.

namespace alexmod::testing {

// Invariant factors of Z^n / colspan(a) for a square nonsingular a,
// via element-order counts in (Z/M)^n modulo the subgroup generated by
// the columns, M = |det a| (computed by cofactor expansion).
// Quotient order must stay small (M^n is enumerated).
AbelianGroup coker_enumeration_oracle(const IntMatrix& a);

// Determinant by cofactor expansion (independent of the SNF routine).
Int cofactor_determinant(const IntMatrix& a);

struct SurfaceHomology {
  AbelianGroup h1;
  // trace of each canonical deck-group generator acting on H_1
  std::vector<Int> traces;
};

// H_1 of the branched cover from the pulled-back CW structure on the
// sphere (one vertex, s loop edges, outer cell, one cap per marked
// point) with the deck action computed from the cell permutation.
SurfaceHomology cw_cover_homology(const BranchedCover& cover);

}  // namespace alexmod::testing
