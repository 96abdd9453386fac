#pragma once

#include <vector>

#include "alexmod/group_algebra.hpp"
#include "alexmod/presentations.hpp"

namespace alexmod {

// Free derivative d(w)/d(x_j) in Z[F].  Satisfies d(x_j)/d(x_j) = 1,
// d(x_i)/d(x_j) = 0 for i != j and the product rule
// d(uv) = d(u) + u d(v).
FreeAlgebraElement fox_derivative(const Word& w, int j);

// Entry (i, j) = d(R_i)/d(x_j); one row per relator.
std::vector<std::vector<FreeAlgebraElement>> fox_jacobian(
    const GroupPresentation& p);

// (psi o pi) applied term by term: each word goes to its abelian image.
GroupAlgebraElement push_to_group_algebra(const FreeAlgebraElement& a,
                                          const AbelianHom& psi);

struct AlexanderPresentation {
  AlgebraMatrix matrix;  // s x r, rows = relators, cols = generators
  GroupPresentation source;
  AbelianHom hom;
};

AlexanderPresentation alexander_matrix(const GroupPresentation& p,
                                       const AbelianHom& psi);

// Underlying abelian group of the module presented by the matrix, finite
// H only: cokernel of the regular expansion under the fixed convention
// (module generators = rows of the transposed matrix).
AbelianGroup alexander_invariants(const AlexanderPresentation& ap);

// Normalized gcd of the first elementary ideal; requires H infinite cyclic.
GroupAlgebraElement alexander_polynomial(const GroupPresentation& p,
                                         const AbelianHom& psi);

// w - 1 == sum_j d(w)/d(x_j) * (x_j - 1) in Z[F], exactly.
bool fundamental_identity_check(const Word& w);

}  // namespace alexmod
