#include "alexmod/fox.hpp"

namespace alexmod {

namespace {

// d(x^n)/dx in closed form: 1 + x + ... + x^(n-1) for n > 0,
// -(x^-1 + ... + x^-n) for n < 0.
FreeAlgebraElement syllable_derivative(int gen, long exp) {
  FreeAlgebraElement out;
  if (exp > 0) {
    for (long k = 0; k < exp; ++k)
      out.add_term(Word::generator(gen, k), 1);
  } else {
    for (long k = 1; k <= -exp; ++k)
      out.add_term(Word::generator(gen, -k), -1);
  }
  return out;
}

}  // namespace

FreeAlgebraElement fox_derivative(const Word& w, int j) {
  if (j < 1) throw std::invalid_argument("generator index must be >= 1");
  FreeAlgebraElement out;
  Word prefix;
  for (const auto& s : w.syllables()) {
    if (s.gen == j)
      out = out + syllable_derivative(s.gen, s.exp).left_mul(prefix);
    prefix = prefix * Word::generator(s.gen, s.exp);
  }
  return out;
}

std::vector<std::vector<FreeAlgebraElement>> fox_jacobian(
    const GroupPresentation& p) {
  std::vector<std::vector<FreeAlgebraElement>> jac;
  jac.reserve(p.relators.size());
  for (const auto& rel : p.relators) {
    std::vector<FreeAlgebraElement> row;
    row.reserve(p.num_generators);
    for (int j = 1; j <= p.num_generators; ++j)
      row.push_back(fox_derivative(rel, j));
    jac.push_back(std::move(row));
  }
  return jac;
}

GroupAlgebraElement push_to_group_algebra(const FreeAlgebraElement& a,
                                          const AbelianHom& psi) {
  GroupAlgebraElement out(psi.target);
  for (const auto& [w, c] : a.terms()) out.add_term(psi.word_image(w), c);
  return out;
}

AlexanderPresentation alexander_matrix(const GroupPresentation& p,
                                       const AbelianHom& psi) {
  AlexanderPresentation ap{
      AlgebraMatrix(psi.target, static_cast<int>(p.relators.size()),
                    p.num_generators),
      p, psi};
  auto jac = fox_jacobian(p);
  for (size_t i = 0; i < jac.size(); ++i)
    for (int j = 0; j < p.num_generators; ++j)
      ap.matrix.at(static_cast<int>(i), j) =
          push_to_group_algebra(jac[i][j], psi);
  return ap;
}

AbelianGroup alexander_invariants(const AlexanderPresentation& ap) {
  // Module generators are the dx_j; each relator row contributes |H|
  // relation columns.  The bridge to the abelian convention (rows =
  // generators, cols = relations) is the plain transpose.
  return coker_invariants(regular_expand(ap.matrix.transposed()));
}

GroupAlgebraElement alexander_polynomial(const GroupPresentation& p,
                                         const AbelianHom& psi) {
  AlexanderPresentation ap = alexander_matrix(p, psi);
  return alexander_polynomial_from_ideal(
      elementary_ideal_generators(ap.matrix, 1), psi.target);
}

bool fundamental_identity_check(const Word& w) {
  FreeAlgebraElement rhs;
  int r = w.max_generator();
  for (int j = 1; j <= r; ++j) {
    FreeAlgebraElement xj_minus_1 = FreeAlgebraElement::from_word(
        Word::generator(j));
    xj_minus_1.add_term(Word{}, -1);
    rhs = rhs + fox_derivative(w, j) * xj_minus_1;
  }
  FreeAlgebraElement lhs = FreeAlgebraElement::from_word(w);
  lhs.add_term(Word{}, -1);
  return lhs == rhs;
}

}  // namespace alexmod
