#pragma once

#include <map>
#include <string>
#include <vector>

#include "alexmod/abelian.hpp"

namespace alexmod {

// Element of Z[H] for a finitely generated abelian H.  Covers finite group
// algebras and Laurent polynomial rings (H free of rank 1) alike.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(AbelianGroup group) : group_(std::move(group)) {}
  static GroupAlgebraElement zero(const AbelianGroup& g);
  static GroupAlgebraElement one(const AbelianGroup& g);
  static GroupAlgebraElement monomial(const AbelianGroup& g,
                                      const AbelianElement& h, Int coeff = 1);

  const AbelianGroup& group() const { return group_; }
  const std::map<AbelianElement, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const AbelianElement& h) const;

  GroupAlgebraElement operator+(const GroupAlgebraElement& rhs) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& rhs) const;
  GroupAlgebraElement operator-() const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& rhs) const;
  GroupAlgebraElement scaled(const Int& c) const;

  void add_term(const AbelianElement& h, const Int& c);

  Int augmentation() const;  // coefficient sum
  // Pushforward along a group homomorphism; the result lives over f.target.
  GroupAlgebraElement apply_hom(const AbelianGroupHom& f) const;

  std::string str() const;

  friend bool operator==(const GroupAlgebraElement&,
                         const GroupAlgebraElement&);

 private:
  AbelianGroup group_;
  std::map<AbelianElement, Int> terms_;
};

struct AlgebraMatrix {
  AbelianGroup group;
  int rows = 0, cols = 0;
  std::vector<GroupAlgebraElement> entries;  // row-major

  AlgebraMatrix() = default;
  AlgebraMatrix(AbelianGroup g, int r, int c);
  GroupAlgebraElement& at(int i, int j) {
    return entries[static_cast<size_t>(i) * cols + j];
  }
  const GroupAlgebraElement& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * cols + j];
  }
  AlgebraMatrix transposed() const;
  AlgebraMatrix apply_hom(const AbelianGroupHom& f) const;
};

// Left-regular-representation matrix of a single element (H finite):
// column indexed by ab_index(k), row by ab_index(h*k).
IntMatrix regular_matrix(const GroupAlgebraElement& a);

// Blockwise regular expansion of a matrix over Z[H]; size
// (|H| * rows) x (|H| * cols).  Throws on infinite H.
IntMatrix regular_expand(const AlgebraMatrix& m);

// All (r-d) x (r-d) minors of an s x r matrix, deterministic order
// (lexicographic row and column index sets).  Conventions: r-d <= 0
// gives {1}; r-d > min(s, r) gives {0}.
std::vector<GroupAlgebraElement> elementary_ideal_generators(
    const AlgebraMatrix& m, int d);

// ---- Laurent polynomial helpers (H infinite cyclic) ----

// Dense coefficient view c[0..], value = sum c_i t^(lo+i).
struct LaurentPoly {
  long lo = 0;
  std::vector<Int> coeffs;  // empty means zero; first and last nonzero

  bool is_zero() const { return coeffs.empty(); }
};

LaurentPoly to_laurent(const GroupAlgebraElement& a);
GroupAlgebraElement from_laurent(const AbelianGroup& g, const LaurentPoly& p);

// Gcd over Z[t, t^-1], exact: integer content split off by the Gauss
// lemma, primitive part by pseudo-remainder sequences over Z.  Result
// normalized to lowest degree 0 with positive leading coefficient.
GroupAlgebraElement laurent_gcd(const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b);
GroupAlgebraElement laurent_normalize(const GroupAlgebraElement& a);

// Gcd of elementary-ideal generators (H infinite cyclic), normalized.
// All-zero input yields 0.
GroupAlgebraElement alexander_polynomial_from_ideal(
    const std::vector<GroupAlgebraElement>& gens, const AbelianGroup& h);

// Exact division test/result over Z[t, t^-1].
bool laurent_divides(const GroupAlgebraElement& d,
                     const GroupAlgebraElement& a);

}  // namespace alexmod
