#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace alexmod {

using Int = mpz_class;

// Dense matrix over Z, arbitrary precision, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntMatrix(int rows, int cols, std::vector<Int> entries);

  static IntMatrix identity(int n);
  static IntMatrix diagonal(const std::vector<Int>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transposed() const;
  std::vector<Int> col(int j) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x
  bool is_zero() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);

  // Columns of `extra` appended on the right; ambient rank must agree.
  IntMatrix hcat(const IntMatrix& extra) const;
  static IntMatrix from_columns(int ambient,
                                const std::vector<std::vector<Int>>& cols);

  std::string str() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// U * A * V = D with U, V unimodular, D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SnfResult {
  IntMatrix u, d, v;
  int rank = 0;  // number of nonzero diagonal entries
};

// track_v = false skips the column transform (v left empty); enough for
// membership tests and much cheaper on wide matrices.
SnfResult smith_normal_form(const IntMatrix& a, bool track_v = true);

// Finitely generated abelian group in invariant-factor normal form:
// Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ..., all d_i >= 2.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  Int order() const;  // throws on infinite group
  int num_components() const {
    return free_rank + static_cast<int>(torsion.size());
  }
  std::string str() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Element in normal-form coordinates: free exponents followed by torsion
// residues, i-th residue reduced into [0, d_i).
struct AbelianElement {
  std::vector<Int> free_part;
  std::vector<Int> torsion_part;

  friend bool operator==(const AbelianElement&, const AbelianElement&) = default;
  friend bool operator<(const AbelianElement& a, const AbelianElement& b);
};

AbelianElement ab_zero(const AbelianGroup& g);
AbelianElement ab_normalize(const AbelianGroup& g, AbelianElement e);
AbelianElement ab_add(const AbelianGroup& g, const AbelianElement& a,
                      const AbelianElement& b);
AbelianElement ab_neg(const AbelianGroup& g, const AbelianElement& a);
AbelianElement ab_scale(const AbelianGroup& g, const Int& k,
                        const AbelianElement& a);
bool ab_is_zero(const AbelianElement& a);
// Order of the element; 0 encodes infinite order.
Int ab_order(const AbelianGroup& g, const AbelianElement& a);

// Canonical enumeration of a finite group, lexicographic on the residue
// vector.  Index <-> element conversions match this order.
std::vector<AbelianElement> ab_enumerate(const AbelianGroup& g);
long ab_index(const AbelianGroup& g, const AbelianElement& e);
AbelianElement ab_at(const AbelianGroup& g, long index);

std::string ab_element_str(const AbelianElement& e);

// Homomorphism between abelian groups given by images of the canonical
// generators (free generators first, then torsion generators).
struct AbelianGroupHom {
  AbelianGroup source, target;
  std::vector<AbelianElement> gen_images;

  AbelianElement apply(const AbelianElement& e) const;
};

// Throws std::invalid_argument if some torsion generator image does not
// die under its invariant factor.
AbelianGroupHom make_ab_hom(const AbelianGroup& source,
                            const AbelianGroup& target,
                            std::vector<AbelianElement> gen_images);

// Cokernel Z^rows / colspan(A), invariant-factor normal form.
AbelianGroup coker_invariants(const IntMatrix& a);

// Basis of the integer kernel {x : A x = 0}, as matrix columns.
IntMatrix lattice_kernel(const IntMatrix& a);

// Reusable SNF factorization for solving A x = b over Z repeatedly.
class LatticeSolver {
 public:
  // membership_only skips the column transform; contains() still works
  // but solve() is unavailable.
  explicit LatticeSolver(IntMatrix a, bool membership_only = false);
  const IntMatrix& matrix() const { return a_; }
  bool contains(const std::vector<Int>& b) const;
  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

 private:
  IntMatrix a_;
  SnfResult f_;
  bool membership_only_;
};

bool lattice_membership(const std::vector<Int>& b, const IntMatrix& a);

// Column spans coincide over Z.
bool sublattice_equal(const IntMatrix& a, const IntMatrix& b);

// Basis of the column span (nonzero columns of A*V), ambient preserved.
IntMatrix lattice_basis(const IntMatrix& a);

// Invariants of colspan(generators)/colspan(relations).  Throws if some
// relation column lies outside the generator span.
AbelianGroup subquotient_invariants(const IntMatrix& generators,
                                    const IntMatrix& relations);

// Quotient Z^ambient / colspan(relations) together with the projection
// onto normal-form coordinates.
struct QuotientPresentation {
  AbelianGroup group;
  IntMatrix u;                   // SNF row transform of the relation matrix
  std::vector<int> free_rows;    // rows of u giving free coordinates
  std::vector<int> torsion_rows; // rows of u giving torsion coordinates

  AbelianElement project(const std::vector<Int>& x) const;
  // Some preimage in Z^ambient of a normal-form element.
  std::vector<Int> lift(const AbelianElement& e) const;
};

QuotientPresentation quotient_by(int ambient, const IntMatrix& relations);

// Tensor with Z/m: the mod-m view of an invariant list (each Z becomes
// Z/m, each Z/d becomes Z/gcd(d, m)).
AbelianGroup reduce_invariants_mod(const AbelianGroup& g, const Int& m);

}  // namespace alexmod
