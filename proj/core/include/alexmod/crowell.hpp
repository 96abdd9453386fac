#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alexmod/fox.hpp"

namespace alexmod {

// Data of 0 -> R^ab -> A_psi -> Z[H] -> Z -> 0 for 1 -> R -> G -> H -> 1.
// theta2 sends dx_j to psi(x_j) - 1.
struct CrowellSequence {
  AlexanderPresentation alexander;
  AlgebraMatrix theta2;  // r x 1 column over Z[H]
  AbelianHom hom;
};

CrowellSequence crowell_sequence(const GroupPresentation& p,
                                 const AbelianHom& psi);

// Integer expansions under the canonical H enumeration (finite H).
IntMatrix expanded_theta2(const CrowellSequence& cs);     // |H| x r|H|
IntMatrix expanded_relations(const CrowellSequence& cs);  // r|H| x s|H|

// R^ab = ker theta2 / im Q_psi as an abelian group (finite H).
AbelianGroup rab_via_crowell(const CrowellSequence& cs);

struct ExactnessReport {
  bool theta2_well_defined = false;  // theta2 o Q_psi = 0 over Z[H]
  bool im_theta2_equals_ker_eps = false;
  bool eps_surjective = false;
  bool rab_matches_rs_oracle = false;
  AbelianGroup rab_crowell;
  AbelianGroup rab_schreier;
  std::string witness;

  bool pass() const {
    return theta2_well_defined && im_theta2_equals_ker_eps && eps_surjective &&
           rab_matches_rs_oracle;
  }
};

ExactnessReport check_crowell_exactness(const CrowellSequence& cs);

// Explicit finite group via its Cayley table (indices into an element
// list; 0 is the identity).
struct FiniteGroupTable {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<std::string> names;

  int mul(int a, int b) const { return table[a][b]; }
  int inverse(int a) const;
  void validate() const;  // identity, inverses, associativity spot check

  static FiniteGroupTable cyclic(int n);
  static FiniteGroupTable symmetric3();
  static FiniteGroupTable dihedral4();
  static FiniteGroupTable quaternion8();
};

// Checks relators of p evaluate to the identity under the given
// generator assignment (indices into the table).
bool table_satisfies(const FiniteGroupTable& t, const GroupPresentation& p,
                     const std::vector<int>& gen_elems);

// Abelian invariants of the module with one generator d_g per table
// element and relations d_{g1 g2} - d_{g1} - psi(g1) d_{g2}, over Z[H].
// By construction this presents Z[H] (x)_{Z[G]} I_{Z[G]}.
AbelianGroup bimodule_oracle(const FiniteGroupTable& t,
                             const std::vector<AbelianElement>& psi,
                             const AbelianGroup& h);

// ---- Functor maps ----

struct C1InducedMap {
  AlgebraMatrix matrix;  // r_A x r_B over Z[H_B]; row j = image of dx_j
  AbelianGroupHom f_h;
};

// f_g maps generators of a to words in b's generators; f_h maps H_A to
// H_B.  Verifies abelianized compatibility f_h o psi_A = psi_B o f_g.
C1InducedMap c1_induced_map(const GroupPresentation& a, const AbelianHom& psi_a,
                            const GroupPresentation& b, const AbelianHom& psi_b,
                            const std::vector<Word>& f_g,
                            const AbelianGroupHom& f_h);

// Image of the induced map spans the target module over Z (finite groups).
bool c1_induced_surjective(const C1InducedMap& m,
                           const AlexanderPresentation& ap_b);

// ---- C2 chains ----

struct C2Chain {
  AbelianGroupHom incl;  // H_A -> H_B
  AbelianGroupHom proj;  // H_B -> H_C
};

// 0 -> H_A -> H_B -> H_C -> 0 exact, verified by enumeration.
struct ChainValidation {
  bool composite_zero = false;
  bool injective = false;
  bool image_equals_kernel = false;
  bool surjective = false;
  bool valid() const {
    return composite_zero && injective && image_equals_kernel && surjective;
  }
};

ChainValidation validate_chain(const C2Chain& chain);

struct C2Report {
  ChainValidation chain;
  bool exact_at_c = false;
  bool exact_at_b = false;
  std::string witness;
  bool pass() const { return chain.valid() && exact_at_c && exact_at_b; }
};

// Builds the three Alexander presentations from the same Fox matrix
// pushed through the chain and verifies exactness of
// A_A -> A_B -> A_C -> 0 at B and C by sublattice computations.
// Throws std::invalid_argument when the chain fails validation.
C2Report c2_exactness_check(const GroupPresentation& p,
                            const AbelianHom& psi_a, const C2Chain& chain);

// ---- Kernel-formula verifications (sampled) ----

struct SampledKernelReport {
  bool killed_direction_pass = false;      // preimage elements die
  bool membership_direction_pass = false;  // kernel elements lie in preimage
  bool surjective = false;
  int samples = 0;
  std::string witness;
  bool pass() const {
    return killed_direction_pass && membership_direction_pass && surjective;
  }
};

// Map of Crowell data along a coefficient quotient q : H_fine -> H_coarse
// (same source presentation).  Verifies, by sampling, the kernel formula
// ker = pi(phi^-1(Im Q_coarse)) in both directions, with the preimage
// lattice built explicitly as lift(Im Q_coarse) + ker(phi) generators.
// corrupt_image doubles the claimed image lattice before lifting, a
// negative control that must trip the membership direction.
SampledKernelReport theta2_between(const CrowellSequence& fine,
                                   const CrowellSequence& coarse,
                                   const AbelianGroupHom& q, int samples = 50,
                                   uint64_t seed = 0,
                                   bool corrupt_image = false);

// The free-vs-quotient presentation diagram: the top row presents the
// free group on s generators modulo the product relator x_1...x_s over a
// finite quotient of its abelianization; the bottom row adds the power
// relators x_i^{e_i}.  Verifies phi3 onto and the kernel formula
// ker(phi3) = psi1(phi2^-1(Im Q_2)), sampled.
SampledKernelReport phi3_kernel_check(const std::vector<long>& indices,
                                      long top_modulus = 0,  // 0 -> lcm(e_i)
                                      const IntMatrix* r0 = nullptr,
                                      int samples = 50, uint64_t seed = 0,
                                      bool corrupt_image = false);

// Middle-exactness probe for chains of induced maps: no claim is made
// either way; instances where the set-theoretic image differs from the
// kernel are reported.
struct MiddleExactnessFinding {
  std::string description;
};

std::vector<MiddleExactnessFinding> c1_middle_exactness_search(
    int trials = 10, uint64_t seed = 0);

}  // namespace alexmod
