#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "alexmod/crowell.hpp"

namespace alexmod {

// Orbifold group of the sphere with s marked points of indices e_1..e_s:
// < x_1..x_s | x_1 ... x_s, x_i^{e_i} >.
GroupPresentation gamma_presentation(const std::vector<long>& indices);

// A finite abelian branched cover of the sphere: the orbifold group
// together with a surjection onto the deck group.
struct BranchedCover {
  std::vector<long> indices;
  GroupPresentation gamma;
  AbelianHom psi;
};

// Deck group Z^s / <(1,...,1), e_i u_i, extra columns>, psi = projection
// of the generators.  Extra relation columns cut the cover down to a
// proper quotient; ambient rank must be s.
BranchedCover make_cover(const std::vector<long>& indices,
                         const IntMatrix* extra_relations = nullptr);

// One message per marked point whose image order drops below its index
// (the cover is then unramified or partially ramified there).
std::vector<std::string> validate_ramification(const BranchedCover& cover);

struct NonIntegralGenus : std::domain_error {
  using std::domain_error::domain_error;
};

// Genus from 2 - 2g = 2n - sum (n / m_i)(m_i - 1); throws
// NonIntegralGenus when the data is inconsistent.
long riemann_hurwitz_genus(const Int& n, const std::vector<Int>& m);

struct CoverReport {
  AbelianGroup deck_group;
  AbelianGroup homology;  // H_1 of the covering surface
  long genus = 0;
  // Action of each canonical deck-group generator on H_1 = Z^{2g}, in a
  // fixed basis computed from the module presentation.
  std::vector<IntMatrix> h_action;
};

// First homology of the cover as a deck-group module.  Computed from the
// derived module and cross-checked against subgroup rewriting; a
// mismatch or torsion in H_1 raises std::logic_error.
CoverReport cover_homology(const BranchedCover& cover);

}  // namespace alexmod
