#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "alexmod/abelian.hpp"
#include "alexmod/words.hpp"

namespace alexmod {

struct GroupPresentation {
  int num_generators = 0;
  std::vector<Word> relators;
  std::vector<std::string> generator_names;  // may be empty (x1, x2, ...)

  std::string name(int gen) const;  // 1-based
  void validate() const;            // relators use only indices <= r
};

GroupPresentation make_presentation(int num_generators,
                                    std::vector<Word> relators,
                                    std::vector<std::string> names = {});

// Homomorphism from a presented group to a f.g. abelian group, given by
// generator images.  Constructed only through validate_hom, which checks
// that every relator dies.
struct AbelianHom {
  AbelianGroup target;
  std::vector<AbelianElement> images;  // one per presentation generator

  AbelianElement word_image(const Word& w) const;
  bool is_trivial_target() const { return target.is_trivial(); }
};

struct RelatorNotKilled : std::invalid_argument {
  int relator_index;
  AbelianElement image;
  RelatorNotKilled(int idx, AbelianElement img);
};

AbelianHom validate_hom(const GroupPresentation& p,
                        std::vector<AbelianElement> images,
                        const AbelianGroup& target);

// Exponent-sum matrix, rows = generators, columns = relators.
IntMatrix exponent_matrix(const GroupPresentation& p);

// G^ab in normal form plus the projection homomorphism.
std::pair<AbelianGroup, AbelianHom> abelianization(const GroupPresentation& p);

// Surjectivity of psi onto its finite target (images generate).
bool hom_surjective(const AbelianHom& psi);

struct SchreierData {
  GroupPresentation subgroup;          // presentation of ker psi
  std::vector<Word> transversal;       // coset representative per H element
  // Schreier generator (coset index, presentation generator) -> subgroup
  // generator index (1-based), or 0 for a pruned tree generator.
  std::vector<std::vector<int>> gen_index;
  int index = 0;  // |H|
};

// Rewrites ker psi as a presentation via a prefix-closed Schreier
// transversal.  Requires psi surjective with finite target.
SchreierData reidemeister_schreier(const GroupPresentation& p,
                                   const AbelianHom& psi);

AbelianGroup subgroup_abelianization(const GroupPresentation& p,
                                     const AbelianHom& psi);

}  // namespace alexmod
