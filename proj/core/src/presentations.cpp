#include "alexmod/presentations.hpp"

#include <deque>
#include <sstream>

namespace alexmod {

std::string GroupPresentation::name(int gen) const {
  if (gen >= 1 && static_cast<size_t>(gen) <= generator_names.size())
    return generator_names[gen - 1];
  std::ostringstream os;
  os << "x" << gen;
  return os.str();
}

void GroupPresentation::validate() const {
  if (num_generators < 0)
    throw std::invalid_argument("negative generator count");
  for (const auto& r : relators)
    if (r.max_generator() > num_generators)
      throw std::invalid_argument("relator uses an unknown generator");
  if (!generator_names.empty() &&
      generator_names.size() != static_cast<size_t>(num_generators))
    throw std::invalid_argument("generator name count mismatch");
}

GroupPresentation make_presentation(int num_generators,
                                    std::vector<Word> relators,
                                    std::vector<std::string> names) {
  GroupPresentation p{num_generators, std::move(relators), std::move(names)};
  p.validate();
  return p;
}

AbelianElement AbelianHom::word_image(const Word& w) const {
  AbelianElement out = ab_zero(target);
  for (const auto& s : w.syllables())
    out = ab_add(target, out,
                 ab_scale(target, Int(s.exp), images[s.gen - 1]));
  return out;
}

RelatorNotKilled::RelatorNotKilled(int idx, AbelianElement img)
    : std::invalid_argument("relator " + std::to_string(idx + 1) +
                            " does not map to the identity: " +
                            ab_element_str(img)),
      relator_index(idx),
      image(std::move(img)) {}

AbelianHom validate_hom(const GroupPresentation& p,
                        std::vector<AbelianElement> images,
                        const AbelianGroup& target) {
  if (images.size() != static_cast<size_t>(p.num_generators))
    throw std::invalid_argument("one image per generator required");
  AbelianHom h{target, std::move(images)};
  for (size_t i = 0; i < p.relators.size(); ++i) {
    AbelianElement img = h.word_image(p.relators[i]);
    if (!ab_is_zero(img)) throw RelatorNotKilled(static_cast<int>(i), img);
  }
  return h;
}

IntMatrix exponent_matrix(const GroupPresentation& p) {
  IntMatrix e(p.num_generators, static_cast<int>(p.relators.size()));
  for (size_t j = 0; j < p.relators.size(); ++j)
    for (const auto& s : p.relators[j].syllables())
      e.at(s.gen - 1, static_cast<int>(j)) += s.exp;
  return e;
}

std::pair<AbelianGroup, AbelianHom> abelianization(const GroupPresentation& p) {
  QuotientPresentation q = quotient_by(p.num_generators, exponent_matrix(p));
  std::vector<AbelianElement> images;
  images.reserve(p.num_generators);
  for (int i = 0; i < p.num_generators; ++i) {
    std::vector<Int> e(p.num_generators);
    e[i] = 1;
    images.push_back(q.project(e));
  }
  return {q.group, AbelianHom{q.group, std::move(images)}};
}

bool hom_surjective(const AbelianHom& psi) {
  const AbelianGroup& h = psi.target;
  if (!h.is_finite())
    throw std::domain_error("surjectivity check requires finite target");
  const int k = static_cast<int>(h.torsion.size());
  if (k == 0) return true;
  // Images generate H iff their lifts together with the invariant-factor
  // lattice span Z^k.
  IntMatrix m(k, static_cast<int>(psi.images.size()) + k);
  for (size_t j = 0; j < psi.images.size(); ++j)
    for (int i = 0; i < k; ++i)
      m.at(i, static_cast<int>(j)) = psi.images[j].torsion_part[i];
  for (int i = 0; i < k; ++i)
    m.at(i, static_cast<int>(psi.images.size()) + i) = h.torsion[i];
  return coker_invariants(m).is_trivial();
}

SchreierData reidemeister_schreier(const GroupPresentation& p,
                                   const AbelianHom& psi) {
  if (!psi.target.is_finite())
    throw std::domain_error("InfiniteTarget: Reidemeister-Schreier needs a "
                            "finite quotient");
  if (!hom_surjective(psi))
    throw std::invalid_argument("NonSurjective: generator images do not "
                                "generate the target");
  const AbelianGroup& h = psi.target;
  const long n = h.order().get_si();
  const int r = p.num_generators;

  // Prefix-closed transversal by breadth-first search in the Cayley graph,
  // edges tried in increasing generator order.
  std::vector<Word> transversal(n);
  std::vector<char> seen(n, 0);
  std::vector<std::vector<char>> tree_edge(
      n, std::vector<char>(r + 1, 0));  // [coset][gen]
  std::deque<long> queue;
  long start = ab_index(h, ab_zero(h));
  seen[start] = 1;
  queue.push_back(start);
  while (!queue.empty()) {
    long c = queue.front();
    queue.pop_front();
    AbelianElement ce = ab_at(h, c);
    for (int g = 1; g <= r; ++g) {
      long t = ab_index(h, ab_add(h, ce, psi.images[g - 1]));
      if (!seen[t]) {
        seen[t] = 1;
        transversal[t] = transversal[c] * Word::generator(g);
        tree_edge[c][g] = 1;
        queue.push_back(t);
      }
    }
  }

  // Number the surviving Schreier generators in (coset, generator) order.
  SchreierData out;
  out.index = static_cast<int>(n);
  out.transversal = transversal;
  out.gen_index.assign(n, std::vector<int>(r + 1, 0));
  int next = 0;
  for (long c = 0; c < n; ++c)
    for (int g = 1; g <= r; ++g)
      if (!tree_edge[c][g]) out.gen_index[c][g] = ++next;

  // Rewrite each conjugated relator t_c R t_c^{-1} letter by letter.
  std::vector<Word> relators;
  relators.reserve(n * p.relators.size());
  for (long c = 0; c < n; ++c) {
    for (const auto& rel : p.relators) {
      std::vector<Syllable> letters;
      AbelianElement cur = ab_at(h, c);
      for (const auto& s : rel.syllables()) {
        long reps = s.exp < 0 ? -s.exp : s.exp;
        for (long k = 0; k < reps; ++k) {
          if (s.exp > 0) {
            long cc = ab_index(h, cur);
            int idx = out.gen_index[cc][s.gen];
            if (idx != 0) letters.push_back({idx, 1});
            cur = ab_add(h, cur, psi.images[s.gen - 1]);
          } else {
            cur = ab_add(h, cur, ab_neg(h, psi.images[s.gen - 1]));
            long cc = ab_index(h, cur);
            int idx = out.gen_index[cc][s.gen];
            if (idx != 0) letters.push_back({idx, -1});
          }
        }
      }
      relators.push_back(Word::reduce(letters));
    }
  }

  out.subgroup.num_generators = next;
  out.subgroup.relators = std::move(relators);
  return out;
}

AbelianGroup subgroup_abelianization(const GroupPresentation& p,
                                     const AbelianHom& psi) {
  return abelianization(reidemeister_schreier(p, psi).subgroup).first;
}

}  // namespace alexmod
