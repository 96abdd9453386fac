#include "alexmod/coverings.hpp"

#include <sstream>

namespace alexmod {

GroupPresentation gamma_presentation(const std::vector<long>& indices) {
  int s = static_cast<int>(indices.size());
  if (s < 3) throw std::invalid_argument("at least three marked points needed");
  for (long e : indices)
    if (e < 2) throw std::invalid_argument("branch indices must be >= 2");
  Word product;
  for (int i = 1; i <= s; ++i) product = product * Word::generator(i);
  std::vector<Word> rels{product};
  for (int i = 1; i <= s; ++i)
    rels.push_back(Word::generator(i, indices[i - 1]));
  return make_presentation(s, std::move(rels));
}

BranchedCover make_cover(const std::vector<long>& indices,
                         const IntMatrix* extra_relations) {
  BranchedCover cover;
  cover.indices = indices;
  cover.gamma = gamma_presentation(indices);
  int s = cover.gamma.num_generators;

  std::vector<std::vector<Int>> cols{std::vector<Int>(s, 1)};
  for (int i = 0; i < s; ++i) {
    std::vector<Int> c(s);
    c[i] = indices[i];
    cols.push_back(c);
  }
  IntMatrix relations = IntMatrix::from_columns(s, cols);
  if (extra_relations) {
    if (extra_relations->rows() != s)
      throw std::invalid_argument("extra relation ambient rank mismatch");
    relations = relations.hcat(*extra_relations);
  }
  QuotientPresentation q = quotient_by(s, relations);

  std::vector<AbelianElement> images;
  for (int i = 0; i < s; ++i) {
    std::vector<Int> e(s);
    e[i] = 1;
    images.push_back(q.project(e));
  }
  cover.psi = validate_hom(cover.gamma, std::move(images), q.group);
  return cover;
}

std::vector<std::string> validate_ramification(const BranchedCover& cover) {
  std::vector<std::string> warnings;
  for (size_t i = 0; i < cover.indices.size(); ++i) {
    Int m = ab_order(cover.psi.target, cover.psi.images[i]);
    if (m != cover.indices[i]) {
      std::ostringstream os;
      os << "marked point " << i + 1 << ": image has order " << m.get_str()
         << ", index is " << cover.indices[i];
      warnings.push_back(os.str());
    }
  }
  return warnings;
}

long riemann_hurwitz_genus(const Int& n, const std::vector<Int>& m) {
  Int chi = 2 * n;
  for (const auto& mi : m) {
    if (mi < 1 || n % mi != 0)
      throw NonIntegralGenus("branch order does not divide the degree");
    chi -= (n / mi) * (mi - 1);
  }
  Int two_g = 2 - chi;
  if (two_g < 0 || two_g % 2 != 0)
    throw NonIntegralGenus("Euler characteristic is not of the form 2 - 2g");
  Int g = two_g / 2;
  if (!g.fits_slong_p()) throw NonIntegralGenus("genus out of range");
  return g.get_si();
}

CoverReport cover_homology(const BranchedCover& cover) {
  const AbelianGroup& h = cover.psi.target;
  CoverReport rep;
  rep.deck_group = h;

  CrowellSequence cs = crowell_sequence(cover.gamma, cover.psi);
  IntMatrix kernel = lattice_kernel(expanded_theta2(cs));
  IntMatrix relations = expanded_relations(cs);

  IntMatrix basis = lattice_basis(kernel.hcat(relations));
  LatticeSolver solver(basis);
  IntMatrix coords(basis.cols(), relations.cols());
  for (int j = 0; j < relations.cols(); ++j) {
    auto x = solver.solve(relations.col(j));
    if (!x) throw std::logic_error("relation outside the kernel lattice");
    for (int i = 0; i < basis.cols(); ++i) coords.at(i, j) = (*x)[i];
  }
  QuotientPresentation q = quotient_by(basis.cols(), coords);
  rep.homology = q.group;

  AbelianGroup oracle = subgroup_abelianization(cover.gamma, cover.psi);
  if (rep.homology != oracle)
    throw std::logic_error("derived module disagrees with subgroup rewriting");
  if (!rep.homology.torsion.empty())
    throw std::logic_error("torsion in the homology of a covering surface");

  std::vector<Int> m;
  for (const auto& img : cover.psi.images) m.push_back(ab_order(h, img));
  rep.genus = riemann_hurwitz_genus(h.order(), m);
  if (rep.homology.free_rank != 2 * rep.genus)
    throw std::logic_error("homology rank does not match the genus");

  // Deck action: a group element permutes the ambient coordinates
  // (j, k) -> (j, k + g); push the permuted basis back into quotient
  // coordinates.
  long n = h.order().get_si();
  auto elems = ab_enumerate(h);
  int r = cover.gamma.num_generators;
  auto translate = [&](const std::vector<Int>& v, const AbelianElement& g) {
    std::vector<Int> out(v.size());
    for (int j = 0; j < r; ++j)
      for (long k = 0; k < n; ++k) {
        long kt = ab_index(h, ab_add(h, elems[k], g));
        out[j * n + kt] = v[j * n + k];
      }
    return out;
  };

  int rank = rep.homology.free_rank;
  for (int gi = 0; gi < h.num_components(); ++gi) {
    AbelianElement gen = ab_zero(h);
    if (gi < h.free_rank)
      gen.free_part[gi] = 1;
    else
      gen.torsion_part[gi - h.free_rank] = 1;
    IntMatrix action(rank, rank);
    for (int j = 0; j < rank; ++j) {
      AbelianElement unit = ab_zero(rep.homology);
      unit.free_part[j] = 1;
      std::vector<Int> ambient = basis.apply(q.lift(unit));
      auto x = solver.solve(translate(ambient, gen));
      if (!x) throw std::logic_error("deck action leaves the kernel lattice");
      AbelianElement cls = q.project(*x);
      for (int i = 0; i < rank; ++i) action.at(i, j) = cls.free_part[i];
    }
    rep.h_action.push_back(action);
  }
  return rep;
}

}  // namespace alexmod
