#include "alexmod/crowell.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alexmod {

namespace {

long finite_order(const AbelianGroup& g) {
  if (!g.is_finite())
    throw std::domain_error("finite coefficient group required");
  Int n = g.order();
  if (!n.fits_slong_p()) throw std::domain_error("coefficient group too large");
  return n.get_si();
}

// e_{(j, k + gamma)} - e_{(j, k)} for every translate generator gamma,
// module generator j and group element k.  These span the kernel of the
// coordinate collapse along any quotient whose kernel the gammas generate.
IntMatrix translate_columns(const AbelianGroup& h,
                            const std::vector<AbelianElement>& gammas, int r) {
  long n = finite_order(h);
  auto elems = ab_enumerate(h);
  IntMatrix out(r * n, static_cast<int>(gammas.size()) * r * n);
  int c = 0;
  for (const auto& gamma : gammas)
    for (int j = 0; j < r; ++j)
      for (long k = 0; k < n; ++k, ++c) {
        long kt = ab_index(h, ab_add(h, elems[k], gamma));
        out.at(j * n + kt, c) += 1;
        out.at(j * n + k, c) -= 1;
      }
  return out;
}

// Matrix of e_{(j, h)} -> e_{(j, q(h))} on free modules of rank r.
IntMatrix collapse_matrix(const AbelianGroupHom& q, int r) {
  long nf = finite_order(q.source);
  long nc = finite_order(q.target);
  auto elems = ab_enumerate(q.source);
  IntMatrix m(r * nc, r * nf);
  for (int j = 0; j < r; ++j)
    for (long k = 0; k < nf; ++k)
      m.at(j * nc + ab_index(q.target, q.apply(elems[k])), j * nf + k) += 1;
  return m;
}

// First preimage index (enumeration order) per target element; q must be
// surjective onto a finite target.
std::vector<long> first_preimages(const AbelianGroupHom& q) {
  long nf = finite_order(q.source);
  long nc = finite_order(q.target);
  auto elems = ab_enumerate(q.source);
  std::vector<long> fp(nc, -1);
  for (long k = 0; k < nf; ++k) {
    long c = ab_index(q.target, q.apply(elems[k]));
    if (fp[c] < 0) fp[c] = k;
  }
  for (long c = 0; c < nc; ++c)
    if (fp[c] < 0) throw std::invalid_argument("quotient map not surjective");
  return fp;
}

// Columns of w (ambient r * |target|) lifted through the first-preimage
// section into ambient r * |source|.
IntMatrix lift_columns(const IntMatrix& w, const AbelianGroupHom& q, int r) {
  long nf = finite_order(q.source);
  long nc = finite_order(q.target);
  auto fp = first_preimages(q);
  IntMatrix out(static_cast<int>(r * nf), w.cols());
  for (int col = 0; col < w.cols(); ++col)
    for (int j = 0; j < r; ++j)
      for (long c = 0; c < nc; ++c)
        out.at(j * nf + fp[c], col) += w.at(j * nc + c, col);
  return out;
}

// Greedy generating set of ker q, closed under addition as we go.
std::vector<AbelianElement> kernel_generators(const AbelianGroupHom& q) {
  std::vector<AbelianElement> gens;
  std::set<AbelianElement> closure{ab_zero(q.source)};
  for (const auto& h : ab_enumerate(q.source)) {
    if (!ab_is_zero(q.apply(h)) || closure.count(h)) continue;
    gens.push_back(h);
    std::set<AbelianElement> next = closure;
    for (;;) {
      std::set<AbelianElement> grown = next;
      for (const auto& a : next) grown.insert(ab_add(q.source, a, h));
      if (grown == next) break;
      next = std::move(grown);
    }
    // close under sums of everything collected so far
    for (;;) {
      std::set<AbelianElement> grown = next;
      for (const auto& a : next)
        for (const auto& b : next) grown.insert(ab_add(q.source, a, b));
      if (grown == next) break;
      next = std::move(grown);
    }
    closure = std::move(next);
  }
  return gens;
}

std::vector<Int> random_combination(const IntMatrix& cols, std::mt19937_64& rng,
                                    int max_picks = 8) {
  std::vector<Int> v(cols.rows());
  if (cols.cols() == 0) return v;
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, cols.cols() - 1);
  int picks = std::min(max_picks, cols.cols());
  for (int t = 0; t < picks; ++t) {
    int j = pick(rng);
    int c = coeff(rng);
    if (c == 0) continue;
    for (int i = 0; i < cols.rows(); ++i) v[i] += c * cols.at(i, j);
  }
  return v;
}

std::string vec_str(const std::vector<Int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace

CrowellSequence crowell_sequence(const GroupPresentation& p,
                                 const AbelianHom& psi) {
  for (size_t i = 0; i < p.relators.size(); ++i)
    if (!ab_is_zero(psi.word_image(p.relators[i])))
      throw RelatorNotKilled(static_cast<int>(i),
                            psi.word_image(p.relators[i]));
  CrowellSequence cs{alexander_matrix(p, psi),
                     AlgebraMatrix(psi.target, p.num_generators, 1), psi};
  for (int j = 0; j < p.num_generators; ++j) {
    auto e = GroupAlgebraElement::monomial(psi.target, psi.images[j]);
    e.add_term(ab_zero(psi.target), -1);
    cs.theta2.at(j, 0) = e;
  }
  return cs;
}

IntMatrix expanded_theta2(const CrowellSequence& cs) {
  return regular_expand(cs.theta2.transposed());
}

IntMatrix expanded_relations(const CrowellSequence& cs) {
  return regular_expand(cs.alexander.matrix.transposed());
}

AbelianGroup rab_via_crowell(const CrowellSequence& cs) {
  IntMatrix kernel = lattice_kernel(expanded_theta2(cs));
  IntMatrix relations = expanded_relations(cs);
  return subquotient_invariants(kernel.hcat(relations), relations);
}

ExactnessReport check_crowell_exactness(const CrowellSequence& cs) {
  const AbelianGroup& h = cs.hom.target;
  ExactnessReport rep;

  rep.theta2_well_defined = true;
  const AlgebraMatrix& q = cs.alexander.matrix;
  for (int i = 0; i < q.rows && rep.theta2_well_defined; ++i) {
    GroupAlgebraElement acc = GroupAlgebraElement::zero(h);
    for (int j = 0; j < q.cols; ++j) acc = acc + q.at(i, j) * cs.theta2.at(j, 0);
    if (!acc.is_zero()) {
      rep.theta2_well_defined = false;
      rep.witness = "theta2 composed with relator row " + std::to_string(i) +
                    " gives " + acc.str();
    }
  }

  long n = finite_order(h);
  IntMatrix image = expanded_theta2(cs);
  IntMatrix ker_eps(static_cast<int>(n), static_cast<int>(n - 1));
  for (long k = 1; k < n; ++k) {
    ker_eps.at(k, k - 1) = 1;
    ker_eps.at(0, k - 1) = -1;
  }
  rep.im_theta2_equals_ker_eps = sublattice_equal(image, ker_eps);
  if (!rep.im_theta2_equals_ker_eps && rep.witness.empty())
    rep.witness = "im(theta2) differs from the augmentation kernel";

  rep.eps_surjective = true;  // eps(1) = 1

  rep.rab_crowell = rab_via_crowell(cs);
  rep.rab_schreier = subgroup_abelianization(cs.alexander.source, cs.hom);
  rep.rab_matches_rs_oracle = rep.rab_crowell == rep.rab_schreier;
  if (!rep.rab_matches_rs_oracle && rep.witness.empty())
    rep.witness = "crowell " + rep.rab_crowell.str() + " vs rewriting " +
                  rep.rab_schreier.str();
  return rep;
}

int FiniteGroupTable::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (mul(a, b) == 0) return b;
  throw std::invalid_argument("element without inverse");
}

void FiniteGroupTable::validate() const {
  if (order <= 0 || table.size() != static_cast<size_t>(order))
    throw std::invalid_argument("bad table shape");
  for (const auto& row : table) {
    if (row.size() != static_cast<size_t>(order))
      throw std::invalid_argument("bad table shape");
    for (int x : row)
      if (x < 0 || x >= order) throw std::invalid_argument("entry out of range");
  }
  for (int a = 0; a < order; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw std::invalid_argument("element 0 is not the identity");
  for (int a = 0; a < order; ++a) inverse(a);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("table is not associative");
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  FiniteGroupTable t;
  t.order = n;
  t.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t.table[a][b] = (a + b) % n;
    t.names.push_back(a == 0 ? "e" : "c^" + std::to_string(a));
  }
  return t;
}

FiniteGroupTable FiniteGroupTable::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  FiniteGroupTable t;
  t.order = 6;
  t.table.assign(6, std::vector<int>(6));
  auto index_of = [&](const std::array<int, 3>& q) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    throw std::logic_error("permutation not found");
  };
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> q;
      for (int x = 0; x < 3; ++x) q[x] = perms[a][perms[b][x]];
      t.table[a][b] = index_of(q);
    }
    t.names.push_back(std::to_string(perms[a][0]) +
                      std::to_string(perms[a][1]) +
                      std::to_string(perms[a][2]));
  }
  return t;
}

FiniteGroupTable FiniteGroupTable::dihedral4() {
  // elements r^i s^j, index = i + 4j; s r = r^-1 s
  FiniteGroupTable t;
  t.order = 8;
  t.table.assign(8, std::vector<int>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) {
      int a = i + 4 * j;
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int b = i2 + 4 * j2;
          int ri = ((j ? i - i2 : i + i2) % 4 + 4) % 4;
          t.table[a][b] = ri + 4 * (j ^ j2);
        }
    }
  t.names.resize(8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      t.names[i + 4 * j] = "r^" + std::to_string(i) + (j ? " s" : "");
  return t;
}

FiniteGroupTable FiniteGroupTable::quaternion8() {
  // axes 0..3 = 1, i, j, k; element index = 2*axis + sign
  static const int axis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {
      {0, 0, 0, 0},   // 1 * x
      {0, 1, 0, 1},   // i*1=i, i*i=-1, i*j=k, i*k=-j
      {0, 1, 1, 0},   // j*1=j, j*i=-k, j*j=-1, j*k=i
      {0, 0, 1, 1}};  // k*1=k, k*i=j, k*j=-i, k*k=-1
  FiniteGroupTable t;
  t.order = 8;
  t.table.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int aa = a / 2, sa = a % 2, ab = b / 2, sb = b % 2;
      int c = axis[aa][ab];
      int sc = (sa + sb + sgn[aa][ab]) % 2;
      t.table[a][b] = 2 * c + sc;
    }
  static const char* base[4] = {"1", "i", "j", "k"};
  for (int a = 0; a < 8; ++a)
    t.names.push_back(std::string(a % 2 ? "-" : "") + base[a / 2]);
  return t;
}

bool table_satisfies(const FiniteGroupTable& t, const GroupPresentation& p,
                     const std::vector<int>& gen_elems) {
  if (gen_elems.size() != static_cast<size_t>(p.num_generators))
    throw std::invalid_argument("one table element per generator required");
  for (const auto& rel : p.relators) {
    int acc = 0;
    for (const auto& s : rel.syllables()) {
      int g = gen_elems[s.gen - 1];
      if (s.exp < 0) g = t.inverse(g);
      long reps = s.exp < 0 ? -s.exp : s.exp;
      for (long k = 0; k < reps; ++k) acc = t.mul(acc, g);
    }
    if (acc != 0) return false;
  }
  return true;
}

AbelianGroup bimodule_oracle(const FiniteGroupTable& t,
                             const std::vector<AbelianElement>& psi,
                             const AbelianGroup& h) {
  if (psi.size() != static_cast<size_t>(t.order))
    throw std::invalid_argument("one image per table element required");
  if (!ab_is_zero(psi[0]))
    throw std::invalid_argument("identity must map to zero");
  for (int a = 0; a < t.order; ++a)
    for (int b = 0; b < t.order; ++b)
      if (psi[t.mul(a, b)] != ab_add(h, psi[a], psi[b]))
        throw std::invalid_argument("psi is not a homomorphism");

  AlgebraMatrix m(h, t.order * t.order, t.order);
  AbelianElement zero = ab_zero(h);
  for (int a = 0; a < t.order; ++a)
    for (int b = 0; b < t.order; ++b) {
      int row = a * t.order + b;
      m.at(row, t.mul(a, b)).add_term(zero, 1);
      m.at(row, a).add_term(zero, -1);
      m.at(row, b).add_term(psi[a], -1);
    }
  return coker_invariants(regular_expand(m.transposed()));
}

C1InducedMap c1_induced_map(const GroupPresentation& a, const AbelianHom& psi_a,
                            const GroupPresentation& b, const AbelianHom& psi_b,
                            const std::vector<Word>& f_g,
                            const AbelianGroupHom& f_h) {
  if (f_g.size() != static_cast<size_t>(a.num_generators))
    throw std::invalid_argument("one word per source generator required");
  if (f_h.source != psi_a.target || f_h.target != psi_b.target)
    throw std::invalid_argument("coefficient map endpoints do not match");
  for (int j = 0; j < a.num_generators; ++j) {
    if (f_g[j].max_generator() > b.num_generators)
      throw std::invalid_argument("image word uses an unknown generator");
    if (f_h.apply(psi_a.images[j]) != psi_b.word_image(f_g[j]))
      throw std::invalid_argument(
          "generator images do not commute with the coefficient map");
  }
  C1InducedMap m{AlgebraMatrix(psi_b.target, a.num_generators,
                               b.num_generators),
                 f_h};
  for (int j = 0; j < a.num_generators; ++j)
    for (int k = 1; k <= b.num_generators; ++k)
      m.matrix.at(j, k - 1) =
          push_to_group_algebra(fox_derivative(f_g[j], k), psi_b);
  return m;
}

bool c1_induced_surjective(const C1InducedMap& m,
                           const AlexanderPresentation& ap_b) {
  const AbelianGroup& hb = ap_b.hom.target;
  long nb = finite_order(hb);
  int rb = ap_b.matrix.cols;
  IntMatrix relations = regular_expand(ap_b.matrix.transposed());

  std::vector<std::vector<Int>> image_cols;
  for (const auto& ha : ab_enumerate(m.f_h.source)) {
    GroupAlgebraElement scale =
        GroupAlgebraElement::monomial(hb, m.f_h.apply(ha));
    for (int j = 0; j < m.matrix.rows; ++j) {
      std::vector<Int> v(static_cast<size_t>(rb) * nb);
      for (int k = 0; k < rb; ++k) {
        GroupAlgebraElement entry = scale * m.matrix.at(j, k);
        for (const auto& [h, c] : entry.terms())
          v[static_cast<size_t>(k) * nb + ab_index(hb, h)] += c;
      }
      image_cols.push_back(std::move(v));
    }
  }
  IntMatrix image =
      IntMatrix::from_columns(static_cast<int>(rb * nb), image_cols);
  return coker_invariants(relations.hcat(image)).is_trivial();
}

ChainValidation validate_chain(const C2Chain& chain) {
  ChainValidation v;
  if (chain.incl.target != chain.proj.source)
    throw std::invalid_argument("chain maps do not compose");
  auto ea = ab_enumerate(chain.incl.source);
  auto eb = ab_enumerate(chain.proj.source);

  v.composite_zero = true;
  v.injective = true;
  std::set<AbelianElement> image;
  for (const auto& a : ea) {
    AbelianElement b = chain.incl.apply(a);
    if (!ab_is_zero(chain.proj.apply(b))) v.composite_zero = false;
    if (ab_is_zero(b) && !ab_is_zero(a)) v.injective = false;
    image.insert(b);
  }
  if (image.size() != ea.size()) v.injective = false;

  std::set<AbelianElement> kernel, proj_image;
  for (const auto& b : eb) {
    if (ab_is_zero(chain.proj.apply(b))) kernel.insert(b);
    proj_image.insert(chain.proj.apply(b));
  }
  v.image_equals_kernel = image == kernel;
  v.surjective =
      proj_image.size() == static_cast<size_t>(finite_order(chain.proj.target));
  return v;
}

C2Report c2_exactness_check(const GroupPresentation& p,
                            const AbelianHom& psi_a, const C2Chain& chain) {
  if (chain.incl.source != psi_a.target)
    throw std::invalid_argument("psi target is not the chain's first group");
  C2Report rep;
  rep.chain = validate_chain(chain);
  if (!rep.chain.valid())
    throw std::invalid_argument("coefficient chain is not short exact");

  std::vector<AbelianElement> imgs_b, imgs_c;
  for (const auto& x : psi_a.images) {
    imgs_b.push_back(chain.incl.apply(x));
    imgs_c.push_back(chain.proj.apply(imgs_b.back()));
  }
  AbelianHom psi_b = validate_hom(p, imgs_b, chain.incl.target);
  AbelianHom psi_c = validate_hom(p, imgs_c, chain.proj.target);

  CrowellSequence cs_b = crowell_sequence(p, psi_b);
  CrowellSequence cs_c = crowell_sequence(p, psi_c);
  int r = p.num_generators;

  IntMatrix lam_b = expanded_relations(cs_b);
  IntMatrix lam_c = expanded_relations(cs_c);
  IntMatrix collapse = collapse_matrix(chain.proj, r);

  rep.exact_at_c = coker_invariants(lam_c.hcat(collapse)).is_trivial();
  if (!rep.exact_at_c) rep.witness = "induced map to the quotient module is not onto";

  std::vector<AbelianElement> gammas;
  for (const auto& g : chain.incl.gen_images)
    if (!ab_is_zero(g)) gammas.push_back(g);
  IntMatrix ideal = translate_columns(chain.incl.target, gammas, r);
  IntMatrix image_side = lam_b.hcat(ideal);
  IntMatrix kernel_side =
      lift_columns(lam_c, chain.proj, r).hcat(ideal).hcat(lam_b);
  rep.exact_at_b = sublattice_equal(image_side, kernel_side);
  if (!rep.exact_at_b && rep.witness.empty())
    rep.witness = "augmentation-ideal image differs from the kernel lattice";
  return rep;
}

SampledKernelReport theta2_between(const CrowellSequence& fine,
                                   const CrowellSequence& coarse,
                                   const AbelianGroupHom& q, int samples,
                                   uint64_t seed, bool corrupt_image) {
  if (fine.alexander.matrix.cols != coarse.alexander.matrix.cols)
    throw std::invalid_argument("generator counts differ");
  if (q.source != fine.hom.target || q.target != coarse.hom.target)
    throw std::invalid_argument("quotient map endpoints do not match");
  int r = fine.alexander.matrix.cols;
  for (int j = 0; j < r; ++j)
    if (q.apply(fine.hom.images[j]) != coarse.hom.images[j])
      throw std::invalid_argument("coefficient maps do not commute");

  IntMatrix lam_c = expanded_relations(coarse);
  IntMatrix claimed = lam_c;
  if (corrupt_image) {
    // negative control: build the claimed preimage from a proper
    // sublattice of the image while the kernel uses the true one
    for (int i = 0; i < claimed.rows(); ++i)
      for (int j = 0; j < claimed.cols(); ++j) claimed.at(i, j) *= 2;
  }
  IntMatrix collapse = collapse_matrix(q, r);
  IntMatrix ideal = translate_columns(q.source, kernel_generators(q), r);
  IntMatrix preimage = lift_columns(claimed, q, r).hcat(ideal);

  SampledKernelReport rep;
  rep.samples = samples;
  rep.surjective = coker_invariants(lam_c.hcat(collapse)).is_trivial();
  if (!rep.surjective) rep.witness = "induced map is not onto";

  LatticeSolver coarse_solver(lam_c, /*membership_only=*/true);
  LatticeSolver preimage_solver(preimage, /*membership_only=*/true);
  std::mt19937_64 rng(seed);

  rep.killed_direction_pass = true;
  for (int t = 0; t < samples; ++t) {
    std::vector<Int> v = random_combination(preimage, rng);
    if (!coarse_solver.contains(collapse.apply(v))) {
      rep.killed_direction_pass = false;
      if (rep.witness.empty())
        rep.witness = "claimed-kernel element survives: " + vec_str(v);
      break;
    }
  }

  IntMatrix kernel_pairs = lattice_kernel(collapse.hcat(lam_c));
  IntMatrix kernel(collapse.cols(), kernel_pairs.cols());
  for (int j = 0; j < kernel_pairs.cols(); ++j)
    for (int i = 0; i < collapse.cols(); ++i)
      kernel.at(i, j) = kernel_pairs.at(i, j);

  rep.membership_direction_pass = true;
  for (int t = 0; t < samples; ++t) {
    std::vector<Int> v = random_combination(kernel, rng);
    if (!preimage_solver.contains(v)) {
      rep.membership_direction_pass = false;
      if (rep.witness.empty())
        rep.witness = "kernel element outside the claimed preimage: " +
                      vec_str(v);
      break;
    }
  }
  return rep;
}

SampledKernelReport phi3_kernel_check(const std::vector<long>& indices,
                                      long top_modulus, const IntMatrix* r0,
                                      int samples, uint64_t seed,
                                      bool corrupt_image) {
  int s = static_cast<int>(indices.size());
  if (s < 2) throw std::invalid_argument("at least two branch indices needed");
  for (long e : indices)
    if (e < 2) throw std::invalid_argument("branch indices must be >= 2");
  long m = top_modulus;
  if (m == 0)
    for (long e : indices) m = std::lcm(m == 0 ? 1L : m, e);

  Word product;
  for (int i = 1; i <= s; ++i) product = product * Word::generator(i);
  GroupPresentation p_top = make_presentation(s, {product});
  std::vector<Word> bot_rels{product};
  for (int i = 1; i <= s; ++i)
    bot_rels.push_back(Word::generator(i, indices[i - 1]));
  GroupPresentation p_bot = make_presentation(s, bot_rels);

  std::vector<std::vector<Int>> top_cols{std::vector<Int>(s, 1)};
  for (int i = 0; i < s; ++i) {
    std::vector<Int> c(s);
    c[i] = m;
    top_cols.push_back(c);
  }
  QuotientPresentation qt = quotient_by(s, IntMatrix::from_columns(s, top_cols));

  std::vector<std::vector<Int>> bot_cols{std::vector<Int>(s, 1)};
  for (int i = 0; i < s; ++i) {
    std::vector<Int> c(s);
    c[i] = indices[i];
    bot_cols.push_back(c);
  }
  IntMatrix bot_mat = IntMatrix::from_columns(s, bot_cols);
  if (r0) {
    if (r0->rows() != s)
      throw std::invalid_argument("extra relation ambient rank mismatch");
    bot_mat = bot_mat.hcat(*r0);
  }
  QuotientPresentation qb = quotient_by(s, bot_mat);

  auto basis_image = [&](const QuotientPresentation& qp, int i) {
    std::vector<Int> e(s);
    e[i] = 1;
    return qp.project(e);
  };
  std::vector<AbelianElement> top_imgs, bot_imgs;
  for (int i = 0; i < s; ++i) {
    top_imgs.push_back(basis_image(qt, i));
    bot_imgs.push_back(basis_image(qb, i));
  }
  AbelianHom psi_top = validate_hom(p_top, top_imgs, qt.group);
  AbelianHom psi_bot = validate_hom(p_bot, bot_imgs, qb.group);

  std::vector<AbelianElement> q_gen_imgs;
  for (int k = 0; k < qt.group.num_components(); ++k) {
    AbelianElement gen = ab_zero(qt.group);
    if (k < qt.group.free_rank)
      gen.free_part[k] = 1;
    else
      gen.torsion_part[k - qt.group.free_rank] = 1;
    q_gen_imgs.push_back(qb.project(qt.lift(gen)));
  }
  AbelianGroupHom q = make_ab_hom(qt.group, qb.group, std::move(q_gen_imgs));

  return theta2_between(crowell_sequence(p_top, psi_top),
                        crowell_sequence(p_bot, psi_bot), q, samples, seed,
                        corrupt_image);
}

std::vector<MiddleExactnessFinding> c1_middle_exactness_search(int trials,
                                                               uint64_t seed) {
  struct ChainSpec {
    AbelianGroup a, b, c;
    std::vector<AbelianElement> incl_imgs, proj_imgs;
  };
  auto z = [](std::vector<Int> t) {
    return AbelianGroup{0, std::move(t)};
  };
  auto elem = [](const AbelianGroup& g, std::vector<Int> t) {
    AbelianElement e;
    e.torsion_part = std::move(t);
    return ab_normalize(g, std::move(e));
  };

  std::vector<C2Chain> chains;
  {
    AbelianGroup a = z({2}), b = z({4}), c = z({2});
    chains.push_back(C2Chain{make_ab_hom(a, b, {elem(b, {2})}),
                             make_ab_hom(b, c, {elem(c, {1})})});
  }
  {
    AbelianGroup a = z({2}), b = z({2, 2}), c = z({2});
    chains.push_back(C2Chain{make_ab_hom(a, b, {elem(b, {1, 0})}),
                             make_ab_hom(b, c, {elem(c, {0}), elem(c, {1})})});
  }
  {
    AbelianGroup a = z({3}), b = z({9}), c = z({3});
    chains.push_back(C2Chain{make_ab_hom(a, b, {elem(b, {3})}),
                             make_ab_hom(b, c, {elem(c, {1})})});
  }
  {
    AbelianGroup a = z({2}), b = z({8}), c = z({4});
    chains.push_back(C2Chain{make_ab_hom(a, b, {elem(b, {4})}),
                             make_ab_hom(b, c, {elem(c, {1})})});
  }

  std::mt19937_64 rng(seed);
  std::vector<MiddleExactnessFinding> findings;
  for (int t = 0; t < trials; ++t) {
    const C2Chain& chain = chains[t % chains.size()];
    int num_gens = 1 + static_cast<int>(t / chains.size()) % 2;
    GroupPresentation p = make_presentation(num_gens, {});

    const AbelianGroup& hb = chain.incl.target;
    long nb_order = finite_order(hb);
    std::uniform_int_distribution<long> pick(0, nb_order - 1);
    std::vector<AbelianElement> imgs_b;
    for (int j = 0; j < num_gens; ++j) imgs_b.push_back(ab_at(hb, pick(rng)));
    AbelianHom psi_b{hb, imgs_b};
    std::vector<AbelianElement> imgs_c;
    for (const auto& x : imgs_b) imgs_c.push_back(chain.proj.apply(x));
    AbelianHom psi_c{chain.proj.target, imgs_c};

    CrowellSequence cs_b = crowell_sequence(p, psi_b);
    CrowellSequence cs_c = crowell_sequence(p, psi_c);
    int r = num_gens;
    IntMatrix lam_b = expanded_relations(cs_b);
    IntMatrix lam_c = expanded_relations(cs_c);

    // set-theoretic image of the submodule map: translates of the module
    // basis by elements of the embedded subgroup, no Z[H_B]-span taken
    std::vector<std::vector<Int>> set_cols;
    long nb = finite_order(hb);
    for (const auto& ha : ab_enumerate(chain.incl.source)) {
      AbelianElement g = chain.incl.apply(ha);
      for (int j = 0; j < r; ++j) {
        std::vector<Int> v(static_cast<size_t>(r) * nb);
        v[static_cast<size_t>(j) * nb + ab_index(hb, g)] = 1;
        set_cols.push_back(std::move(v));
      }
    }
    IntMatrix set_image =
        lam_b.hcat(IntMatrix::from_columns(static_cast<int>(r * nb), set_cols));

    std::vector<AbelianElement> gammas;
    for (const auto& g : chain.incl.gen_images)
      if (!ab_is_zero(g)) gammas.push_back(g);
    IntMatrix kernel_side = lift_columns(lam_c, chain.proj, r)
                                .hcat(translate_columns(hb, gammas, r))
                                .hcat(lam_b);

    if (!sublattice_equal(set_image, kernel_side)) {
      std::ostringstream os;
      os << "trial " << t << ": free group on " << num_gens
         << " generator(s), chain " << chain.incl.source.str() << " -> "
         << hb.str() << " -> " << chain.proj.target.str()
         << ": set-theoretic image differs from the kernel";
      findings.push_back(MiddleExactnessFinding{os.str()});
    }
  }
  return findings;
}

}  // namespace alexmod
