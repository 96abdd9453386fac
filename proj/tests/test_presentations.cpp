#include "alexmod/presentations.hpp"
#include "doctest.h"

using namespace alexmod;

namespace {

Word gen(int i, long e = 1) { return Word::generator(i, e); }

GroupPresentation trefoil() {
  return make_presentation(
      2, {gen(1) * gen(2) * gen(1) * gen(2, -1) * gen(1, -1) * gen(2, -1)},
      {"x", "y"});
}

GroupPresentation gamma(std::vector<long> idx) {
  int s = static_cast<int>(idx.size());
  Word prod;
  for (int i = 1; i <= s; ++i) prod = prod * gen(i);
  std::vector<Word> rels{prod};
  for (int i = 1; i <= s; ++i) rels.push_back(gen(i, idx[i - 1]));
  return make_presentation(s, std::move(rels));
}

}  // namespace

TEST_CASE("abelianization examples") {
  auto [g1, p1] = abelianization(trefoil());
  CHECK(g1 == AbelianGroup{1, {}});
  CHECK(p1.images[0] == p1.images[1]);
  CHECK(!ab_is_zero(p1.images[0]));

  auto [g2, p2] = abelianization(make_presentation(1, {gen(1, 5)}));
  CHECK(g2 == AbelianGroup{0, {5}});

  auto [g3, p3] = abelianization(make_presentation(3, {}));
  CHECK(g3 == AbelianGroup{3, {}});
}

TEST_CASE("hom validation") {
  AbelianGroup z2{0, {2}};
  AbelianElement one{{}, {1}};

  CHECK_THROWS_AS(
      validate_hom(gamma({2, 2, 2}), {one, one, one}, z2),
      RelatorNotKilled);
  CHECK_NOTHROW(validate_hom(gamma({2, 2, 2, 2}), {one, one, one, one}, z2));

  AbelianGroup z{1, {}};
  AbelianElement t{{1}, {}};
  CHECK_NOTHROW(validate_hom(trefoil(), {t, t}, z));
  CHECK_THROWS_AS(validate_hom(trefoil(), {t}, z), std::invalid_argument);
}

TEST_CASE("exponent matrix convention") {
  IntMatrix m = exponent_matrix(gamma({2, 3, 4}));
  CHECK(m.rows() == 3);  // generators
  CHECK(m.cols() == 4);  // relators
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 2) == 3);
  CHECK(m.at(2, 3) == 4);
  CHECK(m.at(2, 1) == 0);
}

TEST_CASE("rewriting an index-2 subgroup of the free group") {
  GroupPresentation p = make_presentation(1, {});
  AbelianGroup z2{0, {2}};
  AbelianHom psi = validate_hom(p, {AbelianElement{{}, {1}}}, z2);
  SchreierData d = reidemeister_schreier(p, psi);
  CHECK(d.index == 2);
  CHECK(d.subgroup.num_generators == 1);  // x^2, after pruning
  CHECK(d.subgroup.relators.empty());
  CHECK(subgroup_abelianization(p, psi) == AbelianGroup{1, {}});
}

TEST_CASE("rewriting inside Z/4") {
  GroupPresentation p = make_presentation(1, {gen(1, 4)});
  AbelianGroup z2{0, {2}};
  AbelianHom psi = validate_hom(p, {AbelianElement{{}, {1}}}, z2);
  CHECK(subgroup_abelianization(p, psi) == AbelianGroup{0, {2}});
}

TEST_CASE("rewriting gamma covers matches the genus") {
  AbelianGroup z2{0, {2}};
  AbelianElement one{{}, {1}};
  CHECK(subgroup_abelianization(gamma({2, 2, 2, 2}),
                                validate_hom(gamma({2, 2, 2, 2}),
                                             {one, one, one, one}, z2)) ==
        AbelianGroup{2, {}});
  CHECK(subgroup_abelianization(
            gamma({2, 2, 2, 2, 2, 2}),
            validate_hom(gamma({2, 2, 2, 2, 2, 2}),
                         {one, one, one, one, one, one}, z2)) ==
        AbelianGroup{4, {}});

  AbelianGroup z3{0, {3}};
  AbelianElement u{{}, {1}};
  CHECK(subgroup_abelianization(
            gamma({3, 3, 3}),
            validate_hom(gamma({3, 3, 3}), {u, u, u}, z3)) ==
        AbelianGroup{2, {}});
}

TEST_CASE("schreier bookkeeping") {
  GroupPresentation p = gamma({2, 2, 2, 2});
  AbelianGroup z2{0, {2}};
  AbelianElement one{{}, {1}};
  AbelianHom psi = validate_hom(p, {one, one, one, one}, z2);
  SchreierData d = reidemeister_schreier(p, psi);
  CHECK(d.index == 2);
  // |H| * r Schreier generators before pruning, |H| - 1 tree edges pruned
  int raw = 0, pruned = 0;
  for (const auto& row : d.gen_index)
    for (int g = 1; g <= p.num_generators; ++g) {
      ++raw;
      if (row[g] == 0) ++pruned;
    }
  CHECK(raw == 2 * 4);
  CHECK(pruned == 2 - 1);
  CHECK(d.subgroup.num_generators == raw - pruned);
  CHECK(d.subgroup.relators.size() == psi.target.order() * p.relators.size());
}

TEST_CASE("surjectivity detection") {
  GroupPresentation p = make_presentation(1, {});
  AbelianGroup z4{0, {4}};
  CHECK(hom_surjective(validate_hom(p, {AbelianElement{{}, {1}}}, z4)));
  CHECK_FALSE(hom_surjective(validate_hom(p, {AbelianElement{{}, {2}}}, z4)));
  CHECK_THROWS(reidemeister_schreier(
      p, validate_hom(p, {AbelianElement{{}, {2}}}, z4)));
}
