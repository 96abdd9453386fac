#include "alexmod/coverings.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace alexmod;

namespace {

// extra columns e_i - e_1 collapse the deck group onto the diagonal Z/e
IntMatrix diagonal_collapse(int s) {
  std::vector<std::vector<Int>> cols;
  for (int i = 1; i < s; ++i) {
    std::vector<Int> c(s, 0);
    c[0] = -1;
    c[i] = 1;
    cols.push_back(c);
  }
  return IntMatrix::from_columns(s, cols);
}

void check_against_cw_oracle(const BranchedCover& cover) {
  CoverReport r = cover_homology(cover);
  testing::SurfaceHomology oracle = testing::cw_cover_homology(cover);
  CHECK(r.homology == oracle.h1);
  CHECK(r.homology == AbelianGroup{static_cast<int>(2 * r.genus), {}});
  REQUIRE(r.h_action.size() == oracle.traces.size());
  for (size_t i = 0; i < r.h_action.size(); ++i) {
    Int tr = 0;
    for (int d = 0; d < r.h_action[i].rows(); ++d)
      tr += r.h_action[i].at(d, d);
    CHECK(tr == oracle.traces[i]);
  }
}

}  // namespace

TEST_CASE("orbifold presentations") {
  GroupPresentation p = gamma_presentation({2, 3, 7});
  CHECK(p.num_generators == 3);
  REQUIRE(p.relators.size() == 4);
  CHECK(p.relators[0] ==
        Word::generator(1) * Word::generator(2) * Word::generator(3));
  CHECK(p.relators[2] == Word::generator(2, 3));

  CHECK_THROWS_AS(gamma_presentation({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(gamma_presentation({2, 3, 1}), std::invalid_argument);
}

TEST_CASE("default covers use the full orbifold homology") {
  BranchedCover c = make_cover({2, 2, 2, 2});
  CHECK(c.psi.target == AbelianGroup{0, {2, 2, 2}});
  CHECK(hom_surjective(c.psi));
  CHECK(validate_ramification(c).empty());

  BranchedCover tri = make_cover({3, 3, 3});
  CHECK(tri.psi.target == AbelianGroup{0, {3, 3}});
}

TEST_CASE("ramification warnings") {
  // collapsing (4,4,2) onto the diagonal Z/2 leaves the first two points
  // only partially ramified
  std::vector<std::vector<Int>> cols;
  std::vector<Int> c1{2, 0, 0}, c2{0, 2, 0};
  cols.push_back(c1);
  cols.push_back(c2);
  IntMatrix extra = IntMatrix::from_columns(3, cols);
  BranchedCover c = make_cover({4, 4, 2}, &extra);
  CHECK(c.psi.target == AbelianGroup{0, {2, 2}});
  CHECK(validate_ramification(c).size() == 2);
}

TEST_CASE("riemann-hurwitz bookkeeping") {
  CHECK(riemann_hurwitz_genus(2, {2, 2, 2, 2, 2, 2}) == 2);
  CHECK(riemann_hurwitz_genus(2, {2, 2, 2, 2}) == 1);
  CHECK(riemann_hurwitz_genus(3, {3, 3, 3}) == 1);
  CHECK(riemann_hurwitz_genus(1, {1, 1}) == 0);
  CHECK(riemann_hurwitz_genus(8, {2, 2, 2, 2}) == 1);
  CHECK(riemann_hurwitz_genus(32, {2, 2, 2, 2, 2, 2}) == 17);
  CHECK_THROWS_AS(riemann_hurwitz_genus(2, {3}), NonIntegralGenus);
  CHECK_THROWS_AS(riemann_hurwitz_genus(2, {2}), NonIntegralGenus);
}

TEST_CASE("diagonal double covers match the cw oracle") {
  BranchedCover c4 = make_cover({2, 2, 2, 2}, nullptr);
  IntMatrix extra4 = diagonal_collapse(4);
  BranchedCover d4 = make_cover({2, 2, 2, 2}, &extra4);
  CoverReport r = cover_homology(d4);
  CHECK(r.deck_group == AbelianGroup{0, {2}});
  CHECK(r.genus == 1);
  check_against_cw_oracle(d4);
  // hyperelliptic involution acts by -1
  REQUIRE(r.h_action.size() == 1);
  CHECK(r.h_action[0] == IntMatrix(2, 2, {-1, 0, 0, -1}));
}

TEST_CASE("the genus-two hyperelliptic cover") {
  IntMatrix extra = diagonal_collapse(6);
  BranchedCover c = make_cover({2, 2, 2, 2, 2, 2}, &extra);
  CoverReport r = cover_homology(c);
  CHECK(r.genus == 2);
  CHECK(r.homology == AbelianGroup{4, {}});
  REQUIRE(r.h_action.size() == 1);
  Int tr = 0;
  for (int d = 0; d < 4; ++d) tr += r.h_action[0].at(d, d);
  CHECK(tr == -4);
  check_against_cw_oracle(c);
}

TEST_CASE("cyclic triple cover of the thrice-marked sphere") {
  IntMatrix extra = diagonal_collapse(3);
  BranchedCover c = make_cover({3, 3, 3}, &extra);
  CoverReport r = cover_homology(c);
  CHECK(r.deck_group == AbelianGroup{0, {3}});
  CHECK(r.genus == 1);
  check_against_cw_oracle(c);
  // order-3 symmetry of the hexagonal torus: trace -1
  Int tr = r.h_action[0].at(0, 0) + r.h_action[0].at(1, 1);
  CHECK(tr == -1);
}

TEST_CASE("larger abelian covers") {
  BranchedCover klein = make_cover({2, 2, 2});
  CoverReport r = cover_homology(klein);
  CHECK(r.deck_group == AbelianGroup{0, {2, 2}});
  CHECK(r.genus == 0);
  check_against_cw_oracle(klein);

  BranchedCover full4 = make_cover({2, 2, 2, 2});
  CoverReport r4 = cover_homology(full4);
  CHECK(r4.deck_group == AbelianGroup{0, {2, 2, 2}});
  CHECK(r4.genus == 1);
  check_against_cw_oracle(full4);

  BranchedCover full6 = make_cover({2, 2, 2, 2, 2, 2});
  CoverReport r6 = cover_homology(full6);
  CHECK(r6.deck_group == AbelianGroup{0, {2, 2, 2, 2, 2}});
  CHECK(r6.genus == 17);
}

TEST_CASE("deck action is an action") {
  IntMatrix extra = diagonal_collapse(6);
  for (const BranchedCover& c :
       {make_cover({2, 2, 2, 2}), make_cover({2, 2, 2, 2, 2, 2}, &extra),
        make_cover({3, 3, 3})}) {
    CoverReport r = cover_homology(c);
    const AbelianGroup& h = r.deck_group;
    // each generator has the right order
    for (size_t i = 0; i < r.h_action.size(); ++i) {
      long ord = h.torsion[i].get_si();
      IntMatrix acc = IntMatrix::identity(r.h_action[i].rows());
      for (long k = 0; k < ord; ++k) acc = acc * r.h_action[i];
      CHECK(acc == IntMatrix::identity(acc.rows()));
    }
    // generators commute (abelian deck group)
    for (size_t i = 0; i < r.h_action.size(); ++i)
      for (size_t j = i + 1; j < r.h_action.size(); ++j)
        CHECK(r.h_action[i] * r.h_action[j] ==
              r.h_action[j] * r.h_action[i]);
    // character of the trivial representation: the trace sum over H is
    // |H| * dim of the invariant subspace, so divisible by |H|
    Int total = 0;
    for (const AbelianElement& e : ab_enumerate(h)) {
      IntMatrix m = IntMatrix::identity(2 * static_cast<int>(r.genus));
      for (size_t i = 0; i < r.h_action.size(); ++i) {
        long exp = e.torsion_part[i].get_si();
        for (long k = 0; k < exp; ++k) m = m * r.h_action[i];
      }
      for (int d = 0; d < m.rows(); ++d) total += m.at(d, d);
    }
    CHECK(total % h.order() == 0);
    CHECK(total >= 0);
  }
}
