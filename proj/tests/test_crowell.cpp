#include "alexmod/crowell.hpp"
#include "doctest.h"

using namespace alexmod;

namespace {

Word gen(int i, long e = 1) { return Word::generator(i, e); }

GroupPresentation gamma(std::vector<long> idx) {
  int s = static_cast<int>(idx.size());
  Word prod;
  for (int i = 1; i <= s; ++i) prod = prod * gen(i);
  std::vector<Word> rels{prod};
  for (int i = 1; i <= s; ++i) rels.push_back(gen(i, idx[i - 1]));
  return make_presentation(s, std::move(rels));
}

AbelianHom all_ones_mod2(const GroupPresentation& p) {
  AbelianGroup z2{0, {2}};
  return validate_hom(
      p,
      std::vector<AbelianElement>(p.num_generators, AbelianElement{{}, {1}}),
      z2);
}

AbelianElement canonical_gen(const AbelianGroup& g, int i) {
  AbelianElement e = ab_zero(g);
  if (i < g.free_rank)
    e.free_part[i] = 1;
  else
    e.torsion_part[i - g.free_rank] = 1;
  return e;
}

// Full and collapsed coefficient quotients of Z^s for the gamma groups,
// plus the connecting homomorphism between them.
struct QuotientPair {
  AbelianHom psi_fine, psi_coarse;
  AbelianGroupHom q;
};

QuotientPair gamma_quotients(const GroupPresentation& p,
                             const std::vector<long>& idx) {
  int s = p.num_generators;
  std::vector<std::vector<Int>> fine_cols{std::vector<Int>(s, 1)};
  for (int i = 0; i < s; ++i) {
    std::vector<Int> c(s, 0);
    c[i] = idx[i];
    fine_cols.push_back(c);
  }
  auto coarse_cols = fine_cols;
  for (int i = 1; i < s; ++i) {
    std::vector<Int> c(s, 0);
    c[i] = 1;
    c[0] = -1;
    coarse_cols.push_back(c);
  }
  QuotientPresentation qf =
      quotient_by(s, IntMatrix::from_columns(s, fine_cols));
  QuotientPresentation qc =
      quotient_by(s, IntMatrix::from_columns(s, coarse_cols));

  std::vector<AbelianElement> fine_imgs, coarse_imgs;
  for (int i = 0; i < s; ++i) {
    std::vector<Int> e(s, 0);
    e[i] = 1;
    fine_imgs.push_back(qf.project(e));
    coarse_imgs.push_back(qc.project(e));
  }
  std::vector<AbelianElement> q_imgs;
  for (int i = 0; i < qf.group.num_components(); ++i)
    q_imgs.push_back(qc.project(qf.lift(canonical_gen(qf.group, i))));

  QuotientPair out{validate_hom(p, fine_imgs, qf.group),
                   validate_hom(p, coarse_imgs, qc.group),
                   make_ab_hom(qf.group, qc.group, q_imgs)};
  return out;
}

}  // namespace

TEST_CASE("theta2 sends dx_j to psi(x_j) - 1") {
  GroupPresentation p = gamma({2, 2, 2, 2});
  AbelianHom psi = all_ones_mod2(p);
  CrowellSequence cs = crowell_sequence(p, psi);
  REQUIRE(cs.theta2.rows == 4);
  REQUIRE(cs.theta2.cols == 1);
  AbelianGroup z2{0, {2}};
  GroupAlgebraElement want =
      GroupAlgebraElement::monomial(z2, AbelianElement{{}, {1}}) -
      GroupAlgebraElement::one(z2);
  for (int j = 0; j < 4; ++j) CHECK(cs.theta2.at(j, 0) == want);
}

TEST_CASE("relation-module invariants") {
  GroupPresentation p4 = gamma({2, 2, 2, 2});
  CHECK(rab_via_crowell(crowell_sequence(p4, all_ones_mod2(p4))) ==
        AbelianGroup{2, {}});

  // triangle group onto the klein four group kills the whole module
  GroupPresentation p3 = gamma({2, 2, 2});
  QuotientPair qp = gamma_quotients(p3, {2, 2, 2});
  CHECK(qp.psi_fine.target == AbelianGroup{0, {2, 2}});
  CHECK(rab_via_crowell(crowell_sequence(p3, qp.psi_fine)).is_trivial());
}

TEST_CASE("crowell exactness on the branched corpus") {
  for (std::vector<long> idx :
       {std::vector<long>{2, 2, 2, 2}, {2, 2, 2, 2, 2, 2}, {3, 3, 3}}) {
    GroupPresentation p = gamma(idx);
    QuotientPair qp = gamma_quotients(p, idx);
    for (const AbelianHom* psi : {&qp.psi_fine, &qp.psi_coarse}) {
      ExactnessReport r = check_crowell_exactness(crowell_sequence(p, *psi));
      CAPTURE(r.witness);
      CHECK(r.pass());
      CHECK(r.rab_crowell == r.rab_schreier);
    }
  }
}

TEST_CASE("corrupting theta2 is detected") {
  GroupPresentation p = gamma({2, 2, 2, 2});
  CrowellSequence cs = crowell_sequence(p, all_ones_mod2(p));
  cs.theta2.at(0, 0) = GroupAlgebraElement::zero(cs.hom.target);
  ExactnessReport r = check_crowell_exactness(cs);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("finite group tables validate") {
  for (FiniteGroupTable t :
       {FiniteGroupTable::cyclic(6), FiniteGroupTable::symmetric3(),
        FiniteGroupTable::dihedral4(), FiniteGroupTable::quaternion8()}) {
    CHECK_NOTHROW(t.validate());
    for (int a = 0; a < t.order; ++a)
      CHECK(t.mul(a, t.inverse(a)) == 0);
  }

  FiniteGroupTable bad = FiniteGroupTable::cyclic(3);
  bad.table[1][2] = 1;  // breaks inverses
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("table models of small presentations") {
  GroupPresentation z4 = make_presentation(1, {gen(1, 4)});
  CHECK(table_satisfies(FiniteGroupTable::cyclic(4), z4, {1}));
  CHECK_FALSE(table_satisfies(FiniteGroupTable::cyclic(8), z4, {1}));

  GroupPresentation s3 = make_presentation(
      2, {gen(1, 3), gen(2, 2), gen(1) * gen(2) * gen(1) * gen(2)});
  FiniteGroupTable t = FiniteGroupTable::symmetric3();
  int models = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (table_satisfies(t, s3, {a, b}) && a != 0 && b != 0) ++models;
  CHECK(models > 0);
}

TEST_CASE("bimodule oracle matches the fox-matrix module") {
  AbelianGroup z2{0, {2}};
  AbelianGroup v4{0, {2, 2}};

  SUBCASE("cyclic") {
    std::vector<AbelianElement> psi;
    for (long i = 0; i < 4; ++i) psi.push_back({{}, {i % 2}});
    GroupPresentation p = make_presentation(1, {gen(1, 4)});
    AbelianHom h = validate_hom(p, {AbelianElement{{}, {1}}}, z2);
    CHECK(bimodule_oracle(FiniteGroupTable::cyclic(4), psi, z2) ==
          alexander_invariants(alexander_matrix(p, h)));
  }

  SUBCASE("symmetric, sign character") {
    // lexicographic permutation order: sign = parity of each entry
    std::vector<long> sign{0, 1, 1, 0, 0, 1};
    std::vector<AbelianElement> psi;
    for (long s : sign) psi.push_back({{}, {s}});
    GroupPresentation p = make_presentation(
        2, {gen(1, 3), gen(2, 2), gen(1) * gen(2) * gen(1) * gen(2)});
    AbelianHom h = validate_hom(
        p, {AbelianElement{{}, {0}}, AbelianElement{{}, {1}}}, z2);
    CHECK(bimodule_oracle(FiniteGroupTable::symmetric3(), psi, z2) ==
          alexander_invariants(alexander_matrix(p, h)));
  }

  SUBCASE("dihedral") {
    std::vector<AbelianElement> psi;
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 4; ++i) psi.push_back({{}, {i % 2, j}});
    GroupPresentation p = make_presentation(
        2, {gen(1, 4), gen(2, 2), gen(2) * gen(1) * gen(2) * gen(1)});
    AbelianHom h = validate_hom(
        p, {AbelianElement{{}, {1, 0}}, AbelianElement{{}, {0, 1}}}, v4);
    CHECK(bimodule_oracle(FiniteGroupTable::dihedral4(), psi, v4) ==
          alexander_invariants(alexander_matrix(p, h)));
  }

  SUBCASE("quaternion") {
    static const long coord[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::vector<AbelianElement> psi;
    for (int a = 0; a < 8; ++a)
      psi.push_back({{}, {coord[a / 2][0], coord[a / 2][1]}});
    GroupPresentation p = make_presentation(
        2, {gen(1, 4), gen(1, 2) * gen(2, -2),
            gen(2, -1) * gen(1) * gen(2) * gen(1)});
    AbelianHom h = validate_hom(
        p, {AbelianElement{{}, {1, 0}}, AbelianElement{{}, {0, 1}}}, v4);
    CHECK(bimodule_oracle(FiniteGroupTable::quaternion8(), psi, v4) ==
          alexander_invariants(alexander_matrix(p, h)));
  }
}

TEST_CASE("induced module maps") {
  GroupPresentation p = gamma({2, 2, 2, 2});
  AbelianHom psi = all_ones_mod2(p);
  AbelianGroup z2{0, {2}};

  SUBCASE("identity") {
    AbelianGroupHom id = make_ab_hom(z2, z2, {AbelianElement{{}, {1}}});
    C1InducedMap m = c1_induced_map(p, psi, p, psi,
                                    {gen(1), gen(2), gen(3), gen(4)}, id);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j)
          CHECK(m.matrix.at(i, j) == GroupAlgebraElement::one(z2));
        else
          CHECK(m.matrix.at(i, j).is_zero());
      }
    CHECK(c1_induced_surjective(m, alexander_matrix(p, psi)));
  }

  SUBCASE("coefficient collapse") {
    AbelianHom triv = validate_hom(
        p, std::vector<AbelianElement>(4, AbelianElement{}), AbelianGroup{});
    AbelianGroupHom eps = make_ab_hom(z2, AbelianGroup{}, {AbelianElement{}});
    C1InducedMap m = c1_induced_map(p, psi, p, triv,
                                    {gen(1), gen(2), gen(3), gen(4)}, eps);
    CHECK(c1_induced_surjective(m, alexander_matrix(p, triv)));
  }

  SUBCASE("incompatible generator images are rejected") {
    GroupPresentation f1 = make_presentation(1, {});
    AbelianHom a = validate_hom(f1, {AbelianElement{{}, {1}}}, z2);
    AbelianHom b = validate_hom(f1, {AbelianElement{{}, {0}}}, z2);
    AbelianGroupHom id = make_ab_hom(z2, z2, {AbelianElement{{}, {1}}});
    CHECK_THROWS_AS(c1_induced_map(f1, a, f1, b, {gen(1)}, id),
                    std::invalid_argument);
  }
}

TEST_CASE("coefficient chain validation") {
  AbelianGroup z2{0, {2}}, z4{0, {4}}, v4{0, {2, 2}};

  C2Chain good{make_ab_hom(z2, z4, {AbelianElement{{}, {2}}}),
               make_ab_hom(z4, z2, {AbelianElement{{}, {1}}})};
  CHECK(validate_chain(good).valid());

  C2Chain diag{
      make_ab_hom(z2, v4, {AbelianElement{{}, {1, 1}}}),
      make_ab_hom(v4, z2,
                  {AbelianElement{{}, {1}}, AbelianElement{{}, {1}}})};
  CHECK(validate_chain(diag).valid());

  C2Chain broken{
      make_ab_hom(z2, v4, {AbelianElement{{}, {1, 1}}}),
      make_ab_hom(v4, z2,
                  {AbelianElement{{}, {1}}, AbelianElement{{}, {0}}})};
  ChainValidation v = validate_chain(broken);
  CHECK_FALSE(v.valid());
  CHECK_FALSE(v.composite_zero);
}

TEST_CASE("right exactness of the coefficient change") {
  GroupPresentation p = gamma({2, 2, 2, 2});
  AbelianGroup z2{0, {2}}, z4{0, {4}}, v4{0, {2, 2}};
  AbelianHom psi = all_ones_mod2(p);

  SUBCASE("cyclic extension") {
    C2Chain chain{make_ab_hom(z2, z4, {AbelianElement{{}, {2}}}),
                  make_ab_hom(z4, z2, {AbelianElement{{}, {1}}})};
    C2Report r = c2_exactness_check(p, psi, chain);
    CAPTURE(r.witness);
    CHECK(r.pass());
  }

  SUBCASE("diagonal in the klein four group") {
    C2Chain chain{
        make_ab_hom(z2, v4, {AbelianElement{{}, {1, 1}}}),
        make_ab_hom(v4, z2,
                    {AbelianElement{{}, {1}}, AbelianElement{{}, {1}}})};
    C2Report r = c2_exactness_check(p, psi, chain);
    CAPTURE(r.witness);
    CHECK(r.pass());
  }

  SUBCASE("degenerate ends") {
    AbelianHom triv = validate_hom(
        p, std::vector<AbelianElement>(4, AbelianElement{}), AbelianGroup{});
    C2Chain left{make_ab_hom(AbelianGroup{}, z2, {}),
                 make_ab_hom(z2, z2, {AbelianElement{{}, {1}}})};
    CHECK(c2_exactness_check(p, triv, left).pass());

    C2Chain right{make_ab_hom(z2, z2, {AbelianElement{{}, {1}}}),
                  make_ab_hom(z2, AbelianGroup{}, {AbelianElement{}})};
    CHECK(c2_exactness_check(p, psi, right).pass());
  }

  SUBCASE("invalid chains are rejected") {
    C2Chain broken{
        make_ab_hom(z2, v4, {AbelianElement{{}, {1, 1}}}),
        make_ab_hom(v4, z2,
                    {AbelianElement{{}, {1}}, AbelianElement{{}, {0}}})};
    CHECK_THROWS_AS(c2_exactness_check(p, psi, broken),
                    std::invalid_argument);
  }
}

TEST_CASE("sampled kernel formula for coefficient quotients") {
  GroupPresentation p = gamma({2, 2, 2, 2});
  QuotientPair qp = gamma_quotients(p, {2, 2, 2, 2});
  CrowellSequence fine = crowell_sequence(p, qp.psi_fine);
  CrowellSequence coarse = crowell_sequence(p, qp.psi_coarse);

  SampledKernelReport ok = theta2_between(fine, coarse, qp.q, 30, 1);
  CAPTURE(ok.witness);
  CHECK(ok.pass());
  CHECK(ok.samples == 30);

  SampledKernelReport bad = theta2_between(fine, coarse, qp.q, 30, 1, true);
  CHECK_FALSE(bad.membership_direction_pass);

  // identity quotient: the formula collapses to Im Q = Im Q
  AbelianGroupHom id = make_ab_hom(
      qp.psi_fine.target, qp.psi_fine.target,
      [&] {
        std::vector<AbelianElement> v;
        for (int i = 0; i < qp.psi_fine.target.num_components(); ++i)
          v.push_back(canonical_gen(qp.psi_fine.target, i));
        return v;
      }());
  CHECK(theta2_between(fine, fine, id, 10, 2).pass());
}

TEST_CASE("free-to-quotient kernel formula") {
  SampledKernelReport r = phi3_kernel_check({2, 2, 2}, 0, nullptr, 25, 3);
  CAPTURE(r.witness);
  CHECK(r.pass());

  SampledKernelReport bad =
      phi3_kernel_check({2, 2, 2}, 0, nullptr, 25, 3, true);
  CHECK_FALSE(bad.pass());

  CHECK(phi3_kernel_check({2, 3, 6}, 0, nullptr, 15, 4).pass());
}

TEST_CASE("middle exactness fails for induced chains") {
  auto findings = c1_middle_exactness_search(4, 5);
  CHECK_FALSE(findings.empty());
}
