#include <gtest/gtest.h>

#include "mockhyp/catalog.hpp"
#include "mockhyp/kloop.hpp"
#include "mockhyp/quasidirect.hpp"
#include "oracles.hpp"

using namespace mockhyp;

namespace {

oracle::Table raw_table(const FiniteGroup& g) {
  oracle::Table t(g.order(), oracle::Set(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

KLoop whole_loop(const FiniteGroup& g) { return KLoop::from_twisted(g, whole_group(g).members()); }

FiniteGroup f21() { return frobenius_semidirect(7, 3).group(); }

}  // namespace

TEST(Twisted, Recognition) {
  FiniteGroup c7 = cyclic_group(7);
  EXPECT_TRUE(is_twisted_subgroup(c7, whole_group(c7).members()));
  EXPECT_FALSE(is_twisted_subgroup(c7, {0, 1}));
  for (const std::string& name : default_corpus()) {
    FiniteGroup g = catalog_entry(name).group;
    const ElemSet q = involutions(g);
    EXPECT_TRUE(is_twisted_subgroup(g, left_translate(g, q.front(), q))) << name;
  }
}

TEST(Twisted, RejectsBadCarriers) {
  FiniteGroup c7 = cyclic_group(7);
  EXPECT_THROW(KLoop::from_twisted(c7, {0, 1}), Error);
  FiniteGroup s3 = catalog_entry("cyclic_ext(3)").group;
  EXPECT_THROW(KLoop::from_twisted(s3, whole_group(s3).members()), Error);
}

TEST(Loop, AbelianCarrierIsGroupMultiplication) {
  for (FiniteGroup g : {cyclic_group(7), catalog_entry("elemab_ext(3,2)").group}) {
    // For the extension use the normal abelian half.
    ElemSet carrier;
    if (g.order() == 7) {
      carrier = whole_group(g).members();
    } else {
      for (Elem x = 0; x < 9; ++x) carrier.push_back(x);
    }
    KLoop loop = KLoop::from_twisted(g, carrier);
    for (Pos a = 0; a < loop.size(); ++a)
      for (Pos b = 0; b < loop.size(); ++b)
        EXPECT_EQ(loop.carrier()[loop.op(a, b)], g.mul(loop.carrier()[a], loop.carrier()[b]));
    EXPECT_EQ(precession_group(loop).size(), 1u);
  }
}

TEST(Loop, MatchesOracleAndIsNonassociative) {
  FiniteGroup g = f21();
  KLoop loop = whole_loop(g);
  const oracle::Table expected = oracle::twisted_loop(raw_table(g), whole_group(g).members());
  oracle::Table actual(loop.size(), oracle::Set(loop.size()));
  for (Pos a = 0; a < loop.size(); ++a)
    for (Pos b = 0; b < loop.size(); ++b) actual[a][b] = loop.op(a, b);
  EXPECT_EQ(actual, expected);
  EXPECT_FALSE(oracle::associative(actual));
  EXPECT_TRUE(oracle::bol(actual));
}

TEST(Loop, AxiomsOnCatalogLoops) {
  for (const FiniteGroup& g : {cyclic_group(7), f21(), frobenius_semidirect(13, 3).group()}) {
    AxiomReport r = verify_kloop_axioms(whole_loop(g));
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.counts().at("loop_order"), static_cast<std::int64_t>(g.order()));
  }
}

TEST(Loop, CorruptedTableFails) {
  auto table = whole_loop(f21()).table();
  std::swap(table[3][4], table[3][5]);
  KLoop bad = KLoop::from_table(table);
  AxiomReport r = verify_kloop_axioms(bad);
  EXPECT_FALSE(r.all_pass());
  EXPECT_THROW(inversion_automorphism(bad), Error);
}

TEST(Loop, FromTableRejectsNonLatin) {
  EXPECT_THROW(KLoop::from_table({{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(KLoop::from_table({{1, 0}, {0, 1}}), Error);
}

TEST(Precession, TrivialOnAbelianAndInversePairs) {
  KLoop c7 = whole_loop(cyclic_group(7));
  for (Pos a = 0; a < 7; ++a)
    for (Pos b = 0; b < 7; ++b) EXPECT_TRUE(precession(c7, a, b).is_identity());
  KLoop f = whole_loop(f21());
  for (Pos a = 0; a < f.size(); ++a) EXPECT_TRUE(precession(f, a, f.inv(a)).is_identity());
}

TEST(Precession, TwoFormulasAgree) {
  FiniteGroup g = f21();
  KLoop loop = whole_loop(g);
  bool some_nontrivial = false;
  for (Pos a = 0; a < loop.size(); ++a) {
    for (Pos b = 0; b < loop.size(); ++b) {
      const Perm by_translations = precession_by_translations(loop, a, b);
      EXPECT_EQ(by_translations, precession_by_conjugation(loop, a, b));
      Perm id(loop.size());
      for (Pos x = 0; x < loop.size(); ++x) id[x] = x;
      some_nontrivial = some_nontrivial || by_translations != id;
    }
  }
  EXPECT_TRUE(some_nontrivial);
}

TEST(Precession, IdentitiesWithConjugations) {
  FiniteGroup g = f21();
  KLoop loop = whole_loop(g);
  AxiomReport r = verify_precession_identities(loop, conjugations_with_inversion(g, loop));
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.counts().at("pairs"), 441);
  EXPECT_TRUE(verify_precession_identities(whole_loop(cyclic_group(7)), {}).all_pass());
}

TEST(Precession, GroupOrderMatchesClosureOracle) {
  KLoop loop = whole_loop(f21());
  std::vector<std::vector<std::uint32_t>> gens;
  for (Pos a = 0; a < loop.size(); ++a)
    for (Pos b = 0; b < loop.size(); ++b) gens.push_back(precession_by_translations(loop, a, b));
  const auto closure = oracle::perm_closure(gens);
  EXPECT_EQ(precession_group(loop).size(), closure.size());
  EXPECT_GT(closure.size(), 1u);

  FiniteGroup s3 = catalog_entry("cyclic_ext(3)").group;
  const ElemSet q = involutions(s3);
  EXPECT_EQ(precession_group(KLoop::from_twisted(s3, left_translate(s3, q.front(), q))).size(), 1u);
}

TEST(Automorphisms, VerifiedOnConstruction) {
  KLoop loop = whole_loop(cyclic_group(7));
  Perm swap = {0, 2, 1, 3, 4, 5, 6};
  EXPECT_THROW(Automorphism(loop, swap), Error);
  Automorphism eps = inversion_automorphism(loop);
  for (Pos k = 0; k < 7; ++k) EXPECT_EQ(eps(k), (7 - k) % 7);
  EXPECT_TRUE(eps.compose(eps).is_identity());
}

TEST(Automorphisms, ViolationWitness) {
  KLoop loop = whole_loop(cyclic_group(7));
  EXPECT_TRUE(automorphism_violation(loop, {0, 2, 1, 3, 4, 5, 6}).has_value());
  EXPECT_FALSE(automorphism_violation(loop, {0, 2, 4, 6, 1, 3, 5}).has_value());
}
