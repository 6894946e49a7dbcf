#include <gtest/gtest.h>

#include "mockhyp/catalog.hpp"
#include "mockhyp/frobenius.hpp"
#include "oracles.hpp"

using namespace mockhyp;

namespace {

oracle::Table raw_table(const FiniteGroup& g) {
  oracle::Table t(g.order(), oracle::Set(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

FrobeniusPair pair_of(const std::string& name) {
  CatalogEntry e = catalog_entry(name);
  return FrobeniusPair(e.group, *e.complement);
}

const Extension& f21_extension() {
  static const Extension ext = extend_degenerate(frobenius_semidirect(7, 3));
  return ext;
}

}  // namespace

TEST(Predicates, Frobenius) {
  FrobeniusPair f = frobenius_semidirect(7, 3);
  EXPECT_TRUE(is_frobenius(f.group(), f.complement()));
  EXPECT_FALSE(is_full(f));
  EXPECT_EQ(f.conjugate_union().size(), 15u);
  EXPECT_EQ(f.conjugates().size(), 7u);

  FrobeniusPair s3 = pair_of("cyclic_ext(3)");
  EXPECT_FALSE(is_full(s3));
  EXPECT_EQ(s3.conjugate_union().size(), 4u);

  FiniteGroup g = f.group();
  EXPECT_FALSE(is_frobenius(g, whole_group(g)));
  EXPECT_THROW(FrobeniusPair(g, whole_group(g).members()), Error);
}

TEST(Kernel, Orders) {
  EXPECT_EQ(frobenius_kernel(frobenius_semidirect(7, 3)).order(), 7u);
  EXPECT_EQ(frobenius_kernel(pair_of("cyclic_ext(3)")).order(), 3u);
  EXPECT_EQ(frobenius_kernel(pair_of("agl1(5)")).order(), 5u);
  EXPECT_EQ(frobenius_kernel(pair_of("j9")).order(), 9u);
}

TEST(Types, Trichotomy) {
  EXPECT_EQ(classify_type(pair_of("cyclic_ext(3)")), FrobeniusType::Odd);
  EXPECT_EQ(classify_type(frobenius_semidirect(7, 3)), FrobeniusType::Degenerate);
  EXPECT_EQ(classify_type(pair_of("agl1(5)")), FrobeniusType::Odd);
  EXPECT_EQ(type_name(FrobeniusType::Even), "even");
}

TEST(Extension, PreconditionErrors) {
  // F5 x| C4 has even order.
  try {
    extend_degenerate(pair_of("agl1(5)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUniquely2Div);
  }
  try {
    FrobeniusPair(cyclic_group(3), {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFrobenius);
  }
}

TEST(Extension, F21OrbitMatchesOracle) {
  const Extension& ext = f21_extension();
  const FiniteGroup& g = ext.product.group();
  EXPECT_EQ(g.order(), 882u);
  EXPECT_EQ(ext.geometry.q().size(), 21u);
  const oracle::Table t = raw_table(g);
  const auto orbit = oracle::conjugation_orbit(t, ext.base_line);
  EXPECT_EQ(orbit.size(), 49u);
  EXPECT_EQ(std::set<Line>(ext.geometry.lines().begin(), ext.geometry.lines().end()), orbit);
  EXPECT_EQ(oracle::normalizer_order(t, ext.base_line), 18u);
  EXPECT_EQ(g.order() / oracle::normalizer_order(t, ext.base_line), orbit.size());
  for (const Line& l : ext.geometry.lines()) EXPECT_EQ(l.size(), 3u);
  EXPECT_EQ(ext.inner_orbit, 7u);
}

TEST(Extension, F21LinesAreTheLineFormula) {
  const Extension& ext = f21_extension();
  const oracle::Table t = raw_table(ext.product.group());
  const ElemSet& q = ext.geometry.q();
  std::size_t on_lines = 0;
  for (Elem i : q) {
    for (Elem j : q) {
      if (i == j) continue;
      if (ext.geometry.has_line(oracle::line(t, q, i, j))) ++on_lines;
    }
  }
  EXPECT_EQ(on_lines, 294u);
}

TEST(Extension, F21Report) {
  AxiomReport r = verify_frobenius_mhrs(f21_extension());
  for (const Check& c : r.checks()) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  EXPECT_EQ(r.counts().at("base_line_normalizer"), 18);
  EXPECT_EQ(r.stats.lines, 49u);
  EXPECT_EQ(r.stats.translations, 99u);
}

TEST(Extension, F39) {
  const Extension ext = extend_degenerate(frobenius_semidirect(13, 3));
  EXPECT_EQ(ext.product.group().order(), 3042u);
  EXPECT_EQ(ext.geometry.q().size(), 39u);
  EXPECT_EQ(ext.geometry.lines().size(), 169u);
  EXPECT_TRUE(verify_frobenius_mhrs(ext).all_pass());
}

TEST(Extension, AbelianRouteIsS3) {
  const Extension ext = extend_abelian(cyclic_group(3));
  EXPECT_EQ(ext.product.group().order(), 6u);
  EXPECT_EQ(ext.geometry.lines().size(), 1u);
  EXPECT_TRUE(ext.geometry.complete());
  EXPECT_TRUE(verify_frobenius_mhrs(ext).all_pass());
  EXPECT_THROW(extend_abelian(frobenius_semidirect(7, 3).group()), Error);
}

TEST(Solvability, GeneratedSubgroups) {
  FiniteGroup g = frobenius_semidirect(7, 3).group();
  EXPECT_TRUE(closure_is_solvable(g, whole_group(g).members()));
}
