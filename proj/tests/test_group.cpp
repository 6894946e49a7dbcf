#include <gtest/gtest.h>

#include "mockhyp/catalog.hpp"
#include "mockhyp/group.hpp"
#include "oracles.hpp"

using namespace mockhyp;

namespace {

FiniteGroup s3() { return catalog_entry("cyclic_ext(3)").group; }
FiniteGroup f21() { return frobenius_semidirect(7, 3).group(); }

Elem find_by_label(const FiniteGroup& g, const std::string& label) {
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.label(x) == label) return x;
  }
  ADD_FAILURE() << "no element labelled " << label;
  return 0;
}

}  // namespace

TEST(GroupTable, TrivialGroup) {
  FiniteGroup g = FiniteGroup::from_cayley_table({{0}});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(involutions(g).empty());
}

TEST(GroupTable, RejectsMissingInverse) {
  try {
    FiniteGroup::from_cayley_table({{0, 1}, {1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGroup);
  }
}

TEST(GroupTable, RejectsNonassociativeLatinSquare) {
  // A loop of order 5 that is not a group.
  const std::vector<std::vector<Elem>> t = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup::from_cayley_table(t, {}, AssocCheck::Full), Error);
  EXPECT_THROW(FiniteGroup::from_cayley_table(t, {}, AssocCheck::Light), Error);
}

TEST(GroupTable, IdentityMovedToFront) {
  // Z/3 written with the identity in row 2.
  FiniteGroup g = FiniteGroup::from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, {"a", "b", "e"});
  EXPECT_EQ(g.label(0), "e");
  for (Elem x = 0; x < 3; ++x) EXPECT_EQ(g.mul(0, x), x);
}

TEST(GroupTable, S3MatchesHandTable) {
  // Rows: 1, r, r^2, s, sr, sr^2 with sr^k meaning s then r^k.
  const std::vector<std::vector<Elem>> t = {{0, 1, 2, 3, 4, 5}, {1, 2, 0, 5, 3, 4},
                                            {2, 0, 1, 4, 5, 3}, {3, 4, 5, 0, 1, 2},
                                            {4, 5, 3, 2, 0, 1}, {5, 3, 4, 1, 2, 0}};
  oracle::Table raw(6, oracle::Set(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) raw[a][b] = t[a][b];
  ASSERT_TRUE(oracle::associative(raw));
  FiniteGroup g = FiniteGroup::from_cayley_table(t);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(involutions(g).size(), 3u);
}

TEST(Permutations, ClosureOrders) {
  EXPECT_EQ(FiniteGroup::from_permutation_generators(3, {{1, 2, 0}, {1, 0, 2}}).order(), 6u);
  EXPECT_EQ(FiniteGroup::from_permutation_generators(1, {}).order(), 1u);
  const std::vector<Perm> gens = {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}};
  FiniteGroup g = FiniteGroup::from_permutation_generators(5, gens);
  EXPECT_EQ(g.order(), oracle::perm_closure(gens).size());
  EXPECT_EQ(g.order(), 20u);
  EXPECT_EQ(involutions(g).size(), 5u);
}

TEST(Permutations, RightActionConvention) {
  FiniteGroup g = FiniteGroup::from_permutation_generators(3, {{1, 2, 0}, {1, 0, 2}});
  const PermRep& rep = *g.perm_rep();
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (std::uint32_t x = 0; x < 3; ++x)
        EXPECT_EQ(rep.images[g.mul(a, b)][x], rep.images[b][rep.images[a][x]]);
}

TEST(Permutations, SizeCap) {
  std::vector<Perm> gens = {{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}};
  EXPECT_THROW(FiniteGroup::from_permutation_generators(7, gens, 100), Error);
}

TEST(Classes, ConjugacyClasses) {
  FiniteGroup g = s3();
  const ElemSet inv = involutions(g);
  EXPECT_EQ(conjugacy_class(g, inv.front()).size(), 3u);
  EXPECT_EQ(conjugacy_class(g, 0), ElemSet{0});
  FiniteGroup f = f21();
  const Elem h = find_by_label(f, "2x+0");
  EXPECT_EQ(f.element_order(h), 3u);
  EXPECT_EQ(conjugacy_class(f, h).size(), 7u);
  EXPECT_TRUE(involutions(cyclic_group(7)).empty());
  EXPECT_EQ(involutions(agl1(5).group()).size(), 5u);
}

TEST(Subgroups, CentralizerCenterSolvable) {
  FiniteGroup g = s3();
  const Elem s = involutions(g).front();
  EXPECT_EQ(centralizer(g, {s}).members(), (ElemSet{0, s}));
  EXPECT_EQ(centralizer(g, {0}).order(), 6u);
  EXPECT_EQ(center(g).order(), 1u);
  FiniteGroup f = f21();
  EXPECT_TRUE(is_solvable(whole_group(f)));
  EXPECT_EQ(derived_subgroup(whole_group(f)).order(), 7u);
  EXPECT_EQ(subgroup_closure(f, {find_by_label(f, "1x+1")}).order(), 7u);
}

TEST(Subgroups, RejectsNonSubgroup) {
  FiniteGroup g = s3();
  EXPECT_THROW(Subgroup(g, {0, 1}), Error);
}

TEST(SquareRoots, Divisibility) {
  FiniteGroup c7 = cyclic_group(7);
  EXPECT_TRUE(is_uniquely_2_divisible(c7, whole_group(c7).members()));
  EXPECT_EQ(sqrt_in(c7, whole_group(c7).members(), 1), 4u);
  EXPECT_EQ(sqrt_in(c7, whole_group(c7).members(), 0), 0u);
  FiniteGroup g = s3();
  EXPECT_FALSE(is_uniquely_2_divisible(g, whole_group(g).members()));
  const ElemSet q = involutions(g);
  EXPECT_TRUE(is_uniquely_2_divisible(g, left_translate(g, q.front(), q)));
  FiniteGroup f = f21();
  const Elem h = find_by_label(f, "2x+0");
  EXPECT_EQ(sqrt_in(f, whole_group(f).members(), h), f.mul(h, h));
}

TEST(SquareRoots, SquareTableRejectsCollisions) {
  FiniteGroup g = s3();
  EXPECT_THROW(square_root_table(g, whole_group(g).members()), Error);
}

TEST(Neumann, Decompositions) {
  FiniteGroup c7 = cyclic_group(7);
  std::vector<Elem> inversion(7);
  for (Elem x = 0; x < 7; ++x) inversion[x] = c7.inv(x);
  InvolutoryAutomorphism alpha(c7, inversion);
  EXPECT_EQ(neumann_decompose(alpha, 3), (std::pair<Elem, Elem>{3, 0}));
  EXPECT_EQ(neumann_decompose(alpha, 0), (std::pair<Elem, Elem>{0, 0}));

  // t -> t^-1, h -> h on F7 x| C3: conjugation by the involution x -> -x
  // of AGL1(7), restricted to the subgroup.
  FiniteGroup f = f21();
  std::vector<Elem> images(f.order());
  for (Elem x = 0; x < f.order(); ++x) {
    const std::string lbl = f.label(x);
    const auto plus = lbl.find("x+");
    const int a = std::stoi(lbl.substr(0, plus));
    const int b = std::stoi(lbl.substr(plus + 2));
    images[x] = find_by_label(f, std::to_string(a) + "x+" + std::to_string((7 - b) % 7));
  }
  InvolutoryAutomorphism beta(f, images);
  const Elem t = find_by_label(f, "1x+1");
  const Elem h = find_by_label(f, "2x+0");
  const auto [a, b] = neumann_decompose(beta, f.mul(t, h));
  EXPECT_EQ(a, t);
  EXPECT_EQ(b, h);
}

TEST(Neumann, RejectsNonAutomorphism) {
  FiniteGroup c7 = cyclic_group(7);
  std::vector<Elem> bad = {0, 2, 1, 3, 4, 5, 6};
  EXPECT_THROW(InvolutoryAutomorphism(c7, bad), Error);
}

TEST(ErrorCodes, StableNames) {
  EXPECT_EQ(code_name(ErrorCode::NotGroup), "E_NOT_GROUP");
  EXPECT_EQ(code_name(ErrorCode::NotUniquely2Div), "E_NOT_UNIQUELY_2DIV");
  EXPECT_EQ(code_name(ErrorCode::Internal), "E_INTERNAL");
}
