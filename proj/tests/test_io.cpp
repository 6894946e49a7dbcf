#include <gtest/gtest.h>

#include <filesystem>

#include "mockhyp/catalog.hpp"
#include "mockhyp/io.hpp"

using namespace mockhyp;

TEST(GroupJson, CayleyRoundTrip) {
  CatalogEntry e = catalog_entry("agl1(5)");
  const json doc = group_to_json(e.group, e.complement);
  GroupInput back = group_from_json(doc);
  EXPECT_TRUE(back.group.same_table(e.group));
  EXPECT_EQ(back.complement, e.complement);
  EXPECT_EQ(back.group.labels(), e.group.labels());
}

TEST(GroupJson, IdentityNotFirstRemapsComplement) {
  // Z/3 with identity in row 2; complement {identity} given as {2}.
  json doc = {{"type", "cayley"}, {"table", {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}}, {"complement", {2}}};
  GroupInput in = group_from_json(doc);
  EXPECT_EQ(*in.complement, ElemSet{0});
}

TEST(GroupJson, Permutations) {
  json doc = {{"type", "permgroup"}, {"degree", 5}, {"generators", {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}}}};
  GroupInput in = group_from_json(doc);
  EXPECT_EQ(in.group.order(), 20u);
  EXPECT_TRUE(in.group.perm_rep().has_value());
}

TEST(GroupJson, Malformed) {
  const std::vector<json> bad = {
      json::array(),
      {{"type", "cayley"}},
      {{"type", "cayley"}, {"table", {{0, -1}, {1, 0}}}},
      {{"type", "cayley"}, {"table", "x"}},
      {{"type", "matrix"}, {"table", {{0}}}},
      {{"type", "permgroup"}, {"degree", 0}, {"generators", json::array()}},
      {{"type", "cayley"}, {"table", {{0}}}, {"complement", {3}}},
  };
  for (const json& doc : bad) {
    try {
      group_from_json(doc);
      ADD_FAILURE() << doc.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << doc.dump();
    }
  }
  try {
    group_from_json({{"type", "cayley"}, {"table", {{0, 1}, {1, 1}}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGroup);
  }
}

TEST(LoopJson, RoundTrip) {
  FiniteGroup g = frobenius_semidirect(7, 3).group();
  KLoop loop = KLoop::from_twisted(g, whole_group(g).members());
  const json doc = loop_to_json(loop);
  EXPECT_EQ(doc["carrier"].size(), 21u);
  EXPECT_TRUE(loop_from_json(doc).same_table(loop));
}

TEST(GeometryJson, Shape) {
  FiniteGroup g = catalog_entry("cyclic_ext(3)").group;
  const json doc = geometry_to_json(complete_geometry(g, default_involution_class(g)));
  EXPECT_EQ(doc["Q"], json({3, 4, 5}));
  EXPECT_EQ(doc["lines"], json({{3, 4, 5}}));
}

TEST(Files, ReadErrors) {
  EXPECT_THROW(read_json_file("/nonexistent/path.json"), Error);
  const auto path = std::filesystem::temp_directory_path() / "mockhyp_io_bad.json";
  write_text_file(path, "{not json");
  EXPECT_THROW(read_json_file(path), Error);
  std::filesystem::remove(path);
}
