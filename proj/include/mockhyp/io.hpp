#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "mockhyp/geometry.hpp"
#include "mockhyp/group.hpp"
#include "mockhyp/kloop.hpp"

namespace mockhyp {

using json = nlohmann::json;

struct GroupInput {
  FiniteGroup group;
  std::optional<ElemSet> complement;
};

/// {"type":"cayley","table":[[int]],"labels":[str]?} or
/// {"type":"permgroup","degree":int,"generators":[[int]]}, with an optional
/// "complement":[int] of element indices. For Cayley input the indices
/// refer to the rows as given; for permutation input to the closure order.
/// E_PARSE on malformed documents; group validation errors pass through.
GroupInput group_from_json(const json& doc);
json group_to_json(const FiniteGroup& g, const std::optional<ElemSet>& complement = std::nullopt);

/// {"Q":[int],"lines":[[int]]}
json geometry_to_json(const Geometry& geo);

/// {"carrier":[int],"otimes":[[int]]}
json loop_to_json(const KLoop& loop);
KLoop loop_from_json(const json& doc);

/// E_PARSE if the file cannot be read or is not JSON.
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mockhyp
