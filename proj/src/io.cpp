#include "mockhyp/io.hpp"

#include <fstream>
#include <sstream>

namespace mockhyp {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::uint32_t> index_list(const json& v, const char* what) {
  if (!v.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() > 0xfffffffe) {
      parse_error(std::string(what) + " must hold nonnegative integers");
    }
    out.push_back(x.get<std::uint32_t>());
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> index_matrix(const json& v, const char* what) {
  if (!v.is_array()) parse_error(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<std::uint32_t>> out;
  for (const json& row : v) out.push_back(index_list(row, what));
  return out;
}

}  // namespace

GroupInput group_from_json(const json& doc) {
  const json& type = field(doc, "type");
  if (!type.is_string()) parse_error("'type' must be a string");
  std::optional<ElemSet> complement;
  if (doc.contains("complement")) complement = index_list(doc.at("complement"), "complement");

  if (type == "cayley") {
    auto table = index_matrix(field(doc, "table"), "table");
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
      if (!doc.at("labels").is_array()) parse_error("'labels' must be an array");
      for (const json& l : doc.at("labels")) {
        if (!l.is_string()) parse_error("labels must be strings");
        labels.push_back(l.get<std::string>());
      }
    }
    FiniteGroup g = FiniteGroup::from_cayley_table(table, std::move(labels));
    if (complement) {
      // Construction swaps the identity row into position 0.
      std::uint32_t e = 0;
      for (std::uint32_t r = 0; r < table.size(); ++r) {
        bool id = true;
        for (std::uint32_t c = 0; c < table[r].size() && id; ++c) id = table[r][c] == c;
        if (id) {
          e = r;
          break;
        }
      }
      for (Elem& x : *complement) {
        if (x >= g.order()) parse_error("complement index out of range");
        if (x == e) x = 0;
        else if (x == 0) x = e;
      }
      complement = make_set(std::move(*complement));
    }
    return {std::move(g), std::move(complement)};
  }
  if (type == "permgroup") {
    const json& deg = field(doc, "degree");
    if (!deg.is_number_integer() || deg.get<std::int64_t>() < 1) parse_error("'degree' must be a positive integer");
    const std::size_t degree = deg.get<std::size_t>();
    std::vector<Perm> gens;
    for (auto& row : index_matrix(field(doc, "generators"), "generators")) gens.emplace_back(row.begin(), row.end());
    FiniteGroup g = FiniteGroup::from_permutation_generators(degree, gens);
    if (complement) {
      for (Elem x : *complement) {
        if (x >= g.order()) parse_error("complement index out of range");
      }
      complement = make_set(std::move(*complement));
    }
    return {std::move(g), std::move(complement)};
  }
  parse_error("unknown group type '" + type.get<std::string>() + "'");
}

json group_to_json(const FiniteGroup& g, const std::optional<ElemSet>& complement) {
  json doc = {{"type", "cayley"}, {"table", g.table()}, {"labels", g.labels()}};
  if (complement) doc["complement"] = *complement;
  return doc;
}

json geometry_to_json(const Geometry& geo) {
  return {{"Q", geo.q()}, {"lines", geo.lines()}};
}

json loop_to_json(const KLoop& loop) {
  return {{"carrier", loop.carrier()}, {"otimes", loop.table()}};
}

KLoop loop_from_json(const json& doc) {
  return KLoop::from_table(index_matrix(field(doc, "otimes"), "otimes"));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path.string());
}

}  // namespace mockhyp
