#include "mockhyp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include "mockhyp/catalog.hpp"
#include "mockhyp/frobenius.hpp"
#include "mockhyp/geometry.hpp"
#include "mockhyp/io.hpp"
#include "mockhyp/kloop.hpp"
#include "mockhyp/quasidirect.hpp"

namespace mockhyp {

namespace {

struct Options {
  std::string input;
  std::string catalog;
  std::optional<std::size_t> class_index;
  std::string output;
  std::string format = "json";
  std::size_t jobs = 1;
  std::vector<std::string> names;
  std::string corpus;
  bool timing = false;
};

GroupInput load_group(const Options& o) {
  if (o.input.empty() == o.catalog.empty()) {
    throw Error(ErrorCode::BadParams, "give exactly one of --input or --catalog");
  }
  if (!o.catalog.empty()) {
    CatalogEntry e = catalog_entry(o.catalog);
    return {std::move(e.group), std::move(e.complement)};
  }
  return group_from_json(read_json_file(o.input));
}

ElemSet select_class(const FiniteGroup& g, const std::optional<std::size_t>& index) {
  if (!index) return default_involution_class(g);
  const auto classes = involution_classes(g);
  if (*index >= classes.size()) {
    throw Error(ErrorCode::BadParams, "involution class index out of range",
                {static_cast<std::int64_t>(*index), static_cast<std::int64_t>(classes.size())});
  }
  return classes[*index];
}

// The twisted subgroup iQ for the first point i of q.
ElemSet iq_of(const FiniteGroup& g, const ElemSet& q) { return left_translate(g, q.front(), q); }

void add_glauberman(AxiomReport& r, const FiniteGroup& g, const ElemSet& carrier) {
  if (!is_twisted_subgroup(g, carrier) || !is_uniquely_2_divisible(g, carrier)) {
    r.add("glauberman_solvable", true, {}, "not a uniquely 2-divisible twisted subgroup; nothing to check");
    return;
  }
  r.add("glauberman_solvable", closure_is_solvable(g, carrier), {},
        "subgroup generated by a " + std::to_string(carrier.size()) + "-element twisted subgroup");
}

AxiomReport verify_report(const Geometry& geo) {
  AxiomReport r = verify_mhrs(geo);
  r.merge(lemma_battery(geo), "lemma");
  fill_stats(r, geo);
  return r;
}

AxiomReport sweep_report(const FiniteGroup& g) {
  const ElemSet q = default_involution_class(g);
  const Geometry geo = complete_geometry(g, q);
  AxiomReport r = verify_report(geo);
  r.merge(splitting_suite(geo), "split");
  add_glauberman(r, g, iq_of(g, q));
  fill_stats(r, geo);
  return r;
}

void emit(const json& doc, const std::string& text, const Options& o, std::ostream& out) {
  if (o.format == "text") out << text;
  else out << doc.dump(2) << "\n";
}

int status(bool pass) { return pass ? 0 : 1; }

int cmd_verify(const Options& o, std::ostream& out) {
  const GroupInput in = load_group(o);
  const Geometry geo = complete_geometry(in.group, select_class(in.group, o.class_index));
  const AxiomReport r = verify_report(geo);
  const json doc = to_json(r);
  if (!o.output.empty()) write_text_file(o.output, doc.dump(2) + "\n");
  emit(doc, to_text(r), o, out);
  return status(r.all_pass());
}

int cmd_split(const Options& o, std::ostream& out) {
  const GroupInput in = load_group(o);
  const Geometry geo = complete_geometry(in.group, select_class(in.group, o.class_index));
  const AxiomReport r = splitting_suite(geo);
  const json doc = to_json(r);
  if (!o.output.empty()) write_text_file(o.output, doc.dump(2) + "\n");
  emit(doc, to_text(r), o, out);
  return status(r.all_pass());
}

// Automorphisms for the quasidirect product: conjugations with inversion
// when the loop is a whole group with trivial center, otherwise the
// precession group extended by inversion.
std::vector<Automorphism> default_automorphisms(const KLoop& loop) {
  if (loop.ambient() && loop.size() == loop.ambient()->order() && center(*loop.ambient()).order() == 1) {
    return conjugations_with_inversion(*loop.ambient(), loop);
  }
  std::vector<Automorphism> auts = precession_group(loop);
  const Automorphism eps = inversion_automorphism(loop);
  const std::size_t m = auts.size();
  for (std::size_t k = 0; k < m; ++k) auts.push_back(eps.compose(auts[k]));
  return auts;
}

int cmd_kloop(const Options& o, std::ostream& out) {
  std::optional<KLoop> loop;
  if (!o.input.empty() && o.catalog.empty()) {
    json doc = read_json_file(o.input);
    if (doc.is_object() && doc.contains("otimes")) loop = loop_from_json(doc);
  }
  AxiomReport r;
  if (!loop) {
    const GroupInput in = load_group(o);
    const FiniteGroup& g = in.group;
    ElemSet carrier = g.order() % 2 == 1 ? whole_group(g).members() : iq_of(g, select_class(g, o.class_index));
    loop = KLoop::from_twisted(g, carrier);
    add_glauberman(r, g, carrier);
  }
  r.merge(verify_kloop_axioms(*loop), "loop");
  if (r.all_pass()) {
    const std::vector<Automorphism> auts = default_automorphisms(*loop);
    r.merge(verify_precession_identities(*loop, auts), "precession");
    const QuasidirectGroup product(*loop, auts);
    r.merge(verify_quasidirect_involutions(product), "quasidirect");
  }
  if (!o.output.empty()) write_text_file(o.output, loop_to_json(*loop).dump() + "\n");
  emit(to_json(r), to_text(r), o, out);
  return status(r.all_pass());
}

int cmd_extend(const Options& o, std::ostream& out) {
  const GroupInput in = load_group(o);
  const FiniteGroup& g = in.group;
  const bool abelian = is_commutative_set(g, whole_group(g).members());
  std::optional<Extension> ext;
  if (abelian) {
    ext.emplace(extend_abelian(g));
  } else {
    if (!in.complement) throw Error(ErrorCode::BadParams, "nonabelian input needs a complement");
    ext.emplace(extend_degenerate(FrobeniusPair(g, *in.complement)));
  }
  AxiomReport r = verify_frobenius_mhrs(*ext);
  r.merge(verify_quasidirect_involutions(ext->product), "quasidirect");
  if (ext->pair) {
    const FrobeniusPair& pair = *ext->pair;
    bool kernel_ok = true;
    std::string detail;
    try {
      const Subgroup k = frobenius_kernel(pair);
      detail = "kernel of order " + std::to_string(k.order());
    } catch (const Error& e) {
      kernel_ok = false;
      detail = e.what();
    }
    r.add("frobenius.kernel_complements", kernel_ok, {}, detail);
    r.add("frobenius.type", true, {}, std::string(type_name(classify_type(pair))));
    r.add("frobenius.not_full", !is_full(pair), {},
          std::to_string(pair.conjugate_union().size()) + " of " + std::to_string(g.order()) +
              " elements in conjugates of the complement");
  }
  fill_stats(r, ext->geometry);
  if (!o.output.empty()) {
    std::filesystem::path group_path(o.output);
    std::filesystem::path geo_path = group_path;
    geo_path.replace_extension();
    geo_path += ".geometry.json";
    write_text_file(group_path, group_to_json(ext->product.group()).dump() + "\n");
    write_text_file(geo_path, geometry_to_json(ext->geometry).dump() + "\n");
  }
  emit(to_json(r), to_text(r), o, out);
  return status(r.all_pass());
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const CatalogEntry e = catalog_entry(o.names.empty() ? o.catalog : o.names.front());
  const json doc = group_to_json(e.group, e.complement);
  if (!o.output.empty()) write_text_file(o.output, doc.dump() + "\n");
  else out << doc.dump() << "\n";
  return 0;
}

struct SweepResult {
  json entry;
  bool pass = false;
  double millis = 0;
};

SweepResult sweep_one(const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  SweepResult res;
  try {
    const bool is_file = name.size() > 5 && name.ends_with(".json");
    const FiniteGroup g = is_file ? group_from_json(read_json_file(name)).group : catalog_entry(name).group;
    const AxiomReport r = sweep_report(g);
    res.pass = r.all_pass();
    res.entry = {{"name", name}, {"pass", res.pass}, {"report", to_json(r)}};
    if (!res.pass) res.entry["failures"] = r.failures();
  } catch (const Error& e) {
    res.entry = {{"name", name},
                 {"pass", false},
                 {"error", {{"code", code_name(e.code())}, {"message", e.what()}}}};
  }
  res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  std::vector<std::string> names = o.names;
  if (!o.corpus.empty()) {
    std::ifstream in(o.corpus);
    if (!in) throw Error(ErrorCode::Parse, "cannot read " + o.corpus);
    std::string line;
    while (std::getline(in, line)) {
      line.erase(0, line.find_first_not_of(" \t\r"));
      line.erase(line.find_last_not_of(" \t\r") + 1);
      if (!line.empty() && line.front() != '#') names.push_back(line);
    }
  } else if (names.empty()) {
    names = default_corpus();
  }

  std::vector<SweepResult> results(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < names.size(); k = next++) results[k] = sweep_one(names[k]);
  };
  const std::size_t threads = std::clamp<std::size_t>(o.jobs, 1, std::max<std::size_t>(names.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  json entries = json::array();
  bool pass = true;
  std::string text;
  for (const SweepResult& res : results) {
    entries.push_back(res.entry);
    pass = pass && res.pass;
    text += std::string(res.pass ? "PASS  " : "FAIL  ") + res.entry["name"].get<std::string>() + "\n";
    if (res.entry.contains("failures")) {
      for (const auto& f : res.entry["failures"]) text += "      " + f.get<std::string>() + "\n";
    }
    if (res.entry.contains("error")) text += "      " + res.entry["error"]["message"].get<std::string>() + "\n";
  }
  json doc = {{"entries", std::move(entries)}, {"pass", pass}};
  if (o.timing) {
    json timing = json::array();
    for (const SweepResult& res : results) timing.push_back(res.millis);
    doc["timing_ms"] = std::move(timing);
  }
  if (!o.output.empty()) write_text_file(o.output, doc.dump(2) + "\n");
  emit(doc, text, o, out);
  return status(pass);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification suites for involution geometries, K-loops and Frobenius extensions", "mockhyp"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool group_input) {
    if (group_input) {
      sub->add_option("--input", o.input, "group JSON file");
      sub->add_option("--catalog", o.catalog, "catalog group name, e.g. agl1(5)");
      sub->add_option("--class", o.class_index, "involution class index (0 = default)");
    }
    sub->add_option("--output", o.output, "output path");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* verify = app.add_subcommand("verify", "line axioms and lemma battery on the complete geometry");
  add_common(verify, true);
  auto* split = app.add_subcommand("split-suite", "the single-line criteria and their agreement");
  add_common(split, true);
  auto* kloop = app.add_subcommand("kloop", "K-loop, precession and quasidirect checks");
  add_common(kloop, true);
  auto* extend = app.add_subcommand("extend", "Frobenius extension and its line axioms");
  add_common(extend, true);
  auto* catalog = app.add_subcommand("catalog", "print a catalog group as JSON");
  catalog->add_option("name", o.names, "catalog name")->required()->expected(1);
  catalog->add_option("--output", o.output, "output path");
  auto* sweep = app.add_subcommand("sweep", "verify, split-suite and solvability over a corpus");
  sweep->add_option("names", o.names, "catalog names or group JSON paths");
  sweep->add_option("--corpus", o.corpus, "file with one entry per line");
  sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--timing", o.timing, "add per-entry wall time");
  add_common(sweep, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (split->parsed()) return cmd_split(o, out);
    if (kloop->parsed()) return cmd_kloop(o, out);
    if (extend->parsed()) return cmd_extend(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
  } catch (const Error& e) {
    err << "error: " << code_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mockhyp
