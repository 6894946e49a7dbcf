// Acceptance gate: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mockhyp/catalog.hpp"
#include "mockhyp/cli.hpp"
#include "mockhyp/frobenius.hpp"
#include "mockhyp/geometry.hpp"
#include "mockhyp/kloop.hpp"
#include "mockhyp/quasidirect.hpp"
#include "oracles.hpp"

using namespace mockhyp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

constexpr double kBudgetSeconds = 60.0;

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names = {"cyclic_ext(3)", "elemab_ext(3,2)", "agl1(5)",
                                                 "agl1(7)",       "agl1(9)",         "j9"};
  return names;
}

const std::vector<std::string>& frobenius_corpus() {
  static const std::vector<std::string> names = {"cyclic_ext(3)", "elemab_ext(3,2)", "agl1(5)", "agl1(7)",
                                                 "agl1(9)",       "j9",              "frob(7,3)", "frob(13,3)",
                                                 "frob(31,5)"};
  return names;
}

Geometry corpus_geometry(const std::string& name) {
  FiniteGroup g = catalog_entry(name).group;
  return complete_geometry(g, default_involution_class(g));
}

oracle::Table raw_table(const FiniteGroup& g) {
  oracle::Table t(g.order(), oracle::Set(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

std::string failures_of(const AxiomReport& r) {
  std::string out;
  for (const std::string& f : r.failures()) out += (out.empty() ? "" : ",") + f;
  return out;
}

Outcome axiom_suite() {
  Outcome o;
  for (const std::string& name : corpus()) {
    const Geometry geo = corpus_geometry(name);
    const AxiomReport r = verify_mhrs(geo);
    o.require(r.all_pass(), name + " fails " + failures_of(r));
    o.require(r.stats.lines == 1, name + " has " + std::to_string(r.stats.lines) + " lines");
  }
  if (o.pass) o.detail = "6 groups, one line each";
  return o;
}

Outcome eight_way_equivalence() {
  Outcome o;
  const char* criteria[] = {"a_single_line", "b_projective_plane", "c_abelian_normal_subgroup",
                            "d_q_square_is_iq", "e_iq_commutative", "f_iq_subgroup",
                            "g_q_square_subgroup", "h_split"};
  for (const std::string& name : corpus()) {
    const AxiomReport r = splitting_suite(corpus_geometry(name));
    for (const char* c : criteria) o.require(r.passed(c), name + " " + c);
    o.require(r.passed("equivalent"), name + " disagreement");
  }
  if (o.pass) o.detail = "8 conditions true on 6 groups";
  return o;
}

Outcome lemma_battery_suite() {
  Outcome o;
  std::size_t checks = 0;
  for (const std::string& name : corpus()) {
    const Geometry geo = corpus_geometry(name);
    const AxiomReport r = lemma_battery(geo);
    o.require(r.all_pass(), name + " fails " + failures_of(r));
    for (const char* c : {"basic_a_normalizer_points", "basic_b_square_is_translate",
                          "basic_c_products_determine_points", "basic_d_square_abelian_2div",
                          "basic_e_square_products", "basic_f_normalizers_agree",
                          "partition_a_square_formulas", "partition_b_translations",
                          "line_lemma_a_reflection_meets", "translations_c_unique_factorization"}) {
      o.require(r.has(c), name + " lacks " + c);
    }
    // Independent count: g = i*j*h has exactly one solution per g.
    const FiniteGroup& g = geo.group();
    const Elem i = geo.q().front();
    const ElemSet cen = centralizer(g, {i}).members();
    std::vector<std::size_t> hits(g.order(), 0);
    for (Elem j : geo.q())
      for (Elem h : cen) ++hits[g.mul(g.mul(i, j), h)];
    o.require(std::all_of(hits.begin(), hits.end(), [](std::size_t k) { return k == 1; }),
              name + " factorization not unique");
    checks += r.checks().size();
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks over 6 geometries";
  return o;
}

Outcome kloop_suite() {
  Outcome o;
  std::size_t bol_triples = 0;
  for (const char* name : {"cyclic(7)", "frob(7,3)", "frob(13,3)"}) {
    const FiniteGroup g = catalog_entry(name).group;
    const KLoop loop = KLoop::from_twisted(g, whole_group(g).members());
    const AxiomReport axioms = verify_kloop_axioms(loop);
    o.require(axioms.all_pass(), std::string(name) + " fails " + failures_of(axioms));
    const oracle::Table t = oracle::twisted_loop(raw_table(g), whole_group(g).members());
    o.require(oracle::bol(t), std::string(name) + " oracle Bol");
    bol_triples += loop.size() * loop.size() * loop.size();

    std::vector<Automorphism> auts;
    if (center(g).order() == 1) auts = conjugations_with_inversion(g, loop);
    else auts = {inversion_automorphism(loop)};
    const AxiomReport prec = verify_precession_identities(loop, auts);
    o.require(prec.all_pass(), std::string(name) + " fails " + failures_of(prec));
    for (const char* c : {"delta_inverse_pair_trivial", "delta_absorbs_left_factor", "delta_antisymmetric",
                          "delta_inverse_arguments", "automorphism_conjugates_delta",
                          "conjugation_formula_agrees"}) {
      o.require(prec.has(c) && prec.passed(c), std::string(name) + " " + c);
    }
    for (Pos a = 0; a < loop.size(); ++a)
      for (Pos b = 0; b < loop.size(); ++b)
        if (precession_by_translations(loop, a, b) != precession_by_conjugation(loop, a, b)) {
          o.require(false, std::string(name) + " formulas differ");
        }
  }
  if (o.pass) o.detail = std::to_string(bol_triples) + " Bol triples; both precession formulas agree";
  return o;
}

Outcome quasidirect_suite() {
  Outcome o;
  {
    const KLoop c3 = KLoop::from_twisted(cyclic_group(3), {0, 1, 2});
    const QuasidirectGroup q(c3, {Automorphism(c3, {0, 1, 2}), inversion_automorphism(c3)});
    const FiniteGroup s3 = catalog_entry("cyclic_ext(3)").group;
    o.require(q.group().order() == 6, "C3 product has wrong order");
    // (a, s) -> catalog element 3s + a must be an isomorphism.
    auto map = [&](Elem x) {
      const auto [a, s] = q.decode(x);
      return static_cast<Elem>(3 * s + a);
    };
    for (Elem x = 0; x < 6; ++x)
      for (Elem y = 0; y < 6; ++y) o.require(map(q.group().mul(x, y)) == s3.mul(map(x), map(y)), "not S3");
  }
  const FiniteGroup g = frobenius_semidirect(7, 3).group();
  const KLoop loop = KLoop::from_twisted(g, whole_group(g).members());
  const QuasidirectGroup q(loop, conjugations_with_inversion(g, loop));
  const FiniteGroup& big = q.group();
  o.require(big.order() == 882, "order " + std::to_string(big.order()));
  o.require(!find_nonassociative_triple(big).has_value(), "882 table not associative");
  const AxiomReport r = verify_quasidirect_involutions(q);
  o.require(r.all_pass(), "fails " + failures_of(r));
  o.require(r.counts().at("involutions") == 21, "involution count");
  o.require(r.counts().at("regular_pairs") == 441, "regular pairs");
  o.require(r.passed("centralizer_of_iota"), "Cen(iota)");
  if (o.pass) o.detail = "S3 isomorphic; 882^3 triples associative; |J| = 21; 441 regular pairs";
  return o;
}

Outcome frobenius_extension_suite() {
  Outcome o;
  std::string counts;
  for (auto [p, d] : {std::pair{7u, 3u}, std::pair{13u, 3u}}) {
    const std::string name = "frob(" + std::to_string(p) + "," + std::to_string(d) + ")";
    const Extension ext = extend_degenerate(frobenius_semidirect(p, d));
    const AxiomReport r = verify_frobenius_mhrs(ext);
    o.require(r.all_pass(), name + " fails " + failures_of(r));
    for (const char* c : {"quasidirect_normalizer", "frob_normalizer", "trivial_triple_centralizers",
                          "correct_lines"}) {
      o.require(r.has(c), name + " lacks " + c);
    }
    const oracle::Table t = raw_table(ext.product.group());
    const std::size_t orbit = oracle::conjugation_orbit(t, ext.base_line).size();
    const std::size_t normalizer = oracle::normalizer_order(t, ext.base_line);
    o.require(ext.geometry.lines().size() == orbit, name + " line count differs from orbit oracle");
    o.require(orbit * normalizer == ext.product.group().order(), name + " orbit-stabilizer");
    if (p == 7) {
      o.require(orbit == 49 && normalizer == 18, "frob(7,3) orbit " + std::to_string(orbit));
    }
    counts += (counts.empty() ? "" : ", ") + name + ": " + std::to_string(orbit) + " lines";
  }
  if (o.pass) o.detail = counts;
  return o;
}

Outcome finite_frobenius_facts() {
  Outcome o;
  for (const std::string& name : frobenius_corpus()) {
    const CatalogEntry e = catalog_entry(name);
    const FrobeniusPair pair(e.group, *e.complement);
    try {
      const Subgroup k = frobenius_kernel(pair);
      o.require(is_normal_set(e.group, k.members()), name + " kernel not normal");
      o.require(k.order() * pair.complement().order() == e.group.order(), name + " |K||H| != |G|");
      o.require(set_intersection(k.members(), pair.complement().members()) == ElemSet{0},
                name + " K meets H");
    } catch (const Error& err) {
      o.require(false, name + ": " + err.what());
    }
    const bool odd = std::any_of(pair.complement().members().begin(), pair.complement().members().end(),
                                 [&](Elem x) { return e.group.is_involution(x); });
    const bool degenerate = involutions(e.group).empty();
    const bool even = !degenerate && !odd;
    o.require(odd + degenerate + even == 1, name + " tags");
    try {
      const FrobeniusType t = classify_type(pair);
      o.require((t == FrobeniusType::Odd) == odd && (t == FrobeniusType::Degenerate) == degenerate,
                name + " wrong tag");
    } catch (const Error& err) {
      o.require(false, name + ": " + err.what());
    }
    o.require(!is_full(pair), name + " full");
  }
  if (o.pass) o.detail = std::to_string(frobenius_corpus().size()) + " pairs split, one tag each, none full";
  return o;
}

Outcome sharply_two_transitive_suite() {
  Outcome o;
  const std::pair<const char*, std::uint32_t> expected[] = {{"agl1(5)", 5}, {"agl1(7)", 7}, {"agl1(9)", 3}, {"j9", 3}};
  for (auto [name, ch] : expected) {
    const ActionGroup a(catalog_entry(name).group);
    o.require(is_sharply_2_transitive(a), std::string(name) + " not sharply 2-transitive");
    o.require(permutation_characteristic(a) == ch, std::string(name) + " characteristic");
    const AxiomReport r = verify_geometry_conditions(a);
    o.require(r.all_pass(), std::string(name) + " fails " + failures_of(r));
    for (const char* c : {"a_commuting_transitive", "b_intersections_2div", "c_centralizers_abelian_inverted",
                          "d_centralizer_partition", "conditions_agree", "neumann_biconditional"}) {
      o.require(r.has(c) && r.passed(c), std::string(name) + " " + c);
    }
  }
  if (o.pass) o.detail = "characteristics 5, 7, 3, 3; conditions agree; split iff translations form a subgroup";
  return o;
}

Outcome solvability_suite() {
  Outcome o;
  std::size_t exercised = 0;
  auto check = [&](const std::string& name, const FiniteGroup& g, const ElemSet& l) {
    if (!is_twisted_subgroup(g, l) || !is_uniquely_2_divisible(g, l)) return;
    ++exercised;
    o.require(closure_is_solvable(g, l), name + " generates a nonsolvable subgroup");
  };
  for (const std::string& name : corpus()) {
    const FiniteGroup g = catalog_entry(name).group;
    const ElemSet q = default_involution_class(g);
    for (Elem i : q) check(name, g, left_translate(g, i, q));
  }
  for (const char* name : {"cyclic(7)", "frob(7,3)", "frob(13,3)", "frob(31,5)"}) {
    const FiniteGroup g = catalog_entry(name).group;
    check(name, g, whole_group(g).members());
  }
  const Extension ext = extend_degenerate(frobenius_semidirect(7, 3));
  const FiniteGroup& big = ext.product.group();
  const ElemSet& q = ext.geometry.q();
  check("frob(7,3) extension", big, left_translate(big, q.front(), q));
  o.require(exercised >= 10, "too few twisted subgroups exercised");
  if (o.pass) o.detail = std::to_string(exercised) + " uniquely 2-divisible twisted subgroups";
  return o;
}

Outcome determinism_suite() {
  Outcome o;
  std::ostringstream a, b, err;
  const int ca = run_cli({"sweep"}, a, err);
  const int cb = run_cli({"sweep", "--jobs", "4"}, b, err);
  o.require(ca == 0 && cb == 0, "sweep exit codes " + std::to_string(ca) + "/" + std::to_string(cb));
  o.require(a.str() == b.str(), "reports differ");
  o.require(!a.str().empty(), "empty report");
  if (o.pass) o.detail = std::to_string(a.str().size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite", axiom_suite},
      {"eight-way equivalence", eight_way_equivalence},
      {"lemma battery", lemma_battery_suite},
      {"K-loop suite", kloop_suite},
      {"quasidirect suite", quasidirect_suite},
      {"Frobenius extension", frobenius_extension_suite},
      {"finite Frobenius facts", finite_frobenius_facts},
      {"sharply 2-transitive suite", sharply_two_transitive_suite},
      {"solvability", solvability_suite},
      {"determinism", determinism_suite},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kBudgetSeconds) o.require(false, "over the 60 s budget");
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %-28s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
