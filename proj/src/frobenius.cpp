#include "mockhyp/frobenius.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace mockhyp {

namespace {

std::vector<char> mask_of(std::size_t n, const ElemSet& s) {
  std::vector<char> m(n, 0);
  for (Elem x : s) m[x] = 1;
  return m;
}

ElemSet all_elements(const FiniteGroup& g) { return whole_group(g).members(); }

// A small generating set: add elements until the closure is everything.
ElemSet greedy_generators(const FiniteGroup& g) {
  ElemSet gens;
  std::vector<char> covered(g.order(), 0);
  covered[0] = 1;
  for (Elem x = 1; x < g.order(); ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    const Subgroup closure = subgroup_closure(g, gens);
    for (Elem y : closure.members()) covered[y] = 1;
  }
  return gens;
}

std::vector<Line> line_orbit(const FiniteGroup& g, const Line& start, const ElemSet& gens) {
  std::set<Line> seen{start};
  std::deque<Line> frontier{start};
  while (!frontier.empty()) {
    Line cur = std::move(frontier.front());
    frontier.pop_front();
    for (Elem x : gens) {
      Line next = conjugate_set(g, cur, x);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

Line lift_to_line(const QuasidirectGroup& q, const ElemSet& base_elems, std::size_t eps) {
  ElemSet out;
  for (Elem x : base_elems) out.push_back(q.encode(q.loop().position(x), eps));
  return make_set(std::move(out));
}

}  // namespace

bool is_frobenius(const FiniteGroup& g, const Subgroup& h) {
  if (h.order() <= 1 || h.order() >= g.order()) return false;
  const std::vector<char> in_h = mask_of(g.order(), h.members());
  for (Elem x = 0; x < g.order(); ++x) {
    if (in_h[x]) continue;
    for (Elem y : h.members()) {
      if (y != 0 && in_h[g.conj(y, x)]) return false;
    }
  }
  return true;
}

std::string_view type_name(FrobeniusType t) {
  switch (t) {
    case FrobeniusType::Odd: return "odd";
    case FrobeniusType::Degenerate: return "degenerate";
    case FrobeniusType::Even: return "even";
  }
  return "unknown";
}

FrobeniusPair::FrobeniusPair(FiniteGroup g, ElemSet complement)
    : group_(std::move(g)), complement_(group_, std::move(complement)) {
  if (!is_frobenius(group_, complement_)) {
    throw Error(ErrorCode::NotFrobenius, "complement is not proper, nontrivial and malnormal");
  }
  std::set<ElemSet> conj;
  for (Elem x = 0; x < group_.order(); ++x) conj.insert(conjugate_set(group_, complement_.members(), x));
  conjugates_.assign(conj.begin(), conj.end());
  std::vector<char> covered(group_.order(), 0);
  for (const ElemSet& c : conjugates_) {
    for (Elem x : c) covered[x] = 1;
  }
  for (Elem x = 0; x < group_.order(); ++x) {
    if (covered[x]) union_.push_back(x);
  }
}

bool is_full(const FrobeniusPair& pair) {
  return pair.conjugate_union().size() == pair.group().order();
}

Subgroup frobenius_kernel(const FrobeniusPair& pair) {
  const FiniteGroup& g = pair.group();
  const std::vector<char> covered = mask_of(g.order(), pair.conjugate_union());
  ElemSet k{0};
  for (Elem x = 1; x < g.order(); ++x) {
    if (!covered[x]) k.push_back(x);
  }
  if (!is_subgroup(g, k)) throw Error(ErrorCode::KernelNotSubgroup, "kernel candidate is not closed");
  if (!is_normal_set(g, k)) throw Error(ErrorCode::KernelNotSubgroup, "kernel is not normal");
  const Subgroup& h = pair.complement();
  if (set_intersection(k, h.members()) != ElemSet{0} || k.size() * h.order() != g.order()) {
    throw Error(ErrorCode::KernelNotSubgroup, "kernel does not complement the Frobenius complement");
  }
  return Subgroup(g, std::move(k));
}

FrobeniusType classify_type(const FrobeniusPair& pair) {
  const FiniteGroup& g = pair.group();
  const ElemSet inv = involutions(g);
  const bool odd = std::any_of(pair.complement().members().begin(), pair.complement().members().end(),
                               [&](Elem x) { return g.is_involution(x); });
  const bool degenerate = inv.empty();
  const std::vector<char> covered = mask_of(g.order(), pair.conjugate_union());
  const bool even = std::any_of(inv.begin(), inv.end(), [&](Elem x) { return !covered[x]; });
  const int count = int(odd) + int(degenerate) + int(even);
  if (count != 1) throw Error(ErrorCode::Internal, "type trichotomy fails", {odd, degenerate, even});
  if (odd) return FrobeniusType::Odd;
  if (degenerate) return FrobeniusType::Degenerate;
  return FrobeniusType::Even;
}

bool closure_is_solvable(const FiniteGroup& g, const ElemSet& s) {
  return is_solvable(subgroup_closure(g, s));
}

Extension extend_degenerate(const FrobeniusPair& pair) {
  const FiniteGroup& g = pair.group();
  const ElemSet all = all_elements(g);
  if (!is_uniquely_2_divisible(g, all)) {
    throw Error(ErrorCode::NotUniquely2Div, "group has even order");
  }
  if (!is_commutative_set(g, pair.complement().members())) {
    throw Error(ErrorCode::ComplementNotAbelian, "complement is not abelian");
  }
  KLoop loop = KLoop::from_twisted(g, all);
  QuasidirectGroup q(loop, conjugations_with_inversion(g, loop));
  const FiniteGroup& big = q.group();
  const std::size_t eps = *q.epsilon_id();

  const ElemSet base_gens = greedy_generators(g);
  ElemSet inner_gens;
  ElemSet gens{q.iota()};
  for (Elem x : base_gens) {
    const Pos p = loop.position(x);
    gens.push_back(q.encode(p, 0));
    Perm conj(loop.size());
    for (Pos y = 0; y < loop.size(); ++y) conj[y] = loop.position(g.mul(g.mul(x, y), g.inv(x)));
    const auto id = q.find_automorphism(Automorphism::trusted(std::move(conj)));
    if (!id) throw Error(ErrorCode::Internal, "conjugation missing from the automorphism list", {x});
    gens.push_back(q.encode(0, *id));
    inner_gens.push_back(q.encode(0, *id));
  }
  gens = make_set(std::move(gens));
  if (subgroup_closure(big, gens).order() != big.order()) {
    throw Error(ErrorCode::Internal, "orbit generators do not generate the product");
  }

  Line base_line = lift_to_line(q, pair.complement().members(), eps);
  std::vector<Line> orbit = line_orbit(big, base_line, gens);
  const std::size_t inner = line_orbit(big, base_line, make_set(inner_gens)).size();
  Geometry geo(big, q.expected_involutions(), std::move(orbit));
  return Extension{g, pair.complement().members(), pair, std::move(loop), std::move(q),
                   std::move(base_line), std::move(geo), inner};
}

Extension extend_abelian(const FiniteGroup& a) {
  const ElemSet all = all_elements(a);
  if (!is_commutative_set(a, all)) throw Error(ErrorCode::BadParams, "group is not abelian");
  if (!is_uniquely_2_divisible(a, all)) {
    throw Error(ErrorCode::NotUniquely2Div, "group has even order");
  }
  KLoop loop = KLoop::from_twisted(a, all);
  Perm id(loop.size());
  for (Pos x = 0; x < loop.size(); ++x) id[x] = x;
  QuasidirectGroup q(loop, {Automorphism::trusted(std::move(id)), inversion_automorphism(loop)});
  Line base_line = q.expected_involutions();
  Geometry geo(q.group(), base_line, {base_line});
  return Extension{a, all, std::nullopt, std::move(loop), std::move(q), base_line, std::move(geo), 1};
}

AxiomReport verify_frobenius_mhrs(const Extension& ext) {
  const Geometry& geo = ext.geometry;
  const QuasidirectGroup& q = ext.product;
  const FiniteGroup& big = q.group();
  const KLoop& loop = ext.loop;
  const ElemSet& j = geo.q();
  const std::size_t eps = *q.epsilon_id();
  const auto& lines = geo.lines();
  AxiomReport r;

  r.merge(verify_partial_mhrs(geo), "partial");

  // Line index of each covered pair of points, or -1.
  std::vector<std::size_t> jpos(big.order(), kNoElem);
  for (std::size_t t = 0; t < j.size(); ++t) jpos[j[t]] = t;
  std::vector<long> pair_line(j.size() * j.size(), -1);
  bool at_most_one = true;
  std::vector<std::int64_t> w_one;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    for (Elem x : lines[li]) {
      for (Elem y : lines[li]) {
        if (x == y) continue;
        long& slot = pair_line[jpos[x] * j.size() + jpos[y]];
        if (slot >= 0 && at_most_one) {
          at_most_one = false;
          w_one = {x, y};
        }
        slot = static_cast<long>(li);
      }
    }
  }
  r.add("at_most_one_line_per_pair", at_most_one, std::move(w_one), "lines meet in at most one point");

  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (const Line& l : lines) {
      for (Elem x : l) {
        for (Elem y : l) {
          if (x == y || !ok) continue;
          const Elem sigma = big.mul(x, y);
          Line inverted;
          for (Elem k : j) {
            if (big.conj(sigma, k) == big.inv(sigma)) inverted.push_back(k);
          }
          if (line_through(geo, x, y) != l || inverted != l) {
            ok = false;
            w = {x, y};
          }
        }
      }
    }
    r.add("correct_lines", ok, std::move(w), "orbit lines equal both line formulas");
  }

  const Subgroup norm = normalizer_of_set(big, ext.base_line);
  {
    const ElemSet j2 = product_set(big, j, j);
    const bool ok = set_intersection(norm.members(), j2) == line_square(geo, ext.base_line);
    r.add("quasidirect_normalizer", ok, {}, std::to_string(norm.order()) + " elements normalize the base line");
  }
  {
    const std::vector<char> in_h = mask_of(ext.base.order(), ext.complement);
    bool ok = true;
    std::vector<std::int64_t> w;
    for (Elem x : norm.members()) {
      auto [a, alpha_id] = q.decode(x);
      const Automorphism& alpha = q.automorphisms()[alpha_id];
      bool good = in_h[loop.carrier()[a]] != 0;
      for (Elem h : ext.complement) good = good && in_h[loop.carrier()[alpha(loop.position(h))]];
      if (!good) {
        ok = false;
        w = {x};
        break;
      }
    }
    r.add("frob_normalizer", ok, std::move(w), "normalizer elements (a, alpha) have a in H and alpha(H) = H");
  }
  {
    std::set<Line> allowed;
    if (ext.pair) {
      for (const ElemSet& c : ext.pair->conjugates()) allowed.insert(lift_to_line(q, c, eps));
    } else {
      allowed.insert(ext.base_line);
    }
    bool ok = true;
    std::vector<std::int64_t> w;
    const Elem iota = q.iota();
    for (const Line& l : lines) {
      if (set_contains(l, iota) && !allowed.count(l)) {
        ok = false;
        w = {l.begin(), l.end()};
        break;
      }
    }
    r.add("lines_through_iota", ok, std::move(w), "lines through iota are conjugates of the complement");
  }
  {
    std::vector<std::vector<char>> cen(j.size());
    for (std::size_t t = 0; t < j.size(); ++t) cen[t] = mask_of(big.order(), centralizer(big, {j[t]}).members());
    bool ok = true;
    std::vector<std::int64_t> w;
    std::size_t triples = 0;
    const std::size_t m = j.size();
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = 0; b < m && ok; ++b) {
        if (a == b || pair_line[a * m + b] < 0) continue;
        const Line& lab = lines[static_cast<std::size_t>(pair_line[a * m + b])];
        ElemSet common;
        for (Elem x = 1; x < big.order(); ++x) {
          if (cen[a][x] && cen[b][x]) common.push_back(x);
        }
        for (std::size_t c = 0; c < m; ++c) {
          if (c == a || c == b || pair_line[a * m + c] < 0 || set_contains(lab, j[c])) continue;
          ++triples;
          for (Elem x : common) {
            if (cen[c][x]) {
              ok = false;
              w = {j[a], j[b], j[c], x};
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    r.add("trivial_triple_centralizers", ok, std::move(w),
          std::to_string(triples) + " noncollinear triples with two lines");
    r.set_count("qualifying_triples", static_cast<std::int64_t>(triples));
  }
  {
    const bool full = ext.pair ? is_full(*ext.pair) : true;
    r.add("full_implies_complete", !full || geo.complete(), {},
          full ? "full pair, all lines present" : "pair is not full");
  }
  r.add("glauberman_solvable", closure_is_solvable(ext.base, loop.carrier()), {},
        "subgroup generated by the loop carrier is solvable");

  r.set_count("group_order", static_cast<std::int64_t>(big.order()));
  r.set_count("involutions", static_cast<std::int64_t>(j.size()));
  r.set_count("base_line_normalizer", static_cast<std::int64_t>(norm.order()));
  r.set_count("inner_orbit", static_cast<std::int64_t>(ext.inner_orbit));
  fill_stats(r, geo);
  return r;
}

}  // namespace mockhyp
