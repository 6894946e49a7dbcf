#include "mockhyp/geometry.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mockhyp {

namespace {

std::vector<char> mask_of(const FiniteGroup& g, const ElemSet& s) {
  std::vector<char> m(g.order(), 0);
  for (Elem x : s) m[x] = 1;
  return m;
}

Line formula_line(const FiniteGroup& g, const ElemSet& q, const std::vector<char>& q_mask,
                  Elem sigma) {
  Line out;
  for (Elem k : q) {
    if (q_mask[g.mul(k, sigma)]) out.push_back(k);
  }
  return out;
}

std::vector<std::int64_t> as_witness(const ElemSet& s) { return {s.begin(), s.end()}; }

ElemSet trivial_set() { return ElemSet{0}; }

}  // namespace

std::vector<ElemSet> involution_classes(const FiniteGroup& g) {
  std::vector<ElemSet> out;
  std::vector<char> done(g.order(), 0);
  for (Elem x : involutions(g)) {
    if (done[x]) continue;
    ElemSet c = conjugacy_class(g, x);
    for (Elem y : c) done[y] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

ElemSet default_involution_class(const FiniteGroup& g) {
  ElemSet inv = involutions(g);
  if (inv.empty()) throw Error(ErrorCode::NotInvolutionClass, "group has no involutions");
  return conjugacy_class(g, inv.front());
}

Geometry::Geometry(FiniteGroup g, ElemSet q, std::vector<Line> lines)
    : group_(std::move(g)), q_(make_set(std::move(q))) {
  if (q_.empty()) throw Error(ErrorCode::NotInvolutionClass, "empty point set");
  for (Elem x : q_) {
    if (x >= group_.order() || !group_.is_involution(x)) {
      throw Error(ErrorCode::NotInvolutionClass, "point is not an involution", {x});
    }
  }
  if (conjugacy_class(group_, q_.front()) != q_) {
    throw Error(ErrorCode::NotInvolutionClass, "points do not form one conjugacy class",
                {q_.front()});
  }
  q_mask_ = mask_of(group_, q_);

  for (Line& l : lines) {
    l = make_set(std::move(l));
    if (l.size() < 2) throw Error(ErrorCode::NotInQ, "line has fewer than two points", as_witness(l));
    for (Elem x : l) {
      if (x >= group_.order() || !q_mask_[x]) {
        throw Error(ErrorCode::NotInQ, "line point outside the class", {x});
      }
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  lines_ = std::move(lines);

  std::vector<Line> all;
  for (std::size_t a = 0; a < q_.size(); ++a) {
    for (std::size_t b = a + 1; b < q_.size(); ++b) {
      all.push_back(formula_line(group_, q_, q_mask_, group_.mul(q_[a], q_[b])));
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  complete_ = all == lines_;
}

bool Geometry::has_line(const Line& l) const {
  return std::binary_search(lines_.begin(), lines_.end(), l);
}

std::optional<std::size_t> Geometry::line_index(const Line& l) const {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), l);
  if (it == lines_.end() || *it != l) return std::nullopt;
  return static_cast<std::size_t>(it - lines_.begin());
}

Geometry complete_geometry(const FiniteGroup& g, const ElemSet& q) {
  Geometry bare(g, q, {});
  std::vector<Line> lines;
  const ElemSet& pts = bare.q();
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      lines.push_back(line_of_product(bare, g.mul(pts[a], pts[b])));
    }
  }
  return Geometry(g, pts, std::move(lines));
}

Line line_through(const Geometry& geo, Elem i, Elem j) {
  const auto n = geo.group().order();
  if (i >= n || j >= n || !geo.in_q(i) || !geo.in_q(j)) {
    throw Error(ErrorCode::NotInQ, "point outside the class", {i, j});
  }
  if (i == j) throw Error(ErrorCode::NotInQ, "a line needs two distinct points", {i, j});
  return line_of_product(geo, geo.group().mul(i, j));
}

Line line_of_product(const Geometry& geo, Elem sigma) {
  Line out;
  for (Elem k : geo.q()) {
    if (geo.in_q(geo.group().mul(k, sigma))) out.push_back(k);
  }
  return out;
}

Elem midpoint(const Geometry& geo, Elem i, Elem j) {
  const auto n = geo.group().order();
  if (i >= n || j >= n || !geo.in_q(i) || !geo.in_q(j)) {
    throw Error(ErrorCode::NotInQ, "point outside the class", {i, j});
  }
  std::vector<std::int64_t> found;
  for (Elem k : geo.q()) {
    if (geo.group().conj(i, k) == j) found.push_back(k);
  }
  if (found.empty()) throw Error(ErrorCode::NoMidpoint, "no midpoint", {i, j});
  if (found.size() > 1) {
    std::vector<std::int64_t> w{i, j};
    w.insert(w.end(), found.begin(), found.end());
    throw Error(ErrorCode::MidpointNotUnique, "several midpoints", std::move(w));
  }
  return static_cast<Elem>(found.front());
}

ElemSet line_square(const Geometry& geo, const Line& l) {
  return product_set(geo.group(), l, l);
}

ElemSet q_square(const Geometry& geo) { return product_set(geo.group(), geo.q(), geo.q()); }

ElemSet translations(const Geometry& geo) {
  ElemSet out{0};
  for (Elem sigma : q_square(geo)) {
    if (sigma != 0 && geo.has_line(line_of_product(geo, sigma))) out.push_back(sigma);
  }
  return out;
}

ElemSet line_closure(const Geometry& geo, const ElemSet& seed) {
  ElemSet start = make_set(seed);
  for (Elem x : start) {
    if (x >= geo.group().order() || !geo.in_q(x)) {
      throw Error(ErrorCode::NotInQ, "seed point outside the class", {x});
    }
  }
  std::vector<char> in(geo.group().order(), 0);
  std::vector<Elem> pts;
  for (Elem x : start) {
    in[x] = 1;
    pts.push_back(x);
  }
  // Each newly added point is paired once with every earlier point.
  for (std::size_t idx = 1; idx < pts.size(); ++idx) {
    for (std::size_t prev = 0; prev < idx; ++prev) {
      for (Elem k : line_through(geo, pts[idx], pts[prev])) {
        if (!in[k]) {
          in[k] = 1;
          pts.push_back(k);
        }
      }
    }
  }
  return make_set(std::move(pts));
}

std::optional<std::pair<Line, Line>> disjoint_lines_in(const Geometry& geo, const ElemSet& x) {
  const ElemSet pts = make_set(x);
  for (Elem p : pts) {
    if (p >= geo.group().order() || !geo.in_q(p)) {
      throw Error(ErrorCode::NotInQ, "point outside the class", {p});
    }
  }
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (!is_subset(line_through(geo, pts[a], pts[b]), pts)) {
        throw Error(ErrorCode::NotClosed, "set is not closed under lines", {pts[a], pts[b]});
      }
    }
  }
  std::vector<const Line*> inside;
  for (const Line& l : geo.lines()) {
    if (is_subset(l, pts)) inside.push_back(&l);
  }
  for (std::size_t a = 0; a < inside.size(); ++a) {
    for (std::size_t b = a + 1; b < inside.size(); ++b) {
      if (set_intersection(*inside[a], *inside[b]).empty()) {
        return std::make_pair(*inside[a], *inside[b]);
      }
    }
  }
  return std::nullopt;
}

bool is_projective_plane(const Geometry& geo, const ElemSet& x) {
  return !disjoint_lines_in(geo, x).has_value();
}

void fill_stats(AxiomReport& report, const Geometry& geo) {
  report.stats.q = geo.q().size();
  report.stats.lines = geo.lines().size();
  std::vector<std::size_t> sizes;
  for (const Line& l : geo.lines()) sizes.push_back(l.size());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  report.stats.line_sizes = std::move(sizes);
  report.stats.translations = translations(geo).size();
}

AxiomReport verify_partial_mhrs(const Geometry& geo) {
  const FiniteGroup& g = geo.group();
  const ElemSet& q = geo.q();
  const auto& lines = geo.lines();
  AxiomReport r;

  r.add("lines_nonempty", !lines.empty(), {}, std::to_string(lines.size()) + " lines");

  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (std::size_t li = 0; li < lines.size() && ok; ++li) {
      for (Elem h = 0; h < g.order() && ok; ++h) {
        if (!geo.has_line(conjugate_set(g, lines[li], h))) {
          ok = false;
          w = as_witness(lines[li]);
          w.push_back(h);
        }
      }
    }
    r.add("lines_invariant", ok, std::move(w), "line family closed under conjugation");
  }

  bool a_ok = true;
  {
    std::vector<std::int64_t> w;
    for (const Line& l : lines) {
      for (std::size_t x = 0; x < l.size() && a_ok; ++x) {
        for (std::size_t y = 0; y < l.size() && a_ok; ++y) {
          if (x != y && line_through(geo, l[x], l[y]) != l) {
            a_ok = false;
            w = {l[x], l[y]};
          }
        }
      }
      if (!a_ok) break;
    }
    r.add("a_line_formula", a_ok, std::move(w), "every line equals the line of each of its pairs");
  }

  bool b_ok = true;
  {
    std::vector<std::int64_t> w;
    std::string detail = "unique midpoint for every ordered pair";
    std::vector<int> count(g.order(), 0);
    for (Elem i : q) {
      std::fill(count.begin(), count.end(), 0);
      for (Elem k : q) ++count[g.conj(i, k)];
      for (Elem j : q) {
        if (count[j] != 1) {
          b_ok = false;
          w = {i, j};
          detail = std::to_string(count[j]) + " midpoints";
          break;
        }
      }
      if (!b_ok) break;
    }
    r.add("b_midpoints", b_ok, std::move(w), detail);
  }

  const ElemSet q2 = product_set(g, q, q);
  bool c_ok = true, c_prime_ok = true, c_norm_ok = true;
  std::vector<std::int64_t> w_c, w_cp, w_cn;
  for (const Line& l : lines) {
    std::map<Line, Elem> first_reflector;
    for (Elem i : q) {
      Line image = conjugate_set(g, l, i);
      auto [it, inserted] = first_reflector.emplace(image, i);
      if (inserted) continue;
      Elem j = it->second;
      if (c_ok && image != l) {
        c_ok = false;
        w_c = as_witness(l);
        w_c.push_back(j);
        w_c.push_back(i);
      }
      if (c_prime_ok && !(set_contains(l, i) && set_contains(l, j))) {
        c_prime_ok = false;
        w_cp = as_witness(l);
        w_cp.push_back(j);
        w_cp.push_back(i);
      }
    }
    if (c_norm_ok) {
      ElemSet lhs = set_intersection(normalizer_of_set(g, l).members(), q2);
      if (lhs != line_square(geo, l)) {
        c_norm_ok = false;
        w_cn = as_witness(l);
      }
    }
  }
  r.add("c_reflection", c_ok, std::move(w_c), "two points reflecting a line to the same line fix it");
  r.add("c_prime_points_on_line", c_prime_ok, std::move(w_cp),
        "two points reflecting a line to the same line lie on it");
  r.add("c_normalizer", c_norm_ok, std::move(w_cn),
        "normalizer of each line meets Q*Q in its square");
  {
    bool agree = !(a_ok && b_ok) || (c_ok == c_norm_ok && c_ok == c_prime_ok);
    r.add("c_forms_agree", agree, {},
          agree ? "equivalent forms of c) agree" : "internal: forms of c) disagree");
  }

  fill_stats(r, geo);
  return r;
}

AxiomReport verify_mhrs(const FiniteGroup& g, const ElemSet& q) {
  Geometry full = complete_geometry(g, q);
  AxiomReport r = verify_partial_mhrs(full);
  r.add("all_lines_exist", full.complete(), {}, std::to_string(full.lines().size()) + " lines");
  return r;
}

AxiomReport verify_mhrs(const Geometry& geo) { return verify_mhrs(geo.group(), geo.q()); }

AxiomReport lemma_battery(const Geometry& geo) {
  const FiniteGroup& g = geo.group();
  const ElemSet& q = geo.q();
  const auto& lines = geo.lines();
  const ElemSet q2 = q_square(geo);
  const std::vector<char> q2_mask = mask_of(g, q2);
  AxiomReport r;

  std::vector<ElemSet> squares;
  std::vector<ElemSet> normalizers;
  for (const Line& l : lines) {
    squares.push_back(line_square(geo, l));
    normalizers.push_back(normalizer_of_set(g, l).members());
  }

  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (std::size_t li = 0; li < lines.size() && ok; ++li) {
      if (set_intersection(normalizers[li], q) != lines[li]) {
        ok = false;
        w = as_witness(lines[li]);
      }
    }
    r.add("basic_a_normalizer_points", ok, std::move(w), "N(line) meets Q in the line");
  }
  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (std::size_t li = 0; li < lines.size() && ok; ++li) {
      for (Elem i : lines[li]) {
        if (left_translate(g, i, lines[li]) != squares[li]) {
          ok = false;
          w = {i};
          break;
        }
      }
    }
    r.add("basic_b_square_is_translate", ok, std::move(w), "line square equals i*line");
  }
  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (std::size_t li = 0; li < lines.size() && ok; ++li) {
      std::vector<char> sq = mask_of(g, squares[li]);
      for (Elem a : q) {
        for (Elem b : q) {
          if (a != b && sq[g.mul(a, b)] &&
              !(set_contains(lines[li], a) && set_contains(lines[li], b))) {
            ok = false;
            w = {a, b};
            break;
          }
        }
        if (!ok) break;
      }
    }
    r.add("basic_c_products_determine_points", ok, std::move(w),
          "ab in a line square forces a, b on the line");
  }
  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (std::size_t li = 0; li < lines.size() && ok; ++li) {
      const ElemSet& s = squares[li];
      if (!is_subgroup(g, s) || !is_commutative_set(g, s) || !is_uniquely_2_divisible(g, s)) {
        ok = false;
        w = as_witness(lines[li]);
      }
    }
    r.add("basic_d_square_abelian_2div", ok, std::move(w),
          "line squares are uniquely 2-divisible abelian groups");
  }
  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (std::size_t x = 0; x < lines.size() && ok; ++x) {
      for (std::size_t y = 0; y < lines.size() && ok; ++y) {
        if (set_intersection(lines[x], lines[y]).empty()) continue;
        ElemSet lhs = product_set(g, squares[x], squares[y]);
        ElemSet rhs = product_set(g, lines[x], lines[y]);
        if (lhs != rhs || !is_subset(rhs, q2)) {
          ok = false;
          w = as_witness(lines[x]);
          w.insert(w.end(), lines[y].begin(), lines[y].end());
        }
      }
    }
    r.add("basic_e_square_products", ok, std::move(w),
          "for meeting lines the product of squares equals the product of lines inside Q*Q");
  }
  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (std::size_t li = 0; li < lines.size() && ok; ++li) {
      if (normalizer_of_set(g, squares[li]).members() != normalizers[li]) {
        ok = false;
        w = as_witness(lines[li]);
      }
    }
    r.add("basic_f_normalizers_agree", ok, std::move(w), "N(line) = N(line square)");
  }

  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (std::size_t li = 0; li < lines.size() && ok; ++li) {
      const Line& l = lines[li];
      for (Elem i : l) {
        const ElemSet iq = left_translate(g, i, q);
        for (Elem j : l) {
          if (i == j) continue;
          ElemSet meet = set_intersection(iq, left_translate(g, j, q));
          ElemSet cen = set_intersection(centralizer(g, {g.mul(i, j)}).members(), q2);
          if (meet != squares[li] || cen != squares[li]) {
            ok = false;
            w = {i, j};
            break;
          }
        }
        if (!ok) break;
      }
    }
    r.add("partition_a_square_formulas", ok, std::move(w),
          "line square = iQ meet jQ = Cen(ij) meet Q*Q");
  }
  {
    const ElemSet s = translations(geo);
    std::vector<char> hit(g.order(), 0);
    bool ok = true;
    std::vector<std::int64_t> w;
    std::size_t total = 0;
    for (const ElemSet& sq : squares) {
      for (Elem x : sq) {
        if (x == 0) continue;
        ++total;
        if (hit[x] && ok) {
          ok = false;
          w = {x};
        }
        hit[x] = 1;
      }
    }
    ElemSet covered{0};
    for (Elem x = 1; x < g.order(); ++x) {
      if (hit[x]) covered.push_back(x);
    }
    if (ok && covered != s) {
      ok = false;
      w = {};
    }
    r.add("partition_b_translations", ok, std::move(w),
          std::to_string(total) + " nontrivial square elements over " +
              std::to_string(s.size() - 1) + " nontrivial translations");
  }
  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (const Line& l : lines) {
      for (Elem j : q) {
        if (!set_intersection(l, conjugate_set(g, l, j)).empty() && !set_contains(l, j)) {
          ok = false;
          w = as_witness(l);
          w.push_back(j);
          break;
        }
      }
      if (!ok) break;
    }
    r.add("line_lemma_a_reflection_meets", ok, std::move(w),
          "a line meeting its reflection in j contains j");
  }

  {
    bool ok_a = true, ok_b = true, ok_c = true;
    std::vector<std::int64_t> wa, wb, wc;
    std::size_t factorizations = 0;
    for (Elem i : q) {
      if (ok_a && !is_uniquely_2_divisible(g, left_translate(g, i, q))) {
        ok_a = false;
        wa = {i};
      }
      const std::vector<char> cen = mask_of(g, centralizer(g, {i}).members());
      if (ok_b) {
        for (Elem x : q2) {
          if (x != 0 && cen[x]) {
            ok_b = false;
            wb = {i, x};
            break;
          }
        }
      }
      if (ok_c) {
        for (Elem x = 0; x < g.order(); ++x) {
          std::size_t count = 0;
          for (Elem j : q) {
            if (cen[g.mul(g.mul(j, i), x)]) ++count;
          }
          if (count != 1) {
            ok_c = false;
            wc = {i, x};
            break;
          }
          ++factorizations;
        }
      }
    }
    r.add("translations_a_iq_2div", ok_a, std::move(wa), "iQ uniquely 2-divisible");
    r.add("translations_b_no_fixed_points", ok_b, std::move(wb), "Q*Q meets Cen(i) trivially");
    r.add("translations_c_unique_factorization", ok_c, std::move(wc),
          std::to_string(factorizations) + " unique factorizations g = i*j*h");
  }

  if (geo.complete()) {
    bool ok = true;
    std::vector<std::int64_t> w;
    std::size_t planes = 0;
    for (std::size_t a = 0; a < q.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < q.size() && ok; ++b) {
        const Line lab = line_through(geo, q[a], q[b]);
        for (std::size_t c = b + 1; c < q.size(); ++c) {
          if (set_contains(lab, q[c])) continue;
          ElemSet x = line_closure(geo, {q[a], q[b], q[c]});
          if (!is_projective_plane(geo, x)) continue;
          ++planes;
          std::size_t inside = 0;
          for (const Line& l : lines) inside += is_subset(l, x) ? 1 : 0;
          if (inside > 1) {
            ok = false;
            w = {q[a], q[b], q[c]};
            break;
          }
        }
      }
    }
    r.add("no_projective_plane", ok, std::move(w),
          std::to_string(planes) + " closed planes among noncollinear triples");
    r.add("complete_single_line", lines.size() == 1, {},
          std::to_string(lines.size()) + " lines in a complete geometry");
  }

  fill_stats(r, geo);
  return r;
}

AxiomReport splitting_suite(const Geometry& geo) {
  const FiniteGroup& g = geo.group();
  const ElemSet& q = geo.q();
  const ElemSet q2 = q_square(geo);
  AxiomReport r;
  std::vector<std::pair<std::string, bool>> verdicts;
  auto record = [&](std::string name, bool value, std::vector<std::int64_t> w, std::string detail) {
    verdicts.emplace_back(name, value);
    r.add(std::move(name), value, std::move(w), std::move(detail));
  };

  record("a_single_line", geo.lines().size() == 1, {},
         std::to_string(geo.lines().size()) + " lines");

  {
    auto bad = disjoint_lines_in(geo, q);
    std::vector<std::int64_t> w;
    if (bad) {
      w = as_witness(bad->first);
      w.insert(w.end(), bad->second.begin(), bad->second.end());
    }
    record("b_projective_plane", !bad, std::move(w), "every two lines meet");
  }

  {
    bool found = false;
    std::vector<std::int64_t> witness;
    std::vector<char> seen(g.order(), 0);
    for (Elem sigma : q2) {
      if (sigma == 0 || seen[sigma]) continue;
      ElemSet cls = conjugacy_class(g, sigma);
      for (Elem x : cls) seen[x] = 1;
      Subgroup a = subgroup_closure(g, cls);
      if (!is_commutative_set(g, a.members())) continue;
      bool central_on_q = true;
      for (Elem x : a.members()) {
        for (Elem i : q) {
          if (g.mul(x, i) != g.mul(i, x)) {
            central_on_q = false;
            break;
          }
        }
        if (!central_on_q) break;
      }
      if (!central_on_q) {
        found = true;
        witness = {sigma};
        break;
      }
    }
    r.set_count("abelian_normal_witness", found ? witness.front() : -1);
    record("c_abelian_normal_subgroup", found, {},
           found ? "closure of the class of " + std::to_string(witness.front()) : "none found");
  }

  bool d = true, e = true, f = true, h = true;
  std::vector<std::int64_t> wd, we, wf, wh;
  for (Elem i : q) {
    const ElemSet iq = left_translate(g, i, q);
    if (d && iq != q2) {
      d = false;
      wd = {i};
    }
    const bool commutative = is_commutative_set(g, iq);
    const bool subgroup = is_subgroup(g, iq);
    if (e && !commutative) {
      e = false;
      we = {i};
    }
    if (f && !subgroup) {
      f = false;
      wf = {i};
    }
    if (h) {
      bool ok = subgroup && commutative && is_normal_set(g, iq);
      if (ok) {
        const Subgroup cen = centralizer(g, {i});
        ok = set_intersection(iq, cen.members()) == trivial_set() &&
             iq.size() * cen.order() == g.order();
      }
      if (!ok) {
        h = false;
        wh = {i};
      }
    }
  }
  record("d_q_square_is_iq", d, std::move(wd), "Q*Q = iQ for every i");
  record("e_iq_commutative", e, std::move(we), "iQ commutative for every i");
  record("f_iq_subgroup", f, std::move(wf), "iQ a subgroup for every i");
  record("g_q_square_subgroup", is_subgroup(g, q2), {}, std::to_string(q2.size()) + " elements");
  record("h_split", h, std::move(wh), "iQ abelian normal complement to Cen(i)");

  bool all_equal = std::all_of(verdicts.begin(), verdicts.end(),
                               [&](const auto& v) { return v.second == verdicts.front().second; });
  std::string detail = "all conditions ";
  if (all_equal) {
    detail += verdicts.front().second ? "true" : "false";
  } else {
    detail = "disagreement:";
    for (const auto& [name, value] : verdicts) detail += " " + name + "=" + (value ? "1" : "0");
  }
  r.add("equivalent", all_equal, {}, detail);
  fill_stats(r, geo);
  return r;
}

}  // namespace mockhyp
