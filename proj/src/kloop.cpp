#include "mockhyp/kloop.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace mockhyp {

namespace {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

std::vector<std::int64_t> wit(std::initializer_list<Pos> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

bool is_twisted_subgroup(const FiniteGroup& g, const ElemSet& s) {
  if (!set_contains(s, 0)) return false;
  std::vector<char> mask(g.order(), 0);
  for (Elem x : s) {
    if (x >= g.order()) return false;
    mask[x] = 1;
  }
  for (Elem a : s) {
    if (!mask[g.inv(a)]) return false;
    for (Elem b : s) {
      if (!mask[g.mul(g.mul(a, b), a)]) return false;
    }
  }
  return true;
}

Pos KLoop::position(Elem x) const {
  if (x >= data_->position.size()) return kNoElem;
  return data_->position[x];
}

std::vector<std::vector<Pos>> KLoop::table() const {
  const std::size_t n = size();
  std::vector<std::vector<Pos>> out(n, std::vector<Pos>(n));
  for (Pos a = 0; a < n; ++a) {
    for (Pos b = 0; b < n; ++b) out[a][b] = op(a, b);
  }
  return out;
}

std::shared_ptr<KLoop::Data> KLoop::finish(std::shared_ptr<Data> d) {
  const std::size_t n = d->n;
  d->ldiv.assign(n * n, kNoElem);
  for (Pos a = 0; a < n; ++a) {
    for (Pos x = 0; x < n; ++x) {
      Pos b = d->op[a * n + x];
      if (d->ldiv[a * n + b] != kNoElem) {
        throw Error(ErrorCode::NotLoop, "row is not a permutation", wit({a}));
      }
      d->ldiv[a * n + b] = x;
    }
  }
  for (Pos x = 0; x < n; ++x) {
    if (d->op[x] != x || d->op[x * n] != x) {
      throw Error(ErrorCode::NotLoop, "position 0 is not neutral", wit({x}));
    }
  }
  d->inv.resize(n);
  for (Pos a = 0; a < n; ++a) d->inv[a] = d->ldiv[a * n];

  if (d->sqrt.empty()) {
    d->sqrt.assign(n, kNoElem);
    d->sqrt_ok = true;
    for (Pos a = 0; a < n; ++a) {
      Pos sq = d->op[a * n + a];
      if (d->sqrt[sq] != kNoElem) d->sqrt_ok = false;
      d->sqrt[sq] = a;
    }
    if (!d->sqrt_ok) std::fill(d->sqrt.begin(), d->sqrt.end(), kNoElem);
  }
  return d;
}

KLoop KLoop::from_twisted(const FiniteGroup& g, const ElemSet& s_in) {
  const ElemSet s = make_set(s_in);
  if (!is_twisted_subgroup(g, s)) {
    throw Error(ErrorCode::NotTwisted, "set is not a twisted subgroup");
  }
  const std::vector<Elem> roots = square_root_table(g, s);

  auto d = std::make_shared<Data>();
  d->n = s.size();
  d->ambient = g;
  d->carrier = s;
  d->position.assign(g.order(), kNoElem);
  for (Pos p = 0; p < s.size(); ++p) d->position[s[p]] = p;

  const std::size_t n = d->n;
  d->op.resize(n * n);
  d->sqrt.resize(n);
  for (Pos a = 0; a < n; ++a) {
    const Elem r = roots[s[a]];
    d->sqrt[a] = d->position[r];
    for (Pos b = 0; b < n; ++b) {
      Pos p = d->position[g.mul(g.mul(r, s[b]), r)];
      if (p == kNoElem) throw Error(ErrorCode::NotTwisted, "product leaves the set", wit({s[a], s[b]}));
      d->op[a * n + b] = p;
    }
  }
  d->sqrt_ok = true;
  return KLoop(finish(std::move(d)));
}

KLoop KLoop::from_table(std::vector<std::vector<Pos>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::NotLoop, "empty table");
  auto d = std::make_shared<Data>();
  d->n = n;
  d->op.reserve(n * n);
  for (Pos r = 0; r < n; ++r) {
    if (table[r].size() != n) throw Error(ErrorCode::NotLoop, "table is not square", wit({r}));
    for (Pos v : table[r]) {
      if (v >= n) throw Error(ErrorCode::NotLoop, "entry out of range", wit({r}));
      d->op.push_back(v);
    }
  }
  d->carrier.resize(n);
  std::iota(d->carrier.begin(), d->carrier.end(), 0u);
  d->position = d->carrier;
  return KLoop(finish(std::move(d)));
}

Automorphism::Automorphism(const KLoop& loop, Perm images) : images_(std::move(images)) {
  if (images_.size() != loop.size()) {
    throw Error(ErrorCode::NotAutomorphism, "map has the wrong size");
  }
  std::vector<char> hit(loop.size(), 0);
  for (Pos x = 0; x < images_.size(); ++x) {
    if (images_[x] >= loop.size() || hit[images_[x]]) {
      throw Error(ErrorCode::NotAutomorphism, "map is not a permutation", wit({x}));
    }
    hit[images_[x]] = 1;
  }
  if (auto bad = automorphism_violation(loop, images_)) {
    throw Error(ErrorCode::NotAutomorphism, "map does not respect the loop operation",
                wit({bad->first, bad->second}));
  }
}

Automorphism Automorphism::trusted(Perm images) { return Automorphism(std::move(images)); }

bool Automorphism::is_identity() const {
  for (Pos x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  Perm out(images_.size());
  for (Pos x = 0; x < out.size(); ++x) out[x] = images_[other.images_[x]];
  return Automorphism(std::move(out));
}

Automorphism Automorphism::inverse() const {
  Perm out(images_.size());
  for (Pos x = 0; x < out.size(); ++x) out[images_[x]] = x;
  return Automorphism(std::move(out));
}

std::optional<std::pair<Pos, Pos>> automorphism_violation(const KLoop& loop, const Perm& p) {
  for (Pos x = 0; x < loop.size(); ++x) {
    for (Pos y = 0; y < loop.size(); ++y) {
      if (p[loop.op(x, y)] != loop.op(p[x], p[y])) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

AxiomReport verify_kloop_axioms(const KLoop& loop) {
  const std::size_t n = loop.size();
  AxiomReport r;

  {
    bool ok = true;
    std::vector<std::int64_t> w;
    std::vector<std::uint32_t> seen_row(n, 0), seen_col(n, 0);
    for (Pos a = 0; a < n && ok; ++a) {
      const std::uint32_t stamp = a + 1;
      for (Pos x = 0; x < n; ++x) {
        Pos v = loop.op(a, x), u = loop.op(x, a);
        if (seen_row[v] == stamp || seen_col[u] == stamp) {
          ok = false;
          w = wit({a});
          break;
        }
        seen_row[v] = stamp;
        seen_col[u] = stamp;
      }
    }
    r.add("loop_unique_solvability", ok, std::move(w), "ax = b and xa = b uniquely solvable");
  }
  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (Pos a = 0; a < n && ok; ++a) {
      for (Pos b = 0; b < n && ok; ++b) {
        const Pos aba = loop.op(a, loop.op(b, a));
        for (Pos c = 0; c < n; ++c) {
          if (loop.op(a, loop.op(b, loop.op(a, c))) != loop.op(aba, c)) {
            ok = false;
            w = wit({a, b, c});
            break;
          }
        }
      }
    }
    r.add("bol_identity", ok, std::move(w), std::to_string(n * n * n) + " triples");
  }
  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (Pos a = 0; a < n && ok; ++a) {
      for (Pos b = 0; b < n; ++b) {
        if (loop.inv(loop.op(a, b)) != loop.op(loop.inv(a), loop.inv(b))) {
          ok = false;
          w = wit({a, b});
          break;
        }
      }
    }
    r.add("automorphic_inverse", ok, std::move(w), std::to_string(n * n) + " pairs");
  }
  if (loop.ambient()) {
    const FiniteGroup& g = *loop.ambient();
    bool ok = true;
    std::vector<std::int64_t> w;
    for (Pos a = 0; a < n && ok; ++a) {
      Pos p = 0;
      Elem amb = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        p = loop.op(a, p);
        amb = g.mul(loop.carrier()[a], amb);
        if (loop.carrier()[p] != amb) {
          ok = false;
          w = {a, static_cast<std::int64_t>(k)};
          break;
        }
      }
    }
    r.add("powers_agree", ok, std::move(w), "loop powers equal ambient powers");
  }
  r.set_count("loop_order", static_cast<std::int64_t>(n));
  return r;
}

Perm precession_by_translations(const KLoop& loop, Pos a, Pos b) {
  const Pos ab = loop.op(a, b);
  Perm out(loop.size());
  for (Pos x = 0; x < loop.size(); ++x) out[x] = loop.left_div(ab, loop.op(a, loop.op(b, x)));
  return out;
}

Perm precession_by_conjugation(const KLoop& loop, Pos a, Pos b) {
  if (!loop.ambient()) throw Error(ErrorCode::BadParams, "loop has no ambient group");
  if (!loop.has_square_roots()) throw Error(ErrorCode::NotUniquely2Div, "loop lacks square roots");
  const FiniteGroup& g = *loop.ambient();
  const ElemSet& c = loop.carrier();
  const Elem root_a = c[loop.sqrt(a)];
  const Elem root_b = c[loop.sqrt(b)];
  const Elem root_ab_inv = g.inv(c[loop.sqrt(loop.op(a, b))]);
  const Elem d = g.mul(g.mul(root_b, root_a), root_ab_inv);
  Perm out(loop.size());
  for (Pos x = 0; x < loop.size(); ++x) {
    Pos p = loop.position(g.conj(c[x], d));
    if (p == kNoElem) throw Error(ErrorCode::Internal, "conjugate leaves the carrier", wit({a, b, x}));
    out[x] = p;
  }
  return out;
}

Automorphism precession(const KLoop& loop, Pos a, Pos b) {
  Perm by_translation = precession_by_translations(loop, a, b);
  if (loop.ambient() && loop.has_square_roots()) {
    if (precession_by_conjugation(loop, a, b) != by_translation) {
      throw Error(ErrorCode::Internal, "precession formulas disagree", wit({a, b}));
    }
  }
  return Automorphism::trusted(std::move(by_translation));
}

std::vector<Perm> precession_table(const KLoop& loop) {
  const std::size_t n = loop.size();
  std::vector<Perm> out;
  out.reserve(n * n);
  for (Pos a = 0; a < n; ++a) {
    for (Pos b = 0; b < n; ++b) out.push_back(precession_by_translations(loop, a, b));
  }
  return out;
}

AxiomReport verify_precession_identities(const KLoop& loop,
                                         const std::vector<Automorphism>& auts) {
  const std::size_t n = loop.size();
  const std::vector<Perm> table = precession_table(loop);
  auto delta = [&](Pos a, Pos b) -> const Perm& { return table[a * n + b]; };
  const Perm id = identity_perm(n);
  AxiomReport r;

  {
    std::set<Perm> distinct(table.begin(), table.end());
    bool ok = true;
    std::vector<std::int64_t> w;
    for (const Perm& p : distinct) {
      if (auto bad = automorphism_violation(loop, p)) {
        ok = false;
        w = wit({bad->first, bad->second});
        break;
      }
    }
    r.add("delta_is_automorphism", ok, std::move(w),
          std::to_string(distinct.size()) + " distinct precession maps");
    r.set_count("distinct_precessions", static_cast<std::int64_t>(distinct.size()));
  }

  if (loop.ambient() && loop.has_square_roots()) {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (Pos a = 0; a < n && ok; ++a) {
      for (Pos b = 0; b < n; ++b) {
        if (precession_by_conjugation(loop, a, b) != delta(a, b)) {
          ok = false;
          w = wit({a, b});
          break;
        }
      }
    }
    r.add("conjugation_formula_agrees", ok, std::move(w),
          "translation and conjugation formulas agree on all pairs");
  }

  bool ok_inv = true, ok_absorb = true, ok_anti = true, ok_args = true;
  std::vector<std::int64_t> w_inv, w_absorb, w_anti, w_args;
  for (Pos a = 0; a < n; ++a) {
    if (ok_inv && delta(a, loop.inv(a)) != id) {
      ok_inv = false;
      w_inv = wit({a});
    }
    for (Pos b = 0; b < n; ++b) {
      const Perm& d = delta(a, b);
      if (ok_absorb && delta(a, loop.op(b, a)) != d) {
        ok_absorb = false;
        w_absorb = wit({a, b});
      }
      if (ok_anti) {
        const Perm& e = delta(b, a);
        for (Pos x = 0; x < n; ++x) {
          if (d[e[x]] != x) {
            ok_anti = false;
            w_anti = wit({a, b});
            break;
          }
        }
      }
      if (ok_args && delta(loop.inv(a), loop.inv(b)) != d) {
        ok_args = false;
        w_args = wit({a, b});
      }
    }
  }
  r.add("delta_inverse_pair_trivial", ok_inv, std::move(w_inv), "delta(a, a^-1) = id");
  r.add("delta_absorbs_left_factor", ok_absorb, std::move(w_absorb), "delta(a, b (x) a) = delta(a, b)");
  r.add("delta_antisymmetric", ok_anti, std::move(w_anti), "delta(a, b) = delta(b, a)^-1");
  r.add("delta_inverse_arguments", ok_args, std::move(w_args), "delta(a, b) = delta(a^-1, b^-1)");

  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (std::size_t ai = 0; ai < auts.size() && ok; ++ai) {
      const Automorphism& alpha = auts[ai];
      const Automorphism alpha_inv = alpha.inverse();
      for (Pos a = 0; a < n && ok; ++a) {
        for (Pos b = 0; b < n && ok; ++b) {
          const Perm& lhs_inner = delta(a, b);
          const Perm& rhs = delta(alpha_inv(a), alpha_inv(b));
          for (Pos x = 0; x < n; ++x) {
            if (alpha_inv(lhs_inner[alpha(x)]) != rhs[x]) {
              ok = false;
              w = {static_cast<std::int64_t>(ai), a, b};
              break;
            }
          }
        }
      }
    }
    r.add("automorphism_conjugates_delta", ok, std::move(w),
          std::to_string(auts.size()) + " automorphisms over " + std::to_string(n * n) + " pairs");
  }
  r.set_count("pairs", static_cast<std::int64_t>(n * n));
  return r;
}

std::vector<Perm> permutation_closure(std::size_t degree, const std::vector<Perm>& gens,
                                      std::size_t max_order) {
  std::vector<Perm> elems{identity_perm(degree)};
  std::set<Perm> seen(elems.begin(), elems.end());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next(degree);
      for (std::size_t x = 0; x < degree; ++x) next[x] = g[elems[head][x]];
      if (seen.insert(next).second) {
        elems.push_back(std::move(next));
        if (elems.size() > max_order) {
          throw Error(ErrorCode::TooLarge,
                      "closure exceeds " + std::to_string(max_order) + " elements");
        }
      }
    }
  }
  return elems;
}

std::vector<Automorphism> precession_group(const KLoop& loop, std::size_t max_order) {
  const std::vector<Perm> table = precession_table(loop);
  std::set<Perm> distinct(table.begin(), table.end());
  std::vector<Perm> closure =
      permutation_closure(loop.size(), {distinct.begin(), distinct.end()}, max_order);
  std::vector<Automorphism> out;
  out.reserve(closure.size());
  for (Perm& p : closure) out.push_back(Automorphism::trusted(std::move(p)));
  return out;
}

}  // namespace mockhyp
