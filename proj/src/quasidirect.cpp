#include "mockhyp/quasidirect.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace mockhyp {

namespace {

// The x with x (x) y = z, by scanning the column of y.
Pos right_div(const KLoop& loop, Pos z, Pos y) {
  for (Pos x = 0; x < loop.size(); ++x) {
    if (loop.op(x, y) == z) return x;
  }
  return kNoElem;
}

}  // namespace

Automorphism inversion_automorphism(const KLoop& loop) {
  Perm p(loop.size());
  for (Pos x = 0; x < loop.size(); ++x) p[x] = loop.inv(x);
  return Automorphism(loop, std::move(p));
}

std::vector<Automorphism> conjugation_automorphisms(const FiniteGroup& g, const KLoop& loop) {
  if (!loop.ambient() || !loop.ambient()->same_table(g) || loop.size() != g.order()) {
    throw Error(ErrorCode::BadParams, "loop carrier must be the whole group");
  }
  const Subgroup z = center(g);
  if (z.order() != 1) {
    throw Error(ErrorCode::NontrivialCenter, "conjugation action is not faithful",
                {z.members().begin(), z.members().end()});
  }
  std::vector<Automorphism> out;
  out.reserve(g.order());
  for (Elem h = 0; h < g.order(); ++h) {
    Perm p(loop.size());
    for (Pos x = 0; x < loop.size(); ++x) {
      p[x] = loop.position(g.mul(g.mul(h, loop.carrier()[x]), g.inv(h)));
    }
    out.emplace_back(loop, std::move(p));
  }
  return out;
}

std::vector<Automorphism> conjugations_with_inversion(const FiniteGroup& g, const KLoop& loop) {
  std::vector<Automorphism> out = conjugation_automorphisms(g, loop);
  const Automorphism eps = inversion_automorphism(loop);
  const std::size_t m = out.size();
  for (std::size_t k = 0; k < m; ++k) out.push_back(eps.compose(out[k]));
  return out;
}

QuasidirectGroup::QuasidirectGroup(KLoop loop, std::vector<Automorphism> auts)
    : loop_(std::move(loop)) {
  const std::size_t n = loop_.size();
  {
    std::set<Perm> seen;
    for (Automorphism& a : auts) {
      if (a.images().size() != n) {
        throw Error(ErrorCode::NotAutomorphism, "automorphism has the wrong degree");
      }
      if (seen.insert(a.images()).second) auts_.push_back(std::move(a));
    }
  }
  auto id_it = std::find_if(auts_.begin(), auts_.end(),
                            [](const Automorphism& a) { return a.is_identity(); });
  if (id_it == auts_.end()) {
    throw Error(ErrorCode::AutomorphismsNotClosed, "automorphism list lacks the identity");
  }
  std::rotate(auts_.begin(), id_it, id_it + 1);

  const std::size_t m = auts_.size();
  std::map<Perm, std::size_t> index;
  for (std::size_t k = 0; k < m; ++k) index.emplace(auts_[k].images(), k);

  compose_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto it = index.find(auts_[i].compose(auts_[j]).images());
      if (it == index.end()) {
        throw Error(ErrorCode::AutomorphismsNotClosed, "composition leaves the list",
                    {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
      }
      compose_[i * m + j] = it->second;
    }
  }
  inverse_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (compose_[i * m + j] == 0) {
        inverse_[i] = j;
        break;
      }
    }
  }

  delta_.resize(n * n);
  for (Pos a = 0; a < n; ++a) {
    for (Pos b = 0; b < n; ++b) {
      auto it = index.find(precession_by_translations(loop_, a, b));
      if (it == index.end()) {
        throw Error(ErrorCode::PrecessionNotInA, "precession map missing from the list", {a, b});
      }
      delta_[a * n + b] = it->second;
    }
  }

  {
    Perm inversion(n);
    for (Pos x = 0; x < n; ++x) inversion[x] = loop_.inv(x);
    auto it = index.find(inversion);
    if (it != index.end()) epsilon_ = it->second;
  }

  const std::size_t order = n * m;
  std::vector<Elem> table(order * order);
  for (Pos a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < m; ++i) {
      const Elem x = encode(a, i);
      for (Pos b = 0; b < n; ++b) {
        const Pos moved = auts_[i](b);
        const Pos first = loop_.op(a, moved);
        const std::size_t d = delta_[a * n + moved];
        for (std::size_t j = 0; j < m; ++j) {
          table[x * order + encode(b, j)] = encode(first, compose_[d * m + compose_[i * m + j]]);
        }
      }
    }
  }
  std::vector<std::string> labels(order);
  for (Pos a = 0; a < n; ++a) {
    const std::string point =
        loop_.ambient() ? loop_.ambient()->label(loop_.carrier()[a]) : std::to_string(a);
    for (std::size_t i = 0; i < m; ++i) {
      labels[encode(a, i)] = "(" + point + "," + std::to_string(i) + ")";
    }
  }
  group_ = FiniteGroup::from_flat_table(order, std::move(table), std::move(labels));

  for (Pos a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t ii = inverse_[i];
      if (group_->inv(encode(a, i)) != encode(auts_[ii](loop_.inv(a)), ii)) {
        throw Error(ErrorCode::Internal, "inverse formula disagrees with the table",
                    {a, static_cast<std::int64_t>(i)});
      }
    }
  }
}

std::optional<std::size_t> QuasidirectGroup::find_automorphism(const Automorphism& alpha) const {
  for (std::size_t k = 0; k < auts_.size(); ++k) {
    if (auts_[k] == alpha) return k;
  }
  return std::nullopt;
}

Elem QuasidirectGroup::iota() const {
  if (!epsilon_) throw Error(ErrorCode::NotAutomorphism, "inversion is not in the automorphism list");
  return encode(0, *epsilon_);
}

ElemSet QuasidirectGroup::expected_involutions() const {
  ElemSet out;
  // On a loop of exponent 1 inversion is the identity map and pairs with
  // it are not involutions.
  if (!epsilon_ || *epsilon_ == 0) return out;
  for (Pos a = 0; a < loop_.size(); ++a) out.push_back(encode(a, *epsilon_));
  return make_set(std::move(out));
}

AxiomReport verify_quasidirect_involutions(const QuasidirectGroup& q) {
  const FiniteGroup& g = q.group();
  const KLoop& loop = q.loop();
  const std::size_t n = loop.size();
  const std::size_t m = q.aut_count();
  const Elem iota = q.iota();
  const std::size_t eps = *q.epsilon_id();
  AxiomReport r;

  const ElemSet j_expected = q.expected_involutions();
  const ElemSet j_actual = involutions(g);
  r.add("involutions_are_loop_times_epsilon", j_actual == j_expected, {},
        std::to_string(j_actual.size()) + " involutions");

  {
    ElemSet expected;
    for (std::size_t k = 0; k < m; ++k) expected.push_back(q.encode(0, k));
    const Subgroup cen = centralizer(g, {iota});
    r.add("centralizer_of_iota", cen.members() == make_set(expected), {},
          std::to_string(cen.order()) + " elements");
  }

  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (Pos a = 0; a < n && ok; ++a) {
      const Pos root_a_inv = loop.sqrt(loop.inv(a));
      for (Pos b = 0; b < n; ++b) {
        const Pos s = loop.op(b, root_a_inv);
        const Elem expected = q.encode(loop.op(s, s), eps);
        const Elem bx = q.encode(b, eps);
        if (g.mul(g.mul(bx, q.encode(a, eps)), bx) != expected) {
          ok = false;
          w = {a, b};
          break;
        }
      }
    }
    r.add("conjugation_formula", ok, std::move(w), "(b,e)(a,e)(b,e) = ((b (x) a^-1/2)^2, e)");
  }

  {
    bool ok = true;
    std::vector<std::int64_t> w;
    std::size_t pairs = 0;
    for (Pos a = 0; a < n && ok && eps != 0; ++a) {
      const Pos root_a_inv = loop.sqrt(loop.inv(a));
      const Elem i = q.encode(a, eps);
      for (Pos c = 0; c < n; ++c) {
        const Elem j = q.encode(c, eps);
        std::size_t count = 0;
        Elem found = 0;
        for (Pos b = 0; b < n; ++b) {
          const Elem k = q.encode(b, eps);
          if (g.conj(i, k) == j) {
            ++count;
            found = k;
          }
        }
        const Pos solved = right_div(loop, loop.sqrt(c), root_a_inv);
        if (count != 1 || solved == kNoElem || q.encode(solved, eps) != found) {
          ok = false;
          w = {a, c};
          break;
        }
        ++pairs;
      }
    }
    r.add("regular_conjugation", ok, std::move(w),
          std::to_string(pairs) + " pairs with a unique conjugating involution");
    r.set_count("regular_pairs", static_cast<std::int64_t>(pairs));
  }

  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (Pos a = 0; a < n && ok; ++a) {
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t ii = q.inverse_id(i);
        if (g.inv(q.encode(a, i)) != q.encode(q.automorphisms()[ii](loop.inv(a)), ii)) {
          ok = false;
          w = {a, static_cast<std::int64_t>(i)};
          break;
        }
      }
    }
    r.add("inverse_formula", ok, std::move(w), "(a,alpha)^-1 = (alpha^-1(a^-1), alpha^-1)");
  }
  r.set_count("group_order", static_cast<std::int64_t>(g.order()));
  r.set_count("involutions", static_cast<std::int64_t>(j_actual.size()));
  return r;
}

NaturalAction natural_action(const QuasidirectGroup& q) {
  const FiniteGroup& g = q.group();
  const KLoop& loop = q.loop();
  const std::size_t n = loop.size();
  NaturalAction out;
  out.images.resize(g.order(), Perm(n));
  for (Elem x = 0; x < g.order(); ++x) {
    auto [a, i] = q.decode(x);
    const Automorphism& alpha = q.automorphisms()[i];
    for (Pos p = 0; p < n; ++p) out.images[x][p] = loop.op(a, alpha(p));
  }

  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (Elem x = 0; x < g.order() && ok; ++x) {
      for (Elem y = 0; y < g.order(); ++y) {
        const Perm& xy = out.images[g.mul(x, y)];
        const Perm& px = out.images[x];
        const Perm& py = out.images[y];
        bool same = true;
        for (Pos p = 0; p < n && same; ++p) same = xy[p] == px[py[p]];
        if (!same) {
          ok = false;
          w = {x, y};
          break;
        }
      }
    }
    out.report.add("homomorphism", ok, std::move(w), "act(gh) = act(g) o act(h)");
  }
  {
    std::map<Perm, Elem> seen;
    bool ok = true;
    std::vector<std::int64_t> w;
    for (Elem x = 0; x < g.order(); ++x) {
      auto [it, inserted] = seen.emplace(out.images[x], x);
      if (!inserted) {
        ok = false;
        w = {it->second, x};
        break;
      }
    }
    out.report.add("faithful", ok, std::move(w), std::to_string(seen.size()) + " distinct maps");
  }
  {
    std::vector<char> hit(n, 0);
    for (Elem x = 0; x < g.order(); ++x) hit[out.images[x][0]] = 1;
    const bool ok = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    out.report.add("transitive", ok, {}, "orbit of the neutral element");
  }
  return out;
}

}  // namespace mockhyp
