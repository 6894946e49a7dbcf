#include "mockhyp/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

namespace mockhyp {

namespace {

Error not_group(const std::string& what, std::vector<std::int64_t> witness = {}) {
  return Error(ErrorCode::NotGroup, what, std::move(witness));
}

std::vector<std::int64_t> wit(std::initializer_list<Elem> xs) {
  return {xs.begin(), xs.end()};
}

// Greedy generating set under right multiplication: every element is a
// left-bracketed product of the returned generators.
std::vector<Elem> greedy_generators(std::size_t n, const std::vector<Elem>& mul) {
  std::vector<char> reached(n, 0);
  std::vector<Elem> reached_list{0};
  std::vector<Elem> gens;
  reached[0] = 1;
  for (Elem candidate = 1; candidate < n; ++candidate) {
    if (reached[candidate]) continue;
    gens.push_back(candidate);
    for (std::size_t idx = 0; idx < reached_list.size(); ++idx) {
      for (Elem gen : gens) {
        Elem y = mul[reached_list[idx] * n + gen];
        if (!reached[y]) {
          reached[y] = 1;
          reached_list.push_back(y);
        }
      }
    }
  }
  return gens;
}

std::optional<std::array<Elem, 3>> light_test(std::size_t n, const std::vector<Elem>& mul) {
  for (Elem a : greedy_generators(n, mul)) {
    for (Elem x = 0; x < n; ++x) {
      Elem xa = mul[x * n + a];
      const Elem* row_xa = &mul[xa * n];
      const Elem* row_x = &mul[x * n];
      const Elem* row_a = &mul[a * n];
      for (Elem y = 0; y < n; ++y) {
        if (row_xa[y] != row_x[row_a[y]]) return std::array<Elem, 3>{x, a, y};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Elem, 3>> full_test(std::size_t n, const std::vector<Elem>& mul) {
  for (Elem x = 0; x < n; ++x) {
    const Elem* row_x = &mul[x * n];
    for (Elem y = 0; y < n; ++y) {
      const Elem* row_xy = &mul[row_x[y] * n];
      const Elem* row_y = &mul[y * n];
      for (Elem z = 0; z < n; ++z) {
        if (row_xy[z] != row_x[row_y[z]]) return std::array<Elem, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ElemSet make_set(std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

bool set_contains(const ElemSet& s, Elem x) {
  return std::binary_search(s.begin(), s.end(), x);
}

bool is_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t default_max_order() {
  if (const char* env = std::getenv("MOCKHYP_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Elem>>& table,
                                           std::vector<std::string> labels,
                                           AssocCheck check) {
  const std::size_t n = table.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw not_group("row " + std::to_string(r) + " has length " +
                      std::to_string(table[r].size()) + ", expected " + std::to_string(n));
    }
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  return from_flat_table(n, std::move(flat), std::move(labels), check);
}

FiniteGroup FiniteGroup::from_flat_table(std::size_t n, std::vector<Elem> mul,
                                         std::vector<std::string> labels,
                                         AssocCheck check) {
  if (n == 0) throw not_group("empty table");
  if (mul.size() != n * n) throw not_group("table is not square");
  for (Elem v : mul) {
    if (v >= n) throw not_group("entry " + std::to_string(v) + " out of range");
  }
  if (!labels.empty() && labels.size() != n) {
    throw not_group("label count does not match order");
  }

  // Two-sided identity.
  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      ok = mul[e * n + x] == x && mul[x * n + e] == x;
    }
    if (ok) identity = e;
  }
  if (!identity) throw not_group("no two-sided identity element");

  if (*identity != 0) {
    // Swap labels 0 and e.
    const Elem e = *identity;
    auto relabel = [e](Elem x) -> Elem { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<Elem> relabeled(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        relabeled[relabel(a) * n + relabel(b)] = relabel(mul[a * n + b]);
      }
    }
    mul = std::move(relabeled);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  std::vector<Elem> inv(n, kNoElem);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (mul[x * n + y] == 0 && mul[y * n + x] == 0) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] == kNoElem) throw not_group("element has no two-sided inverse", wit({x}));
  }

  // Latin square: each row and column is a permutation.
  std::vector<std::uint32_t> seen_row(n, 0), seen_col(n, 0);
  for (Elem r = 0; r < n; ++r) {
    const std::uint32_t stamp = r + 1;
    for (Elem c = 0; c < n; ++c) {
      Elem v = mul[r * n + c];
      if (seen_row[v] == stamp) throw not_group("row is not a permutation", wit({r}));
      seen_row[v] = stamp;
      Elem w = mul[c * n + r];
      if (seen_col[w] == stamp) throw not_group("column is not a permutation", wit({r}));
      seen_col[w] = stamp;
    }
  }

  bool full = check == AssocCheck::Full || (check == AssocCheck::Auto && n <= kFullAssocLimit);
  auto bad = full ? full_test(n, mul) : light_test(n, mul);
  if (bad) {
    auto [x, y, z] = *bad;
    throw not_group("associativity fails", wit({x, y, z}));
  }

  auto data = std::make_shared<Data>();
  data->mul = std::move(mul);
  data->inv = std::move(inv);
  data->labels = std::move(labels);
  return FiniteGroup(n, std::move(data));
}

FiniteGroup FiniteGroup::from_permutation_generators(std::size_t degree,
                                                     const std::vector<Perm>& gens,
                                                     std::size_t max_order) {
  if (degree == 0) throw Error(ErrorCode::NotPermutation, "degree must be positive");
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Perm& g = gens[gi];
    if (g.size() != degree) {
      throw Error(ErrorCode::NotPermutation,
                  "generator " + std::to_string(gi) + " has wrong length",
                  {static_cast<std::int64_t>(gi)});
    }
    std::vector<char> hit(degree, 0);
    for (auto v : g) {
      if (v >= degree || hit[v]) {
        throw Error(ErrorCode::NotPermutation,
                    "generator " + std::to_string(gi) + " is not a permutation",
                    {static_cast<std::int64_t>(gi)});
      }
      hit[v] = 1;
    }
  }

  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  std::vector<Perm> elems{identity};
  std::map<Perm, Elem> index{{identity, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next(degree);
      for (std::size_t x = 0; x < degree; ++x) next[x] = g[elems[head][x]];
      if (index.emplace(next, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > max_order) {
          throw Error(ErrorCode::TooLarge, "closure exceeds " + std::to_string(max_order) +
                                               " elements");
        }
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<Elem> mul(n * n);
  Perm prod(degree);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < degree; ++x) prod[x] = elems[b][elems[a][x]];
      mul[a * n + b] = index.at(prod);
    }
  }
  std::vector<Elem> inv(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (mul[a * n + b] == 0) {
        inv[a] = b;
        break;
      }
    }
  }
  // Composition of permutations is associative; no table check needed.
  auto data = std::make_shared<Data>();
  data->mul = std::move(mul);
  data->inv = std::move(inv);
  data->perm_rep = PermRep{degree, std::move(elems)};
  return FiniteGroup(n, std::move(data));
}

Elem FiniteGroup::power(Elem x, std::int64_t k) const {
  Elem base = k < 0 ? inv(x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Elem result = 0;
  while (e) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Elem x) const {
  std::size_t k = 1;
  for (Elem y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

std::string FiniteGroup::label(Elem x) const {
  if (!data_->labels.empty()) return data_->labels[x];
  return std::to_string(x);
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> out(n_);
  for (Elem a = 0; a < n_; ++a) out[a].assign(row(a).begin(), row(a).end());
  return out;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return n_ == other.n_ && data_->mul == other.data_->mul;
}

FiniteGroup FiniteGroup::with_perm_rep(PermRep rep) const {
  if (rep.images.size() != n_) {
    throw Error(ErrorCode::NotPermutation, "one image table per element required");
  }
  for (Elem g = 0; g < n_; ++g) {
    if (rep.images[g].size() != rep.degree) {
      throw Error(ErrorCode::NotPermutation, "image table has wrong degree", {g});
    }
  }
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      const Perm& ab = rep.images[mul(a, b)];
      for (std::size_t x = 0; x < rep.degree; ++x) {
        if (ab[x] != rep.images[b][rep.images[a][x]]) {
          throw Error(ErrorCode::NotPermutation, "action is not a homomorphism", {a, b});
        }
      }
    }
  }
  std::map<Perm, Elem> distinct;
  for (Elem g = 0; g < n_; ++g) {
    if (!distinct.emplace(rep.images[g], g).second) {
      throw Error(ErrorCode::NotPermutation, "action is not faithful", {g});
    }
  }
  auto data = std::make_shared<Data>(*data_);
  data->perm_rep = std::move(rep);
  return FiniteGroup(n_, std::move(data));
}

std::optional<std::array<Elem, 3>> find_nonassociative_triple(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Elem x = 0; x < n; ++x) {
    auto row_x = g.row(x);
    for (Elem y = 0; y < n; ++y) {
      auto row_xy = g.row(row_x[y]);
      auto row_y = g.row(y);
      for (Elem z = 0; z < n; ++z) {
        if (row_xy[z] != row_x[row_y[z]]) return std::array<Elem, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

Subgroup::Subgroup(FiniteGroup parent, ElemSet members)
    : parent_(std::move(parent)), members_(make_set(std::move(members))) {
  if (!is_subgroup(parent_, members_)) {
    throw Error(ErrorCode::NotSubgroup, "set is not closed under products and inverses");
  }
}

InvolutoryAutomorphism::InvolutoryAutomorphism(FiniteGroup parent, std::vector<Elem> images)
    : parent_(std::move(parent)), images_(std::move(images)) {
  const std::size_t n = parent_.order();
  if (images_.size() != n) throw Error(ErrorCode::NotAutomorphism, "wrong image count");
  for (Elem x = 0; x < n; ++x) {
    if (images_[x] >= n || images_[images_[x]] != x) {
      throw Error(ErrorCode::NotAutomorphism, "map does not square to the identity", {x});
    }
    if (images_[x] != x) order_two_ = true;
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (images_[parent_.mul(x, y)] != parent_.mul(images_[x], images_[y])) {
        throw Error(ErrorCode::NotAutomorphism, "map is not a homomorphism", {x, y});
      }
    }
  }
}

ElemSet InvolutoryAutomorphism::inverted() const {
  ElemSet out;
  for (Elem x = 0; x < parent_.order(); ++x) {
    if (images_[x] == parent_.inv(x)) out.push_back(x);
  }
  return out;
}

ElemSet InvolutoryAutomorphism::fixed() const {
  ElemSet out;
  for (Elem x = 0; x < parent_.order(); ++x) {
    if (images_[x] == x) out.push_back(x);
  }
  return out;
}

ElemSet conjugacy_class(const FiniteGroup& g, Elem x) {
  std::vector<Elem> out;
  out.reserve(g.order());
  for (Elem h = 0; h < g.order(); ++h) out.push_back(g.conj(x, h));
  return make_set(std::move(out));
}

std::vector<ElemSet> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ElemSet> classes;
  std::vector<char> done(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    ElemSet c = conjugacy_class(g, x);
    for (Elem y : c) done[y] = 1;
    classes.push_back(std::move(c));
  }
  return classes;
}

ElemSet involutions(const FiniteGroup& g) {
  ElemSet out;
  for (Elem x = 1; x < g.order(); ++x) {
    if (g.mul(x, x) == 0) out.push_back(x);
  }
  return out;
}

Subgroup centralizer(const FiniteGroup& g, const ElemSet& s) {
  ElemSet out;
  for (Elem h = 0; h < g.order(); ++h) {
    bool ok = std::all_of(s.begin(), s.end(),
                          [&](Elem x) { return g.mul(h, x) == g.mul(x, h); });
    if (ok) out.push_back(h);
  }
  return Subgroup(g, std::move(out));
}

Subgroup normalizer_of_set(const FiniteGroup& g, const ElemSet& s) {
  std::vector<char> mask(g.order(), 0);
  for (Elem x : s) mask[x] = 1;
  ElemSet out;
  for (Elem h = 0; h < g.order(); ++h) {
    bool ok = std::all_of(s.begin(), s.end(), [&](Elem x) { return mask[g.conj(x, h)]; });
    if (ok) out.push_back(h);
  }
  return Subgroup(g, std::move(out));
}

Subgroup subgroup_closure(const FiniteGroup& g, const ElemSet& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Elem s : gens) {
      Elem y = g.mul(members[head], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

Subgroup center(const FiniteGroup& g) {
  ElemSet all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  return centralizer(g, all);
}

Subgroup whole_group(const FiniteGroup& g) {
  ElemSet all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(g, std::move(all));
}

Subgroup derived_subgroup(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  std::vector<Elem> comms;
  for (Elem a : s.members()) {
    for (Elem b : s.members()) {
      comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  }
  return subgroup_closure(g, make_set(std::move(comms)));
}

bool is_solvable(const Subgroup& s) {
  Subgroup current = s;
  while (!current.is_trivial()) {
    Subgroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

bool is_subgroup(const FiniteGroup& g, const ElemSet& s) {
  if (s.empty() || !set_contains(s, 0)) return false;
  std::vector<char> mask(g.order(), 0);
  for (Elem x : s) {
    if (x >= g.order()) return false;
    mask[x] = 1;
  }
  for (Elem a : s) {
    if (!mask[g.inv(a)]) return false;
    for (Elem b : s) {
      if (!mask[g.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_normal_set(const FiniteGroup& g, const ElemSet& s) {
  return normalizer_of_set(g, s).order() == g.order();
}

bool is_commutative_set(const FiniteGroup& g, const ElemSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.mul(s[i], s[j]) != g.mul(s[j], s[i])) return false;
    }
  }
  return true;
}

ElemSet product_set(const FiniteGroup& g, const ElemSet& a, const ElemSet& b) {
  std::vector<char> mask(g.order(), 0);
  for (Elem x : a) {
    for (Elem y : b) mask[g.mul(x, y)] = 1;
  }
  ElemSet out;
  for (Elem z = 0; z < g.order(); ++z) {
    if (mask[z]) out.push_back(z);
  }
  return out;
}

ElemSet left_translate(const FiniteGroup& g, Elem x, const ElemSet& s) {
  std::vector<Elem> out;
  out.reserve(s.size());
  for (Elem y : s) out.push_back(g.mul(x, y));
  return make_set(std::move(out));
}

ElemSet conjugate_set(const FiniteGroup& g, const ElemSet& s, Elem x) {
  std::vector<Elem> out;
  out.reserve(s.size());
  for (Elem y : s) out.push_back(g.conj(y, x));
  return make_set(std::move(out));
}

bool is_uniquely_2_divisible(const FiniteGroup& g, const ElemSet& s) {
  std::vector<char> mask(g.order(), 0), hit(g.order(), 0);
  for (Elem x : s) mask[x] = 1;
  for (Elem x : s) {
    Elem sq = g.mul(x, x);
    if (!mask[sq] || hit[sq]) return false;
    hit[sq] = 1;
  }
  return true;
}

std::vector<Elem> square_root_table(const FiniteGroup& g, const ElemSet& s) {
  std::vector<char> mask(g.order(), 0);
  for (Elem x : s) mask[x] = 1;
  std::vector<Elem> root(g.order(), kNoElem);
  for (Elem x : s) {
    Elem sq = g.mul(x, x);
    if (!mask[sq]) {
      throw Error(ErrorCode::NotUniquely2Div, "square leaves the set", {x, sq});
    }
    if (root[sq] != kNoElem) {
      throw Error(ErrorCode::NotUniquely2Div, "element has two square roots",
                  {sq, root[sq], x});
    }
    root[sq] = x;
  }
  return root;
}

Elem sqrt_in(const FiniteGroup& g, const ElemSet& s, Elem x) {
  std::vector<Elem> roots;
  for (Elem y : s) {
    if (g.mul(y, y) == x) roots.push_back(y);
  }
  if (roots.size() != 1) {
    std::vector<std::int64_t> w{x};
    w.insert(w.end(), roots.begin(), roots.end());
    throw Error(ErrorCode::NotUniquely2Div,
                "element has " + std::to_string(roots.size()) + " square roots in the set",
                std::move(w));
  }
  return roots.front();
}

std::pair<Elem, Elem> neumann_decompose(const InvolutoryAutomorphism& alpha, Elem x) {
  const FiniteGroup& g = alpha.parent();
  ElemSet all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  const std::vector<Elem> roots = square_root_table(g, all);
  Elem a = roots[g.mul(x, g.inv(alpha(x)))];
  Elem b = g.mul(g.inv(a), x);
  return {a, b};
}

}  // namespace mockhyp
