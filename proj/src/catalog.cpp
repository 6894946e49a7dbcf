#include "mockhyp/catalog.hpp"

#include <algorithm>
#include <array>
#include <regex>
#include <sstream>
#include <string>

#include "mockhyp/geometry.hpp"

namespace mockhyp {

namespace {

// Powers of a primitive element; entries are base-3 codes.
// GF(9) = F3[x]/(x^2 + 1), generator 1 + x.
constexpr std::array<std::uint32_t, 8> kExp9 = {1, 4, 6, 7, 2, 8, 3, 5};
constexpr std::uint64_t kExp9Fnv = 0x40d880a00dcc05e5ull;

// GF(27) = F3[x]/(x^3 - x - 1), generator -x.
constexpr std::array<std::uint32_t, 26> kExp27 = {1,  6,  9,  8,  12, 26, 16, 14, 20,
                                                  7,  15, 17, 11, 2,  3,  18, 4,  24,
                                                  13, 23, 25, 10, 5,  21, 22, 19};
constexpr std::uint64_t kExp27Fnv = 0x9513c8dbb73ab788ull;

// a o b over GF(9) codes.
constexpr std::array<std::uint32_t, 81> kNearField9 = {
    0, 0, 0, 0, 0, 0, 0, 0, 0,  //
    0, 1, 2, 3, 4, 5, 6, 7, 8,  //
    0, 2, 1, 6, 8, 7, 3, 5, 4,  //
    0, 3, 6, 2, 7, 4, 1, 8, 5,  //
    0, 4, 8, 5, 2, 6, 7, 3, 1,  //
    0, 5, 7, 8, 3, 2, 4, 1, 6,  //
    0, 6, 3, 1, 5, 8, 2, 4, 7,  //
    0, 7, 5, 4, 6, 1, 8, 2, 3,  //
    0, 8, 4, 7, 1, 3, 5, 6, 2,  //
};
constexpr std::uint64_t kNearField9Fnv = 0x52f8c9163e8a7297ull;

template <std::size_t N>
std::uint64_t fnv1a(const std::array<std::uint32_t, N>& values) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint32_t v : values) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return h;
}

template <std::size_t N>
void check_table(const std::array<std::uint32_t, N>& values, std::uint64_t expected,
                 const char* what) {
  if (fnv1a(values) != expected) {
    throw Error(ErrorCode::Internal, std::string("checksum mismatch in ") + what);
  }
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

template <std::size_t N>
SmallField extension_field(std::uint32_t q, std::uint32_t p, std::uint32_t degree,
                           const std::array<std::uint32_t, N>& exp) {
  SmallField f{q, p, std::vector<std::uint32_t>(q * q), std::vector<std::uint32_t>(q * q, 0)};
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      std::uint32_t sum = 0, scale = 1, x = a, y = b;
      for (std::uint32_t k = 0; k < degree; ++k) {
        sum += ((x % p + y % p) % p) * scale;
        x /= p;
        y /= p;
        scale *= p;
      }
      f.add[a * q + b] = sum;
    }
  }
  std::vector<std::uint32_t> log(q, 0);
  for (std::uint32_t k = 0; k < N; ++k) log[exp[k]] = k;
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) f.mul[a * q + b] = exp[(log[a] + log[b]) % N];
  }
  return f;
}

// Maps x -> m o x + b (right action), for a list of multipliers with 1
// first. mult(a, c) is the multiplier product "a then c" and apply(x, a)
// applies multiplier a to point x.
template <class Mult, class Apply>
FiniteGroup affine_maps(std::uint32_t q, const SmallField& field,
                        const std::vector<std::uint32_t>& multipliers, Mult mult, Apply apply) {
  const std::size_t m = multipliers.size();
  const std::size_t n = m * q;
  std::vector<std::uint32_t> index_of(q, kNoElem);
  for (std::size_t k = 0; k < m; ++k) index_of[multipliers[k]] = static_cast<std::uint32_t>(k);

  PermRep rep{q, std::vector<Perm>(n, Perm(q))};
  std::vector<std::string> labels(n);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::size_t e = k * q + b;
      for (std::uint32_t x = 0; x < q; ++x) rep.images[e][x] = field.plus(apply(x, multipliers[k]), b);
      labels[e] = std::to_string(multipliers[k]) + "x+" + std::to_string(b);
    }
  }
  std::vector<Elem> table(n * n);
  for (std::size_t k1 = 0; k1 < m; ++k1) {
    for (std::uint32_t b1 = 0; b1 < q; ++b1) {
      for (std::size_t k2 = 0; k2 < m; ++k2) {
        const std::uint32_t a = mult(multipliers[k1], multipliers[k2]);
        const std::uint32_t ka = index_of[a];
        if (ka == kNoElem) throw Error(ErrorCode::Internal, "multipliers not closed");
        for (std::uint32_t b2 = 0; b2 < q; ++b2) {
          const std::uint32_t b = field.plus(apply(b1, multipliers[k2]), b2);
          table[(k1 * q + b1) * n + (k2 * q + b2)] = static_cast<Elem>(ka * q + b);
        }
      }
    }
  }
  FiniteGroup g = FiniteGroup::from_flat_table(n, std::move(table), std::move(labels));
  return g.with_perm_rep(std::move(rep));
}

FiniteGroup field_affine(const SmallField& f, const std::vector<std::uint32_t>& multipliers) {
  return affine_maps(
      f.q, f, multipliers, [&](std::uint32_t a, std::uint32_t c) { return f.times(c, a); },
      [&](std::uint32_t x, std::uint32_t a) { return f.times(a, x); });
}

std::vector<std::uint32_t> units(const SmallField& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 1; a < f.q; ++a) out.push_back(a);
  return out;
}

std::uint32_t primitive_root(std::uint32_t p) {
  for (std::uint32_t g = 1; g < p; ++g) {
    std::uint32_t x = 1, order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  return 1;
}

void check_frob_params(std::uint32_t p, std::uint32_t d) {
  if (p < 3 || !is_prime(p) || d < 3 || d % 2 == 0 || (p - 1) % d != 0) {
    throw Error(ErrorCode::BadParams, "need an odd prime p and an odd divisor d > 1 of p - 1",
                {p, d});
  }
  if (static_cast<std::uint64_t>(p) * d > default_max_order()) {
    throw Error(ErrorCode::TooLarge, "group order exceeds the configured cap");
  }
}

std::vector<std::uint32_t> frob_multipliers(std::uint32_t p, std::uint32_t d) {
  std::uint32_t g = primitive_root(p), u = 1;
  for (std::uint32_t k = 0; k < (p - 1) / d; ++k) u = u * g % p;
  std::vector<std::uint32_t> out{1};
  for (std::uint32_t k = 1; k < d; ++k) out.push_back(out.back() * u % p);
  return out;
}

std::vector<std::uint32_t> parse_args(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty() || item.size() > 9 || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw Error(ErrorCode::Parse, "bad catalog argument '" + item + "'");
    }
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return out;
}

}  // namespace

ActionGroup::ActionGroup(FiniteGroup g) : group_(std::move(g)) {
  if (!group_.perm_rep()) throw Error(ErrorCode::NotPermutation, "group has no permutation action");
}

ElemSet ActionGroup::stabilizer(std::uint32_t x) const {
  ElemSet out;
  for (Elem g = 0; g < group_.order(); ++g) {
    if (image(g, x) == x) out.push_back(g);
  }
  return out;
}

SmallField small_field(std::uint32_t q) {
  if (q == 9) {
    check_table(kExp9, kExp9Fnv, "GF(9)");
    return extension_field(9, 3, 2, kExp9);
  }
  if (q == 27) {
    check_table(kExp27, kExp27Fnv, "GF(27)");
    return extension_field(27, 3, 3, kExp27);
  }
  if (q > 97 || !is_prime(q)) throw Error(ErrorCode::UnsupportedQ, "unsupported field order", {q});
  SmallField f{q, q, std::vector<std::uint32_t>(q * q), std::vector<std::uint32_t>(q * q)};
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      f.add[a * q + b] = (a + b) % q;
      f.mul[a * q + b] = a * b % q;
    }
  }
  return f;
}

const std::vector<std::uint32_t>& nearfield9_table() {
  static const std::vector<std::uint32_t> table = [] {
    check_table(kNearField9, kNearField9Fnv, "near-field of order 9");
    return std::vector<std::uint32_t>(kNearField9.begin(), kNearField9.end());
  }();
  return table;
}

FiniteGroup cyclic_group(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::BadParams, "order must be positive");
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  return FiniteGroup::from_flat_table(n, std::move(table));
}

FiniteGroup abelian_inversion_extension(const std::vector<std::uint32_t>& orders) {
  std::uint64_t size = 1;
  for (std::uint32_t k : orders) {
    if (k == 0) throw Error(ErrorCode::BadParams, "cyclic orders must be positive");
    if (k % 2 == 0) throw Error(ErrorCode::EvenOrder, "cyclic order is even", {k});
    size *= k;
    if (2 * size > default_max_order()) throw Error(ErrorCode::TooLarge, "group too large");
  }
  const std::uint32_t a_size = static_cast<std::uint32_t>(size);
  // Mixed-radix digits of an element of A.
  auto combine = [&](std::uint32_t x, std::uint32_t y, bool negate_y) {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t k : orders) {
      const std::uint32_t dx = x % k, dy = y % k;
      out += ((dx + (negate_y ? (k - dy) % k : dy)) % k) * scale;
      x /= k;
      y /= k;
      scale *= k;
    }
    return out;
  };
  const std::uint32_t n = 2 * a_size;
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (std::uint32_t s = 0; s < 2; ++s) {
    for (std::uint32_t a = 0; a < a_size; ++a) {
      for (std::uint32_t t = 0; t < 2; ++t) {
        for (std::uint32_t b = 0; b < a_size; ++b) {
          const std::uint32_t c = combine(a, b, s == 1);
          table[(s * a_size + a) * n + (t * a_size + b)] = ((s + t) % 2) * a_size + c;
        }
      }
    }
  }
  return FiniteGroup::from_flat_table(n, std::move(table));
}

ActionGroup agl1(std::uint32_t q) {
  const SmallField f = small_field(q);
  return ActionGroup(field_affine(f, units(f)));
}

ActionGroup frobenius_semidirect_action(std::uint32_t p, std::uint32_t d) {
  check_frob_params(p, d);
  return ActionGroup(field_affine(small_field(p), frob_multipliers(p, d)));
}

FrobeniusPair frobenius_semidirect(std::uint32_t p, std::uint32_t d) {
  ActionGroup a = frobenius_semidirect_action(p, d);
  return FrobeniusPair(a.group(), a.stabilizer(0));
}

ActionGroup nearfield_j9_group() {
  const SmallField f = small_field(9);
  const auto& nf = nearfield9_table();
  return ActionGroup(affine_maps(
      9, f, units(f), [&](std::uint32_t a, std::uint32_t c) { return nf[a * 9 + c]; },
      [&](std::uint32_t x, std::uint32_t a) { return nf[x * 9 + a]; }));
}

bool is_sharply_2_transitive(const ActionGroup& a) {
  const std::size_t n = a.degree();
  const FiniteGroup& g = a.group();
  if (n < 2 || g.order() != n * (n - 1)) return false;
  std::vector<char> reached(n * n, 0);
  for (Elem x = 0; x < g.order(); ++x) reached[a.image(x, 0) * n + a.image(x, 1)] = 1;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && !reached[u * n + v]) return false;
    }
  }
  return true;
}

std::uint32_t permutation_characteristic(const ActionGroup& a) {
  if (!is_sharply_2_transitive(a)) throw Error(ErrorCode::BadParams, "action is not sharply 2-transitive");
  const FiniteGroup& g = a.group();
  const ElemSet inv = involutions(g);
  std::size_t with_fixed = 0;
  for (Elem i : inv) {
    std::size_t fixed = 0;
    for (std::uint32_t x = 0; x < a.degree(); ++x) fixed += a.image(i, x) == x ? 1 : 0;
    if (fixed > 1) throw Error(ErrorCode::InconsistentChar, "involution with several fixed points", {i});
    with_fixed += fixed;
  }
  if (with_fixed == 0) return 2;
  if (with_fixed != inv.size()) {
    throw Error(ErrorCode::InconsistentChar, "only some involutions have fixed points");
  }
  std::size_t order = 0;
  for (Elem i : inv) {
    for (Elem j : inv) {
      if (i == j) continue;
      const std::size_t o = g.element_order(g.mul(i, j));
      if (order == 0) order = o;
      if (o != order) throw Error(ErrorCode::InconsistentChar, "translations differ in order", {i, j});
    }
  }
  return static_cast<std::uint32_t>(order);
}

AxiomReport verify_geometry_conditions(const ActionGroup& a) {
  const std::uint32_t ch = permutation_characteristic(a);
  if (ch == 2) throw Error(ErrorCode::CharacteristicTwo, "involutions have no fixed points");
  const FiniteGroup& g = a.group();
  const ElemSet j = involutions(g);
  const ElemSet j2 = product_set(g, j, j);
  ElemSet j2_star(j2.begin() + 1, j2.end());  // j2 contains 1 at the front
  AxiomReport r;
  auto commute = [&](Elem x, Elem y) { return g.mul(x, y) == g.mul(y, x); };

  bool cond_a = true;
  for (Elem y : j2_star) {
    ElemSet nbrs;
    for (Elem x : j2_star) {
      if (commute(x, y)) nbrs.push_back(x);
    }
    if (!is_commutative_set(g, nbrs)) {
      cond_a = false;
      break;
    }
  }

  bool cond_b = true, cond_c = true;
  for (Elem i : j) {
    const ElemSet ij = left_translate(g, i, j);
    for (Elem k : j) {
      if (i == k) continue;
      const ElemSet meet = set_intersection(ij, left_translate(g, k, j));
      if (cond_b && !is_uniquely_2_divisible(g, meet)) cond_b = false;
      if (cond_c) {
        const ElemSet cen = centralizer(g, {g.mul(i, k)}).members();
        bool ok = cen == meet && is_commutative_set(g, cen);
        for (Elem x : cen) ok = ok && g.conj(x, k) == g.inv(x);
        cond_c = ok;
      }
    }
  }

  bool cond_d = true;
  {
    std::vector<int> owner(g.order(), -1);
    std::vector<ElemSet> blocks;
    for (Elem s : j2_star) {
      ElemSet c = centralizer(g, {s}).members();
      c.erase(c.begin());
      if (std::find(blocks.begin(), blocks.end(), c) == blocks.end()) blocks.push_back(std::move(c));
    }
    std::size_t covered = 0;
    for (std::size_t b = 0; b < blocks.size() && cond_d; ++b) {
      for (Elem x : blocks[b]) {
        if (owner[x] != -1 || !set_contains(j2_star, x)) {
          cond_d = false;
          break;
        }
        owner[x] = static_cast<int>(b);
        ++covered;
      }
    }
    cond_d = cond_d && covered == j2_star.size();
  }

  r.add("a_commuting_transitive", cond_a, {}, "commuting is transitive on nontrivial translations");
  r.add("b_intersections_2div", cond_b, {}, "iJ meet kJ uniquely 2-divisible");
  r.add("c_centralizers_abelian_inverted", cond_c, {}, "Cen(ik) = iJ meet kJ, abelian, inverted by k");
  r.add("d_centralizer_partition", cond_d, {}, "centralizers partition the nontrivial translations");
  r.add("conditions_agree", cond_a == cond_b && cond_b == cond_c && cond_c == cond_d, {},
        "the four line conditions agree");

  r.merge(verify_mhrs(g, j), "mhrs");

  const Geometry geo = complete_geometry(g, j);
  {
    bool ok = true;
    std::vector<std::int64_t> w;
    for (std::size_t l = 0; l < geo.lines().size() && ok; ++l) {
      const Line& line = geo.lines()[l];
      for (Elem i : j) {
        const Line moved = conjugate_set(g, line, i);
        for (Elem k : j) {
          if (k <= i || conjugate_set(g, line, k) != moved) continue;
          if (!set_contains(line, i) || !set_contains(line, k)) {
            ok = false;
            w = {static_cast<std::int64_t>(l), i, k};
            break;
          }
        }
        if (!ok) break;
      }
    }
    r.add("equal_reflections_on_line", ok, std::move(w), "line^i = line^k with i != k forces i, k on the line");
  }

  const bool translations_subgroup = is_subgroup(g, j2);
  ElemSet fpf{0};
  for (Elem x = 1; x < g.order(); ++x) {
    bool moves_all = true;
    for (std::uint32_t p = 0; p < a.degree() && moves_all; ++p) moves_all = a.image(x, p) != p;
    if (moves_all) fpf.push_back(x);
  }
  const bool split = fpf.size() == a.degree() && is_subgroup(g, fpf) && is_normal_set(g, fpf);
  r.add("neumann_translations_subgroup", translations_subgroup, {},
        std::to_string(j2.size()) + " translations");
  r.add("neumann_split", split, {}, "fixed-point-free elements with 1 form a normal complement");
  r.add("neumann_biconditional", translations_subgroup == split, {},
        "translations form a subgroup iff the group splits");
  r.set_count("characteristic", ch);

  fill_stats(r, geo);
  return r;
}

CatalogEntry catalog_entry(std::string_view raw) {
  std::string name;
  for (char c : raw) {
    if (c != ' ') name.push_back(c);
  }
  static const std::regex pattern(R"(^([a-z0-9_]+)(?:\(([0-9,]*)\))?$)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw Error(ErrorCode::Parse, "bad catalog name '" + name + "'");
  const std::string family = m[1].str();
  const std::vector<std::uint32_t> args = m[2].matched ? parse_args(m[2].str()) : std::vector<std::uint32_t>{};
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw Error(ErrorCode::Parse, family + " takes " + std::to_string(k) + " arguments");
  };

  if (family == "j9") {
    if (m[2].matched) need(0);
    ActionGroup a = nearfield_j9_group();
    return {"j9", a.group(), a.stabilizer(0)};
  }
  if (family == "cyclic") {
    need(1);
    return {name, cyclic_group(args[0]), std::nullopt};
  }
  if (family == "cyclic_ext" || family == "elemab_ext") {
    std::vector<std::uint32_t> orders;
    if (family == "cyclic_ext") {
      need(1);
      orders = {args[0]};
    } else {
      need(2);
      if (!is_prime(args[0]) || args[1] == 0) throw Error(ErrorCode::BadParams, "need a prime and a positive rank");
      orders.assign(args[1], args[0]);
    }
    FiniteGroup g = abelian_inversion_extension(orders);
    std::optional<ElemSet> complement;
    if (g.order() > 2) complement = ElemSet{0, static_cast<Elem>(g.order() / 2)};
    return {name, g, complement};
  }
  if (family == "agl1") {
    need(1);
    ActionGroup a = agl1(args[0]);
    return {name, a.group(), a.stabilizer(0)};
  }
  if (family == "frob") {
    need(2);
    ActionGroup a = frobenius_semidirect_action(args[0], args[1]);
    return {name, a.group(), a.stabilizer(0)};
  }
  throw Error(ErrorCode::Parse, "unknown catalog family '" + family + "'");
}

std::vector<std::string> default_corpus() {
  return {"cyclic_ext(3)", "elemab_ext(3,2)", "agl1(5)", "agl1(7)", "agl1(9)", "j9"};
}

}  // namespace mockhyp
