#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mockhyp/error.hpp"

namespace mockhyp {

/// Index of a group element. The identity is always 0.
using Elem = std::uint32_t;

/// Sorted, duplicate-free set of element indices.
using ElemSet = std::vector<Elem>;

/// Image table of a permutation of {0, ..., degree-1}.
using Perm = std::vector<std::uint32_t>;

/// Sort and deduplicate in place; returns the canonical set.
ElemSet make_set(std::vector<Elem> elems);
bool set_contains(const ElemSet& s, Elem x);
bool is_subset(const ElemSet& a, const ElemSet& b);
ElemSet set_intersection(const ElemSet& a, const ElemSet& b);

/// Permutation representation with right actions: images[g][x] is the image
/// of point x under g, and images[g*h][x] == images[h][images[g][x]].
struct PermRep {
  std::size_t degree = 0;
  std::vector<Perm> images;
};

/// How from_cayley_table proves associativity.
enum class AssocCheck {
  Auto,   // full triple loop up to order 512, Light's test above
  Full,   // all n^3 triples
  Light,  // Light's test over a greedy generating set
};

inline constexpr std::size_t kFullAssocLimit = 512;

/// Size cap for closures. Reads MOCKHYP_MAX_ORDER, defaulting to 100000.
std::size_t default_max_order();

/// Immutable finite group stored as a Cayley table. Copies share storage.
class FiniteGroup {
 public:
  /// Validates the table and relabels so the identity sits at index 0
  /// (by swapping it with whatever was at 0).
  static FiniteGroup from_cayley_table(
      const std::vector<std::vector<Elem>>& table,
      std::vector<std::string> labels = {},
      AssocCheck check = AssocCheck::Auto);

  /// Same, for a row-major n*n table.
  static FiniteGroup from_flat_table(std::size_t n, std::vector<Elem> table,
                                     std::vector<std::string> labels = {},
                                     AssocCheck check = AssocCheck::Auto);

  /// Breadth-first closure of the generators. Element 0 is the identity
  /// permutation, the rest follow in discovery order.
  static FiniteGroup from_permutation_generators(
      std::size_t degree, const std::vector<Perm>& gens,
      std::size_t max_order = default_max_order());

  std::size_t order() const noexcept { return n_; }
  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept { return data_->mul[a * n_ + b]; }
  Elem inv(Elem a) const noexcept { return data_->inv[a]; }
  std::span<const Elem> row(Elem a) const noexcept {
    return {data_->mul.data() + a * n_, n_};
  }

  /// x^g = g^-1 x g.
  Elem conj(Elem x, Elem g) const noexcept { return mul(mul(inv(g), x), g); }
  Elem power(Elem x, std::int64_t k) const;
  std::size_t element_order(Elem x) const;
  bool is_involution(Elem x) const noexcept { return x != 0 && mul(x, x) == 0; }

  std::string label(Elem x) const;
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  const std::optional<PermRep>& perm_rep() const noexcept { return data_->perm_rep; }

  std::vector<std::vector<Elem>> table() const;
  bool same_table(const FiniteGroup& other) const;

  /// Returns a copy carrying the given permutation representation after
  /// checking that it is a faithful homomorphism.
  FiniteGroup with_perm_rep(PermRep rep) const;

 private:
  struct Data {
    std::vector<Elem> mul;
    std::vector<Elem> inv;
    std::vector<std::string> labels;
    std::optional<PermRep> perm_rep;
  };
  FiniteGroup(std::size_t n, std::shared_ptr<const Data> data)
      : n_(n), data_(std::move(data)) {}

  std::size_t n_ = 0;
  std::shared_ptr<const Data> data_;
};

/// Exhaustive n^3 associativity scan. Returns a failing triple if any.
std::optional<std::array<Elem, 3>> find_nonassociative_triple(const FiniteGroup& g);

class Subgroup {
 public:
  /// Verifies closure under products and inverses (E_NOT_SUBGROUP).
  Subgroup(FiniteGroup parent, ElemSet members);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const ElemSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem x) const { return set_contains(members_, x); }
  bool is_trivial() const noexcept { return members_.size() == 1; }

 private:
  FiniteGroup parent_;
  ElemSet members_;
};

/// Group automorphism of order dividing 2.
class InvolutoryAutomorphism {
 public:
  /// Throws E_NOT_AUTOMORPHISM unless images is a homomorphic bijection
  /// squaring to the identity map.
  InvolutoryAutomorphism(FiniteGroup parent, std::vector<Elem> images);

  const FiniteGroup& parent() const noexcept { return parent_; }
  Elem operator()(Elem x) const { return images_[x]; }
  const std::vector<Elem>& images() const noexcept { return images_; }
  /// True when the map is not the identity.
  bool has_order_two() const noexcept { return order_two_; }

  /// Inv(α) = {g : α(g) = g^-1}.
  ElemSet inverted() const;
  /// Cen(α) = {g : α(g) = g}.
  ElemSet fixed() const;

 private:
  FiniteGroup parent_;
  std::vector<Elem> images_;
  bool order_two_ = false;
};

ElemSet conjugacy_class(const FiniteGroup& g, Elem x);
std::vector<ElemSet> conjugacy_classes(const FiniteGroup& g);
ElemSet involutions(const FiniteGroup& g);

Subgroup centralizer(const FiniteGroup& g, const ElemSet& s);
Subgroup normalizer_of_set(const FiniteGroup& g, const ElemSet& s);
Subgroup subgroup_closure(const FiniteGroup& g, const ElemSet& gens);
Subgroup center(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup derived_subgroup(const Subgroup& s);
bool is_solvable(const Subgroup& s);

/// Is s closed under products and inverses (and nonempty)?
bool is_subgroup(const FiniteGroup& g, const ElemSet& s);
bool is_normal_set(const FiniteGroup& g, const ElemSet& s);
bool is_commutative_set(const FiniteGroup& g, const ElemSet& s);
/// {ab : a in A, b in B}
ElemSet product_set(const FiniteGroup& g, const ElemSet& a, const ElemSet& b);
/// {x g : g in s}
ElemSet left_translate(const FiniteGroup& g, Elem x, const ElemSet& s);
/// {s^x : s in set}
ElemSet conjugate_set(const FiniteGroup& g, const ElemSet& s, Elem x);

/// True iff x -> x^2 maps s bijectively onto s.
bool is_uniquely_2_divisible(const FiniteGroup& g, const ElemSet& s);

/// The unique y in s with y^2 = x. Inverts the square map on s, so s need
/// not be a subgroup. Throws E_NOT_UNIQUELY_2DIV when x has zero or several
/// roots in s.
Elem sqrt_in(const FiniteGroup& g, const ElemSet& s, Elem x);

/// Square-root lookup indexed by element; the entry for elements
/// outside s is kNoElem. Throws E_NOT_UNIQUELY_2DIV if squaring is not a bijection of s.
inline constexpr Elem kNoElem = static_cast<Elem>(-1);
std::vector<Elem> square_root_table(const FiniteGroup& g, const ElemSet& s);

/// x = a*b with a in Inv(α), b in Cen(α), via a = (x (x^α)^-1)^(1/2).
std::pair<Elem, Elem> neumann_decompose(const InvolutoryAutomorphism& alpha, Elem x);

}  // namespace mockhyp
