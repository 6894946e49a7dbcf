#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mockhyp/group.hpp"
#include "mockhyp/report.hpp"

namespace mockhyp {

/// Position of an element inside a loop carrier.
using Pos = std::uint32_t;

/// 1 in s, s closed under inverses, and a*s*a inside s for every a in s.
bool is_twisted_subgroup(const FiniteGroup& g, const ElemSet& s);

/// A finite loop on positions 0..n-1 with neutral element at position 0.
/// Loops built from twisted subgroups remember the ambient group, and
/// position p stands for carrier()[p].
class KLoop {
 public:
  /// a (x) b = a^(1/2) b a^(1/2) on a uniquely 2-divisible twisted subset.
  /// Throws E_NOT_TWISTED or E_NOT_UNIQUELY_2DIV.
  static KLoop from_twisted(const FiniteGroup& g, const ElemSet& s);

  /// Raw table over positions. Requires a square table whose rows are
  /// permutations and whose position 0 is a two-sided neutral element
  /// (E_NOT_LOOP otherwise). The remaining loop axioms are checked by
  /// verify_kloop_axioms, not here.
  static KLoop from_table(std::vector<std::vector<Pos>> table);

  std::size_t size() const noexcept { return data_->n; }
  Pos op(Pos a, Pos b) const noexcept { return data_->op[a * data_->n + b]; }
  /// The x with a (x) x = b.
  Pos left_div(Pos a, Pos b) const noexcept { return data_->ldiv[a * data_->n + b]; }
  /// The x with a (x) x = 1.
  Pos inv(Pos a) const noexcept { return data_->inv[a]; }
  /// Square root, or kNoElem when squaring is not a bijection.
  Pos sqrt(Pos a) const noexcept { return data_->sqrt[a]; }
  bool has_square_roots() const noexcept { return data_->sqrt_ok; }

  const std::optional<FiniteGroup>& ambient() const noexcept { return data_->ambient; }
  /// Ambient element of each position; the identity map for table loops.
  const ElemSet& carrier() const noexcept { return data_->carrier; }
  /// Position of an ambient element, or kNoElem.
  Pos position(Elem x) const;

  std::vector<std::vector<Pos>> table() const;
  bool same_table(const KLoop& other) const { return data_->op == other.data_->op; }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Pos> op, ldiv, inv, sqrt;
    bool sqrt_ok = false;
    std::optional<FiniteGroup> ambient;
    ElemSet carrier;
    std::vector<Pos> position;  // indexed by ambient element
  };
  explicit KLoop(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static std::shared_ptr<Data> finish(std::shared_ptr<Data> d);

  std::shared_ptr<const Data> data_;
};

/// A permutation of loop positions that respects the loop operation.
class Automorphism {
 public:
  /// Verifies alpha(x (x) y) = alpha(x) (x) alpha(y) for all x, y
  /// (E_NOT_AUTOMORPHISM otherwise).
  Automorphism(const KLoop& loop, Perm images);
  /// Skips verification; for maps already known to be automorphisms.
  static Automorphism trusted(Perm images);

  Pos operator()(Pos x) const { return images_[x]; }
  const Perm& images() const noexcept { return images_; }
  bool is_identity() const;

  /// (this o other)(x) = this(other(x)).
  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;

  bool operator==(const Automorphism& o) const { return images_ == o.images_; }
  bool operator<(const Automorphism& o) const { return images_ < o.images_; }

 private:
  explicit Automorphism(Perm images) : images_(std::move(images)) {}
  Perm images_;
};

/// Does the permutation respect the loop operation? Returns a failing pair.
std::optional<std::pair<Pos, Pos>> automorphism_violation(const KLoop& loop, const Perm& p);

/// Unique solvability, Bol identity, automorphic inverses, and (for loops
/// with an ambient group) agreement of powers with ambient powers.
AxiomReport verify_kloop_axioms(const KLoop& loop);

/// x -> (a(x)b) \ (a (x) (b (x) x)), from left translations.
Perm precession_by_translations(const KLoop& loop, Pos a, Pos b);
/// x -> d^-1 x d with d = b^(1/2) a^(1/2) (a (x) b)^(-1/2) in the ambient
/// group. Requires an ambient group.
Perm precession_by_conjugation(const KLoop& loop, Pos a, Pos b);

/// The precession map at (a, b). For loops with an ambient group both
/// formulas are computed and compared (E_INTERNAL on mismatch).
Automorphism precession(const KLoop& loop, Pos a, Pos b);

/// Precession maps of all pairs, indexed [a * n + b].
std::vector<Perm> precession_table(const KLoop& loop);

/// The standard precession identities for every pair, against each supplied
/// automorphism, plus automorphy of every precession map and (with an
/// ambient group) agreement of the two formulas.
AxiomReport verify_precession_identities(const KLoop& loop,
                                         const std::vector<Automorphism>& auts);

/// The group generated by all precession maps, identity first.
/// E_TOO_LARGE above max_order elements.
std::vector<Automorphism> precession_group(const KLoop& loop,
                                           std::size_t max_order = default_max_order());

/// Closure of a set of permutations under composition, identity first.
std::vector<Perm> permutation_closure(std::size_t degree, const std::vector<Perm>& gens,
                                      std::size_t max_order);

}  // namespace mockhyp
