#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mockhyp/group.hpp"
#include "mockhyp/kloop.hpp"
#include "mockhyp/report.hpp"

namespace mockhyp {

/// x -> x^-1. E_NOT_AUTOMORPHISM when the loop lacks automorphic inverses.
Automorphism inversion_automorphism(const KLoop& loop);

/// x -> h x h^-1 for each h in g, in element order, on a loop whose carrier
/// is all of g. E_NONTRIVIAL_CENTER unless the action is faithful.
std::vector<Automorphism> conjugation_automorphisms(const FiniteGroup& g, const KLoop& loop);

/// Conjugations followed by their products with inversion: a group of
/// order 2|g| with the identity first.
std::vector<Automorphism> conjugations_with_inversion(const FiniteGroup& g, const KLoop& loop);

/// Pairs (a, alpha) with (a,alpha)(b,beta) = (a (x) alpha(b), delta(a, alpha(b)) alpha beta).
/// Element code = position * |A| + automorphism id; the neutral element is 0.
class QuasidirectGroup {
 public:
  /// auts must be closed under composition (E_AUTOMORPHISMS_NOT_CLOSED) and
  /// contain every precession map (E_PRECESSION_NOT_IN_A). Duplicates are
  /// dropped and the identity gets id 0; other ids follow input order.
  QuasidirectGroup(KLoop loop, std::vector<Automorphism> auts);

  const KLoop& loop() const noexcept { return loop_; }
  const std::vector<Automorphism>& automorphisms() const noexcept { return auts_; }
  /// The materialized group, validated by the Cayley-table constructor.
  const FiniteGroup& group() const noexcept { return *group_; }

  std::size_t aut_count() const noexcept { return auts_.size(); }
  Elem encode(Pos a, std::size_t aut) const { return static_cast<Elem>(a * auts_.size() + aut); }
  std::pair<Pos, std::size_t> decode(Elem x) const {
    return {static_cast<Pos>(x / auts_.size()), x % auts_.size()};
  }
  std::size_t compose_ids(std::size_t i, std::size_t j) const { return compose_[i * auts_.size() + j]; }
  std::size_t inverse_id(std::size_t i) const { return inverse_[i]; }
  std::size_t delta_id(Pos a, Pos b) const { return delta_[a * loop_.size() + b]; }
  std::optional<std::size_t> find_automorphism(const Automorphism& alpha) const;

  /// Id of the inversion map, if it belongs to the automorphism list.
  std::optional<std::size_t> epsilon_id() const noexcept { return epsilon_; }
  /// (1, epsilon). E_NOT_AUTOMORPHISM if inversion is not in the list.
  Elem iota() const;
  /// L x {epsilon}.
  ElemSet expected_involutions() const;

 private:
  KLoop loop_;
  std::vector<Automorphism> auts_;
  std::vector<std::size_t> compose_, inverse_, delta_;
  std::optional<std::size_t> epsilon_;
  std::optional<FiniteGroup> group_;
};

/// Involutions are L x {epsilon}; Cen(iota) = 1 x A; conjugation solves
/// i^k = j uniquely (scan checked against the closed-form solution); the
/// inverse formula matches the table.
AxiomReport verify_quasidirect_involutions(const QuasidirectGroup& q);

struct NaturalAction {
  /// images[g][x] = a (x) alpha(x) for g = (a, alpha).
  std::vector<Perm> images;
  AxiomReport report;  // homomorphism, faithful, transitive
};

/// The action (a,alpha)(x) = a (x) alpha(x) on loop positions. It composes
/// on the left: act(gh) = act(g) o act(h).
NaturalAction natural_action(const QuasidirectGroup& q);

}  // namespace mockhyp
