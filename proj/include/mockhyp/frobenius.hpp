#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mockhyp/geometry.hpp"
#include "mockhyp/group.hpp"
#include "mockhyp/kloop.hpp"
#include "mockhyp/quasidirect.hpp"
#include "mockhyp/report.hpp"

namespace mockhyp {

/// Proper, nontrivial and malnormal: H meets H^g trivially for g outside H.
bool is_frobenius(const FiniteGroup& g, const Subgroup& h);

enum class FrobeniusType { Odd, Degenerate, Even };
std::string_view type_name(FrobeniusType t);

/// A group with a Frobenius complement. Construction refuses non-Frobenius
/// input with E_NOT_FROBENIUS.
class FrobeniusPair {
 public:
  FrobeniusPair(FiniteGroup g, ElemSet complement);

  const FiniteGroup& group() const noexcept { return group_; }
  const Subgroup& complement() const noexcept { return complement_; }
  /// Union of all conjugates of the complement.
  const ElemSet& conjugate_union() const noexcept { return union_; }
  /// Distinct conjugates of the complement.
  const std::vector<ElemSet>& conjugates() const noexcept { return conjugates_; }

 private:
  FiniteGroup group_;
  Subgroup complement_;
  ElemSet union_;
  std::vector<ElemSet> conjugates_;
};

/// Do the conjugates of the complement cover the group?
bool is_full(const FrobeniusPair& pair);

/// Elements outside every conjugate of the complement, plus 1. Verifies
/// that this is a normal subgroup with G = K x| H (E_KERNEL_NOT_SUBGROUP).
Subgroup frobenius_kernel(const FrobeniusPair& pair);

/// Odd if the complement has an involution, degenerate if the group has
/// none, even if involutions lie outside the conjugates of the complement.
/// Throws E_INTERNAL unless exactly one case holds.
FrobeniusType classify_type(const FrobeniusPair& pair);

/// Output of the extension pipeline: the loop on the base group, the
/// quasidirect product, the base line and its conjugation orbit.
struct Extension {
  FiniteGroup base;
  ElemSet complement;  // subgroup of base giving the base line
  std::optional<FrobeniusPair> pair;
  KLoop loop;
  QuasidirectGroup product;
  Line base_line;
  Geometry geometry;
  /// Orbit size of the base line under the conjugations 1 x G alone.
  std::size_t inner_orbit = 0;
};

/// L = (G, (x)), A = conjugations of G with inversion, lines = orbit of
/// H x {epsilon}. Requires odd order (E_NOT_UNIQUELY_2DIV), abelian complement
/// (E_COMPLEMENT_NOT_ABELIAN) and trivial center (E_NONTRIVIAL_CENTER).
Extension extend_degenerate(const FrobeniusPair& pair);

/// L = A for an abelian group of odd order, automorphisms {id, inversion},
/// and the single line L x {epsilon}.
Extension extend_abelian(const FiniteGroup& a);

/// The partial axioms on the extension plus the structural facts behind
/// them: line formulas, normalizer of the base line, lines through iota,
/// trivial centralizers of noncollinear triples, and fullness forcing
/// completeness.
AxiomReport verify_frobenius_mhrs(const Extension& ext);

/// Is the subgroup generated by s solvable?
bool closure_is_solvable(const FiniteGroup& g, const ElemSet& s);

}  // namespace mockhyp
