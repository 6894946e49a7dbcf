#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mockhyp/group.hpp"
#include "mockhyp/report.hpp"

namespace mockhyp {

/// A line is a sorted set of involutions.
using Line = ElemSet;

/// Conjugacy classes of involutions, ordered by smallest member.
std::vector<ElemSet> involution_classes(const FiniteGroup& g);

/// The class containing the smallest involution index. E_NOT_INVOLUTION_CLASS
/// if the group has no involutions.
ElemSet default_involution_class(const FiniteGroup& g);

/// An involution class Q together with a family of lines in Q.
class Geometry {
 public:
  /// Checks that q is one full conjugacy class of involutions and that every
  /// line is a subset of q with at least two points. Lines are deduplicated.
  Geometry(FiniteGroup g, ElemSet q, std::vector<Line> lines);

  const FiniteGroup& group() const noexcept { return group_; }
  const ElemSet& q() const noexcept { return q_; }
  const std::vector<Line>& lines() const noexcept { return lines_; }
  bool in_q(Elem x) const noexcept { return q_mask_[x] != 0; }
  bool has_line(const Line& l) const;
  /// Index of l in lines(), if present.
  std::optional<std::size_t> line_index(const Line& l) const;
  /// True when lines() is exactly {line_through(i,j) : i != j in Q}.
  bool complete() const noexcept { return complete_; }

 private:
  FiniteGroup group_;
  ElemSet q_;
  std::vector<char> q_mask_;
  std::vector<Line> lines_;
  bool complete_ = false;
};

/// The line family of all pairs.
Geometry complete_geometry(const FiniteGroup& g, const ElemSet& q);

/// {k in Q : ij in kQ}. Throws E_NOT_IN_Q unless i != j both lie in Q.
Line line_through(const Geometry& geo, Elem i, Elem j);
/// {k in Q : k*sigma in Q}; equals line_through(i, j) whenever sigma = ij.
Line line_of_product(const Geometry& geo, Elem sigma);

/// The unique k in Q with i^k = j. E_NO_MIDPOINT / E_MIDPOINT_NOT_UNIQUE.
Elem midpoint(const Geometry& geo, Elem i, Elem j);

/// {ab : a, b in l}.
ElemSet line_square(const Geometry& geo, const Line& l);

/// Q*Q.
ElemSet q_square(const Geometry& geo);

/// Elements of Q*Q whose line exists, together with 1.
ElemSet translations(const Geometry& geo);

/// Points collinear under the line formula: the smallest superset of seed
/// closed under i, j -> line_through(i, j).
ElemSet line_closure(const Geometry& geo, const ElemSet& seed);

/// Two lines of the geometry inside x that do not meet, if any. Throws
/// E_NOT_CLOSED if x is not closed under line_through.
std::optional<std::pair<Line, Line>> disjoint_lines_in(const Geometry& geo, const ElemSet& x);
bool is_projective_plane(const Geometry& geo, const ElemSet& x);

/// Line axioms a)-c) with cross-checks, plus invariance of the line family.
AxiomReport verify_partial_mhrs(const Geometry& geo);
/// verify_partial_mhrs on the complete line family of geo's class.
AxiomReport verify_mhrs(const Geometry& geo);
AxiomReport verify_mhrs(const FiniteGroup& g, const ElemSet& q);

/// Exhaustive consequences of the axioms: normalizers and squares of lines,
/// the partition of translations, reflections of lines, and factorization
/// g = i*j*h with h centralizing i.
AxiomReport lemma_battery(const Geometry& geo);

/// The eight single-line criteria, evaluated independently, with an
/// "equivalent" check that they agree.
AxiomReport splitting_suite(const Geometry& geo);

/// Fills stats (|Q|, line count, distinct line sizes, |S|).
void fill_stats(AxiomReport& report, const Geometry& geo);

}  // namespace mockhyp
