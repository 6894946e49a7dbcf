#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mockhyp/frobenius.hpp"
#include "mockhyp/group.hpp"
#include "mockhyp/report.hpp"

namespace mockhyp {

/// A group together with a faithful permutation action (right action).
class ActionGroup {
 public:
  /// E_NOT_PERMUTATION if g carries no permutation representation.
  explicit ActionGroup(FiniteGroup g);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return group_.perm_rep()->degree; }
  std::uint32_t image(Elem g, std::uint32_t x) const { return group_.perm_rep()->images[g][x]; }
  /// Elements fixing point x.
  ElemSet stabilizer(std::uint32_t x) const;

 private:
  FiniteGroup group_;
};

/// Addition and multiplication tables of a field of order up to 97.
/// Elements 0..q-1; for prime powers element k has base-p digits equal to
/// the polynomial coefficients, lowest degree first.
struct SmallField {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> add, mul;  // row-major q*q
  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * q + b]; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * q + b]; }
};

/// Prime fields up to 97 and the built-in fields of order 9 and 27.
/// E_UNSUPPORTED_Q otherwise.
SmallField small_field(std::uint32_t q);

/// The order-9 near-field product a o b = ab for square b, a^3 b otherwise,
/// on the encoding of small_field(9). Row-major 9*9.
const std::vector<std::uint32_t>& nearfield9_table();

FiniteGroup cyclic_group(std::uint32_t n);

/// (product of cyclic groups of the given odd orders) extended by inversion.
/// E_EVEN_ORDER if an order is even.
FiniteGroup abelian_inversion_extension(const std::vector<std::uint32_t>& orders);

/// x -> ax + b on the field of order q. E_UNSUPPORTED_Q unless q is a prime
/// up to 97, 9 or 27.
ActionGroup agl1(std::uint32_t q);

/// F_p x| C_d as the maps x -> u^k x + b with u of order d, with the
/// multiplications as complement. E_BAD_PARAMS unless p is an odd prime and
/// d > 1 is an odd divisor of p - 1.
FrobeniusPair frobenius_semidirect(std::uint32_t p, std::uint32_t d);
/// The same group as an action on p points.
ActionGroup frobenius_semidirect_action(std::uint32_t p, std::uint32_t d);

/// x -> x o a + b over the order-9 near-field: sharply 2-transitive of order 72.
ActionGroup nearfield_j9_group();

/// |G| = n(n-1) and every ordered pair of distinct points is reached.
bool is_sharply_2_transitive(const ActionGroup& a);

/// 2 when involutions have no fixed point, else the common order of the
/// products of two distinct involutions. Never 0 for finite groups.
/// E_INCONSISTENT_CHAR if that order is not constant.
std::uint32_t permutation_characteristic(const ActionGroup& a);

/// The four equivalent line conditions on the involutions, the resulting
/// line axioms, and the split criterion (translations form a subgroup iff
/// the fixed-point-free elements with 1 form a normal subgroup).
/// E_CHARACTERISTIC_TWO in characteristic 2.
AxiomReport verify_geometry_conditions(const ActionGroup& a);

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  std::optional<ElemSet> complement;  // a Frobenius complement, when known
};

/// Parses cyclic(n), cyclic_ext(n), elemab_ext(p,k), agl1(q), frob(p,d), j9.
/// E_PARSE on unknown names.
CatalogEntry catalog_entry(std::string_view name);

std::vector<std::string> default_corpus();

}  // namespace mockhyp
