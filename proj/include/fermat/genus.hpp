#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermat/groups.hpp"

namespace fermat {

/// Number of fixed points of each non-identity element on the top surface.
/// Entries may be undefined (partial tables, e.g. restricted to H).
template <FiniteGroup G>
class FixTable {
 public:
  using Element = typename G::Element;

  FixTable(G group, std::vector<std::optional<std::int64_t>> counts)
      : group_(std::move(group)), counts_(std::move(counts)) {}

  const G& group() const noexcept { return group_; }
  bool defined(const Element& g) const { return counts_.at(group_.index(g)).has_value(); }

  std::int64_t at(const Element& g) const {
    const auto& c = counts_.at(group_.index(g));
    if (!c) {
      throw Error(ErrorCode::kInvalidArgument, "fixed-point count undefined for " + group_.to_string(g));
    }
    return *c;
  }

 private:
  G group_;
  std::vector<std::optional<std::int64_t>> counts_;  // by element index; identity left empty
};

/// Riemann-Hurwitz in group form: 2 g_top - 2 = |K| (2 g_K - 2) + sum_{k != 1} fix(k).
/// Throws INCONSISTENT_RH when the result is not a non-negative integer.
template <FiniteGroup G>
std::int64_t rh_genus(std::int64_t g_top, const Subgroup<G>& k, const FixTable<G>& fix) {
  const auto& group = k.group();
  std::int64_t fixed = 0;
  for (const auto& x : k.elements()) {
    if (x != group.identity()) fixed += fix.at(x);
  }
  const auto order = static_cast<std::int64_t>(k.order());
  const std::int64_t rest = 2 * g_top - 2 - fixed;
  if (rest % order != 0 || (rest / order + 2) % 2 != 0 || rest / order + 2 < 0) {
    throw Error(ErrorCode::kInconsistentRh,
                "2g-2 = " + std::to_string(2 * g_top - 2) + " with |K| = " + std::to_string(order) +
                    " and fixed-point sum " + std::to_string(fixed) + " gives no integer genus");
  }
  return (rest / order + 2) / 2;
}

// ---------------------------------------------------------------------------
// Fermat side

std::int64_t fermat_genus(const PrimeContext& ctx);

/// Fixed points of H = <a1, a2> on F_p: a_i^k (k != 0) fixes p points, every
/// other non-identity element of H acts freely. Undefined outside H.
FixTable<FermatGroup> fermat_h_fix_table(const FermatGroup& group);

/// Genus of F_p / K for K <= H. Throws NOT_SUBGROUP_OF_H.
std::int64_t fermat_quotient_genus(const Subgroup<FermatGroup>& k);
std::int64_t fermat_quotient_genus(const Subgroup<FermatGroup>& k, const FixTable<FermatGroup>& h_fix);

/// Elements of orders (2, 3, 2p) with c2 c3 c2p = 1 generating Aut(F_p):
/// F_p -> F_p / Aut(F_p) is a sphere branched at three points with these
/// local monodromies.
struct GeneratingTriple {
  FermatAut c2;
  FermatAut c3;
  FermatAut c2p;

  friend bool operator==(const GeneratingTriple&, const GeneratingTriple&) = default;
};

inline constexpr std::int64_t kDefaultTripleSearchBound = 31;

/// Throws INVALID_ARGUMENT naming the first violated condition.
void validate_triple(const FermatGroup& group, const GeneratingTriple& triple);

/// First valid triple in index order. Throws TOO_LARGE above the search bound
/// and SEARCH_EXHAUSTED if nothing is found.
GeneratingTriple find_generating_triple(const FermatGroup& group,
                                        std::int64_t search_bound = kDefaultTripleSearchBound);

/// Genus of F_p / K from the cycle structure of c2, c3, c2p on G/K. A cycle of
/// length l of c_i is a cone point of order m_i / l.
/// Throws INCONSISTENT_ORBIFOLD on a non-integer result.
std::int64_t coset_genus(const Subgroup<FermatGroup>& k, const GeneratingTriple& triple);

/// |Fix(g)| = sum_i #{cosets h<c_i> fixed by g}. Throws IDENTITY_INPUT for g = 1.
std::int64_t full_fix_count(const FermatGroup& group, const FermatAut& g, const GeneratingTriple& triple);

/// full_fix_count on every non-identity element (evaluated once per class).
FixTable<FermatGroup> full_fix_table(const FermatGroup& group, const GeneratingTriple& triple);

/// |G| (2 - sum (1 - 1/m_i)) == 2 - 2 g(F_p).
bool euler_characteristic_holds(const FermatGroup& group);

// ---------------------------------------------------------------------------
// p-gonal side

/// Genus (p-1)/2 of C_gamma.
std::int64_t pgonal_genus(const PrimeContext& ctx);

/// T^k (k != 0) fixes 3 points; order-3 elements fix 2.
FixTable<PGonalGroup> pgonal_fix_table(const PGonalGroup& group);

}  // namespace fermat
