#pragma once

#include <vector>

#include "fermat/genus.hpp"
#include "fermat/report.hpp"

namespace fermat {

/// One SPECIAL_ONE orbit, a GAMMA orbit iff p = 1 mod 3, (p-7)/6 or (p-5)/6
/// GENERIC orbits, sizes summing to p - 2.
std::vector<CheckEntry> orbit_law_checks(const PrimeContext& ctx);

/// Riemann-Hurwitz (fixed points from the triple) against the coset formula on
/// every cyclic subgroup, on H, H_j and <H_i, H_j>, plus g(F_p / 1) = g(F_p).
std::vector<CheckEntry> dual_oracle_checks(const FermatGroup& group, const GeneratingTriple& triple);

/// T, R, J relations and the eps rule on C_gamma; only J when p = 2 mod 3.
std::vector<CheckEntry> monomial_checks(const PrimeContext& ctx);
/// Rendered T, R, J and the passing eps; nullopt when p = 2 mod 3.
std::optional<MonomialEntry> monomial_summary(const PrimeContext& ctx);

/// <1, chi_rat> = 0, chi_rat(a1) = 2 - p, <Ind_{H_j} 1, chi_rat> = p - 1 =
/// 2 g(F_p / H_j), integrality.
std::vector<CheckEntry> certificate_checks(const FermatGroup& group, const GeneratingTriple& triple);

}  // namespace fermat
