#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/certificates.hpp"
#include "fermat/curves.hpp"
#include "fermat/genus.hpp"
#include "fermat/groups.hpp"
#include "fermat/orbits.hpp"

namespace fermat {

// ---------------------------------------------------------------------------
// Kani-Rosen audit

struct CommutingCheck {
  std::size_t i = 0;  // indices into KaniRosenAudit::subgroups
  std::size_t j = 0;
  bool commutes = false;

  friend bool operator==(const CommutingCheck&, const CommutingCheck&) = default;
};

/// Genus of the quotient by the subgroup generated by subgroups i and j.
struct GenusZeroCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t genus = 0;

  bool pass() const noexcept { return genus == 0; }
  friend bool operator==(const GenusZeroCheck&, const GenusZeroCheck&) = default;
};

struct GenusSumCheck {
  std::vector<std::int64_t> genera;  // one per subgroup
  std::int64_t expected = 0;         // genus of the top surface

  std::int64_t sum() const noexcept;
  bool pass() const noexcept { return sum() == expected; }
  friend bool operator==(const GenusSumCheck&, const GenusSumCheck&) = default;
};

enum class AuditMethod { kExplicit, kStructured };
std::string_view to_string(AuditMethod method);
AuditMethod parse_audit_method(std::string_view text);

struct KaniRosenAudit {
  std::vector<std::string> subgroups;  // "H_1", ..., or "K_1", ...
  AuditMethod method = AuditMethod::kExplicit;
  std::vector<CommutingCheck> commuting_checks;
  std::vector<GenusZeroCheck> genus_zero_checks;
  GenusSumCheck genus_sum_check;

  bool commuting_pass() const noexcept;
  bool genus_zero_pass() const noexcept;
  bool passes() const noexcept { return commuting_pass() && genus_zero_pass() && genus_sum_check.pass(); }
  friend bool operator==(const KaniRosenAudit&, const KaniRosenAudit&) = default;
};

/// All three conditions by direct enumeration. Propagates INCONSISTENT_RH.
template <FiniteGroup G>
KaniRosenAudit kani_rosen_check(std::int64_t g_top, const std::vector<Subgroup<G>>& subgroups,
                                const std::vector<std::string>& names, const FixTable<G>& fix) {
  if (names.size() != subgroups.size()) throw Error(ErrorCode::kInvalidArgument, "one name per subgroup");
  KaniRosenAudit audit;
  audit.subgroups = names;
  audit.method = AuditMethod::kExplicit;
  audit.genus_sum_check.expected = g_top;
  for (const auto& k : subgroups) audit.genus_sum_check.genera.push_back(rh_genus(g_top, k, fix));
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    for (std::size_t j = i + 1; j < subgroups.size(); ++j) {
      audit.commuting_checks.push_back({i, j, product_set(subgroups[i], subgroups[j]).commutes});
      audit.genus_zero_checks.push_back({i, j, rh_genus(g_top, join(subgroups[i], subgroups[j]), fix)});
    }
  }
  return audit;
}

/// Largest p audited by enumeration when no method is requested.
inline constexpr std::int64_t kExplicitAuditBound = 31;

/// The family H_1, ..., H_{p-2} on F_p. The structured method uses that every
/// H_j lies in the abelian group H and any two of them span H.
KaniRosenAudit fermat_kani_rosen_audit(const PrimeContext& ctx, std::optional<AuditMethod> method = std::nullopt);

/// The family K_1, K_2, K_3 on C_gamma (always enumerated).
KaniRosenAudit pgonal_kani_rosen_audit(const PrimeContext& ctx);

/// Evidence for JC_gamma ~ JE_gamma^3. The K_i do not commute pairwise, so the
/// Kani-Rosen audit is kept for reference only; the refinement rests on the
/// genus conditions and the character certificate.
struct GammaRefinement {
  Residue gamma = 0;
  std::vector<std::int64_t> quotient_genera;  // g(C_gamma / K_i)
  std::vector<std::int64_t> join_genera;      // g(C_gamma / <K_i, K_j>), pairs (1,2), (1,3), (2,3)
  KaniRosenAudit kani_rosen;
  PGonalCertificate certificate;

  bool genus_pass(std::int64_t p) const;
  bool passes(std::int64_t p) const { return genus_pass(p) && certificate.passes(); }
  friend bool operator==(const GammaRefinement&, const GammaRefinement&) = default;
};

GammaRefinement gamma_refinement(const PrimeContext& ctx);

// ---------------------------------------------------------------------------
// Decompositions

enum class DecompositionLevel { kCoarse, kFine };
std::string_view to_string(DecompositionLevel level);
DecompositionLevel parse_level(std::string_view text);

struct IsogenyFactor {
  CurveSpec curve;
  OrbitKind kind;
  std::int64_t multiplicity = 0;
  std::int64_t dimension = 0;

  friend bool operator==(const IsogenyFactor&, const IsogenyFactor&) = default;
};

struct IsogenyDecomposition {
  PrimeContext context;
  DecompositionLevel level;
  std::vector<IsogenyFactor> factors;  // SPECIAL_ONE, GAMMA, GENERIC by representative
  KaniRosenAudit audit;
  std::optional<GammaRefinement> refinement;  // fine level with p = 1 mod 3

  /// "JF(7) ~ JC(1)^3 x JC(2)^2".
  std::string render() const;
  std::int64_t total_dimension() const;
  friend bool operator==(const IsogenyDecomposition&, const IsogenyDecomposition&) = default;
};

/// One factor JC_a^{|orbit|} per orbit, obtained by grouping the Kani-Rosen
/// quotients F_p / H_j = C_{p-1-j} into isomorphism classes. Throws AUDIT_FAIL
/// if the audit or the grouping fails.
IsogenyDecomposition decompose_coarse(const PrimeContext& ctx, std::optional<AuditMethod> method = std::nullopt);

/// Coarse with JC_gamma^2 replaced by JE_gamma^6 when p = 1 mod 3. Throws
/// AUDIT_FAIL if the gamma refinement does not pass.
IsogenyDecomposition decompose_fine(const PrimeContext& ctx, std::optional<AuditMethod> method = std::nullopt);

struct DimensionAudit {
  std::int64_t total = 0;
  std::int64_t expected = 0;
  std::int64_t exponent3_count = 0;  // exponent-3 factors of dimension (p-1)/2
  std::int64_t gamma_count = 0;      // exponent-6 (fine) or exponent-2 (coarse) gamma factors
  std::int64_t generic_count = 0;    // exponent-6 factors of dimension (p-1)/2
  std::int64_t expected_generic = 0;
};

/// Throws AUDIT_FAIL naming the first violated identity.
DimensionAudit dimension_audit(const IsogenyDecomposition& d);

/// B_0, B, B_1, ..., B_N of the group algebra decomposition matched to factors.
struct ShapeMatch {
  std::string component;
  CurveSpec curve;
  std::int64_t exponent = 0;
  std::int64_t dimension = 0;

  friend bool operator==(const ShapeMatch&, const ShapeMatch&) = default;
};

/// Throws SHAPE_MISMATCH unless d is fine and matches the expected shape.
std::vector<ShapeMatch> match_group_algebra_shape(const IsogenyDecomposition& d);

}  // namespace fermat
