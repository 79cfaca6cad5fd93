#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fermat/arith.hpp"

namespace fermat {

enum class CurveFamily { kFermat, kPGonal, kEQuotient };

/// The six Moebius maps permuting {0, 1, oo}. Labels name the substitution
/// applied to x in the defining equation y^p = x^a (x-1).
enum class MoebiusLabel {
  kId,        // x
  kInv,       // 1/x
  kOneMinus,  // 1 - x
  kOver,      // x/(x-1)
  kCyc,       // 1/(1-x)
  kCyc2,      // (x-1)/x
};

inline constexpr std::array<MoebiusLabel, 6> kAllMoebius = {
    MoebiusLabel::kId,   MoebiusLabel::kInv, MoebiusLabel::kOneMinus,
    MoebiusLabel::kOver, MoebiusLabel::kCyc, MoebiusLabel::kCyc2};

std::string_view to_string(MoebiusLabel label);

/// Images of (0, 1, oo) encoded as indices 0, 1, 2.
std::array<int, 3> moebius_points(MoebiusLabel label);

/// outer o inner as maps of the Riemann sphere.
MoebiusLabel compose(MoebiusLabel outer, MoebiusLabel inner);

/// A curve descriptor. P-gonal specs are stored canonically with beta = 1.
class CurveSpec {
 public:
  static CurveSpec fermat(const PrimeContext& ctx);
  /// C_alpha : y^p = x^alpha (x-1), alpha in X_p.
  static CurveSpec p_gonal(Residue alpha, const PrimeContext& ctx);
  /// E_gamma = C_gamma / <R>; gamma must be a root of g^2 + g + 1.
  static CurveSpec e_quotient(Residue gamma, const PrimeContext& ctx);

  const PrimeContext& context() const noexcept { return ctx_; }
  CurveFamily family() const noexcept { return family_; }
  /// Exponent alpha (P_GONAL) or gamma (E_QUOTIENT); 0 for FERMAT.
  Residue alpha() const noexcept { return alpha_; }
  Residue beta() const noexcept { return 1; }

  /// "F(13)", "C_alpha(p=13, alpha=2)", "E_gamma(p=13, gamma=3)".
  std::string descriptor() const;
  /// "JF(13)", "JC(2)", "JE(3)".
  std::string jacobian_symbol() const;
  /// "w^2 = u^p - 1" for C_1, which is hyperelliptic.
  std::optional<std::string> hyperelliptic_model() const;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;

 private:
  CurveSpec(const PrimeContext& ctx, CurveFamily family, Residue alpha)
      : ctx_(ctx), family_(family), alpha_(alpha) {}

  PrimeContext ctx_;
  CurveFamily family_;
  Residue alpha_;
};

/// Parses a descriptor() string back into a CurveSpec.
CurveSpec parse_curve_descriptor(std::string_view text);

/// C_{alpha,beta} is isomorphic to C_{alpha beta^-1}. Throws DEGENERATE when
/// alpha + beta = 0 mod p.
CurveSpec normalize(Residue alpha, Residue beta, const PrimeContext& ctx);

/// Exponent of the curve obtained from C_alpha by the substitution x -> phi(x).
Residue moebius_transport(Residue alpha, MoebiusLabel phi, const PrimeContext& ctx);

bool are_isomorphic(Residue alpha1, Residue alpha2, const PrimeContext& ctx);

std::int64_t genus_of(const CurveSpec& spec);

/// The quotient F_p / H_j is C_{p-1-j}.
CurveSpec quotient_to_curve(std::int64_t j, const PrimeContext& ctx);

}  // namespace fermat
