#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermat/arith.hpp"
#include "fermat/curves.hpp"

namespace fermat {

/// The curve C_alpha : y^p = x^alpha (x-1) on which monomials are reduced.
struct MonomialCurve {
  std::int64_t p = 0;
  Residue alpha = 0;

  friend auto operator<=>(const MonomialCurve&, const MonomialCurve&) = default;
};

/// sign * w^omega_exp * x^a * (x-1)^b * y^d, with w = exp(2 pi i / p).
struct MonomialFunction {
  int sign = 1;
  Residue omega_exp = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t d = 0;

  friend auto operator<=>(const MonomialFunction&, const MonomialFunction&) = default;
};

inline MonomialFunction monomial_one() { return {}; }
inline MonomialFunction monomial_x() { return {1, 0, 1, 0, 0}; }
inline MonomialFunction monomial_y() { return {1, 0, 0, 0, 1}; }

/// Normal form: d in [0, p), using y^p = x^alpha (x-1).
MonomialFunction reduce(const MonomialFunction& f, const MonomialCurve& curve);

MonomialFunction multiply(const MonomialFunction& f, const MonomialFunction& g, const MonomialCurve& curve);
/// f^n for any integer n, reduced.
MonomialFunction power(const MonomialFunction& f, std::int64_t n, const MonomialCurve& curve);

/// x-part of a monomial map: one of the six Moebius maps, as f and f - 1.
struct MoebiusMonomial {
  MoebiusLabel label;
  MonomialFunction f;
  MonomialFunction f_minus_one;
};

MoebiusMonomial moebius_monomial(MoebiusLabel label);
/// The Moebius map whose monomial form is f, if any.
std::optional<MoebiusMonomial> find_moebius(const MonomialFunction& f);

/// (x, y) -> (x_image, y_image) on a fixed curve. Both images are kept reduced.
class MonomialMap {
 public:
  /// Throws INVALID_ARGUMENT unless x_image is one of the six Moebius forms.
  MonomialMap(const MonomialCurve& curve, const MonomialFunction& x_image, const MonomialFunction& y_image);

  static MonomialMap identity(const MonomialCurve& curve);

  const MonomialCurve& curve() const noexcept { return curve_; }
  const MonomialFunction& x_image() const noexcept { return x_image_; }
  const MonomialFunction& y_image() const noexcept { return y_image_; }
  MoebiusLabel x_label() const noexcept { return x_label_; }

  friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
    return a.curve_ == b.curve_ && a.x_image_ == b.x_image_ && a.y_image_ == b.y_image_;
  }
  friend auto operator<=>(const MonomialMap& a, const MonomialMap& b) {
    if (auto c = a.curve_ <=> b.curve_; c != 0) return c;
    if (auto c = a.x_image_ <=> b.x_image_; c != 0) return c;
    return a.y_image_ <=> b.y_image_;
  }

 private:
  MonomialCurve curve_;
  MonomialFunction x_image_;
  MonomialFunction y_image_;
  MoebiusLabel x_label_;
};

/// Substitutes a monomial into a monomial map's image: h(X, Y) with X, X - 1, Y
/// taken from inner. Throws NON_MONOMIAL if inner's x-part has no monomial
/// f - 1.
MonomialFunction substitute(const MonomialFunction& h, const MonomialMap& inner);

/// outer o inner as maps of points. Throws INVALID_ARGUMENT for different
/// curves, NON_MONOMIAL if the result leaves the Moebius set.
MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner);
/// M^n for n >= 0.
MonomialMap power(const MonomialMap& m, std::int64_t n);
/// Smallest n in [1, bound] with M^n = id.
std::optional<std::int64_t> order_of(const MonomialMap& m, std::int64_t bound);

/// T(x, y) = (x, w y) on C_alpha.
MonomialMap build_T(const PrimeContext& ctx, Residue alpha);
/// T on C_gamma for the smaller root. Throws NO_GAMMA.
MonomialMap build_T(const PrimeContext& ctx);

/// R(x, y) = (1/(1-x), (-1)^eps x^((g^2+g+1)/p) / y^(g+1)) on C_g. eps defaults
/// to 1 for even g and 2 for odd g. Throws NO_GAMMA, or OUT_OF_RANGE if root is
/// not a gamma root.
MonomialMap build_R(const PrimeContext& ctx, Residue root, std::optional<int> eps = std::nullopt);
MonomialMap build_R(const PrimeContext& ctx);
int default_epsilon(Residue root);

/// J(x, y) = (1 - x, y) on C_1.
MonomialMap build_J(const PrimeContext& ctx);

/// y_image^p and x_image^alpha (x_image - 1) have the same normal form.
bool verify_curve_automorphism(const MonomialMap& m);

/// Which eps in {1, 2} make R an automorphism of C_root.
struct EpsilonCheck {
  bool eps1_passes = false;
  bool eps2_passes = false;

  bool exactly_one() const noexcept { return eps1_passes != eps2_passes; }
  std::optional<int> passing() const;
};
EpsilonCheck check_epsilon(const PrimeContext& ctx, Residue root);

/// Words in T and R, read as compositions: {R, T} is R o T.
enum class Letter { kT, kR };
struct WordPart {
  Letter letter;
  std::int64_t exponent;
};
using Word = std::vector<WordPart>;

/// Negative exponents use T^-1 = T^(p-1) and R^-1 = R^2.
MonomialMap evaluate_word(const Word& word, const PrimeContext& ctx, Residue root);
/// Throws NO_GAMMA.
bool verify_relation(const Word& lhs, const Word& rhs, const PrimeContext& ctx);
bool verify_relation(const Word& lhs, const Word& rhs, const PrimeContext& ctx, Residue root);

std::string to_string(const Word& word);

/// "-(x-1)^-1", "w^1*y", "x"; "1" for the empty product.
std::string render(const MonomialFunction& f);
/// "(x, w^1*y)".
std::string render(const MonomialMap& m);

}  // namespace fermat
