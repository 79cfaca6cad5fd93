#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace fermat {

/// A residue mod p, stored in {0, ..., p-1}.
using Residue = std::int64_t;

/// Largest accepted modulus. Products of two residues must fit in int64.
inline constexpr std::int64_t kMaxPrime = 2147483647;

bool is_prime(std::int64_t n);

/// The prime p >= 5 with modular helpers and, when p = 1 mod 3, the two roots
/// of g^2 + g + 1 = 0 (smaller root first; the roots are mutual inverses).
class PrimeContext {
 public:
  std::int64_t p() const noexcept { return p_; }
  int residue_mod_3() const noexcept { return static_cast<int>(p_ % 3); }
  const std::optional<std::pair<Residue, Residue>>& gamma_pair() const noexcept {
    return gamma_pair_;
  }
  bool has_gamma() const noexcept { return gamma_pair_.has_value(); }
  /// Smaller root; throws NO_GAMMA when p = 2 mod 3.
  Residue gamma() const;
  bool is_gamma_root(Residue g) const noexcept;

  Residue reduce(std::int64_t a) const noexcept {
    const std::int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }
  Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
  Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
  Residue neg(Residue a) const noexcept { return reduce(-a); }
  Residue mul(Residue a, Residue b) const noexcept { return reduce(reduce(a) * reduce(b)); }
  Residue pow(Residue a, std::int64_t e) const;
  /// Throws OUT_OF_RANGE for a = 0 mod p.
  Residue inv(Residue a) const;

  /// Membership in X_p = {1, ..., p-2}.
  bool in_xp(std::int64_t a) const noexcept { return 1 <= a && a <= p_ - 2; }
  void require_xp(std::int64_t a, std::string_view what) const;

  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;

 private:
  friend PrimeContext make_context(std::int64_t p);
  PrimeContext() = default;

  std::int64_t p_ = 0;
  std::optional<std::pair<Residue, Residue>> gamma_pair_;
};

/// Validates p (NOT_PRIME, TOO_SMALL, TOO_LARGE) and finds the gamma roots by
/// exhaustive scan of X_p.
PrimeContext make_context(std::int64_t p);

}  // namespace fermat
