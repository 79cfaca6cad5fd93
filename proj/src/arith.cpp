#include "fermat/arith.hpp"

#include <string>
#include <tuple>

#include "fermat/error.hpp"

namespace fermat {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Residue PrimeContext::gamma() const {
  if (!gamma_pair_) {
    throw Error(ErrorCode::kNoGamma,
                "p = " + std::to_string(p_) + " is 2 mod 3; g^2 + g + 1 has no root");
  }
  return gamma_pair_->first;
}

bool PrimeContext::is_gamma_root(Residue g) const noexcept {
  return gamma_pair_ && (g == gamma_pair_->first || g == gamma_pair_->second);
}

Residue PrimeContext::pow(Residue a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  Residue base = reduce(a);
  Residue acc = 1 % p_;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Residue PrimeContext::inv(Residue a) const {
  std::int64_t r0 = p_, r1 = reduce(a);
  if (r1 == 0) throw Error(ErrorCode::kOutOfRange, "0 has no inverse mod " + std::to_string(p_));
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return reduce(s0);
}

void PrimeContext::require_xp(std::int64_t a, std::string_view what) const {
  if (!in_xp(a)) {
    throw Error(ErrorCode::kOutOfRange, std::string(what) + " = " + std::to_string(a) +
                                            " is not in X_p = {1, ..., " +
                                            std::to_string(p_ - 2) + "}");
  }
}

PrimeContext make_context(std::int64_t p) {
  if (p < 5) throw Error(ErrorCode::kTooSmall, "p = " + std::to_string(p) + " must satisfy p >= 5");
  if (p > kMaxPrime) {
    throw Error(ErrorCode::kTooLarge,
                "p = " + std::to_string(p) + " exceeds the word-size bound " + std::to_string(kMaxPrime));
  }
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, "p = " + std::to_string(p) + " is not prime");

  PrimeContext ctx;
  ctx.p_ = p;
  if (p % 3 == 1) {
    for (Residue g = 1; g <= p - 2; ++g) {
      if (ctx.reduce(g * g + g + 1) == 0) {
        ctx.gamma_pair_ = std::pair{g, ctx.inv(g)};
        break;
      }
    }
  }
  return ctx;
}

}  // namespace fermat
