#include "fermat/groups.hpp"

#include <string>

namespace fermat {

S3Element operator*(S3Element a, S3Element b) noexcept {
  const int rot = a.refl ? a.rot - b.rot : a.rot + b.rot;
  return {a.refl ^ b.refl, (rot % 3 + 3) % 3};
}

S3Element inverse(S3Element a) noexcept {
  if (a.refl) return a;
  return {0, (3 - a.rot) % 3};
}

// ---------------------------------------------------------------------------
// FermatGroup

std::array<Residue, 2> FermatGroup::act(S3Element s, Residue m, Residue n) const {
  // exponent vectors of a1, a2, a3
  static constexpr std::array<std::array<int, 2>, 3> kBasis = {{{1, 0}, {0, 1}, {-1, -1}}};
  const auto& e0 = kBasis[s.apply(0)];
  const auto& e1 = kBasis[s.apply(1)];
  return {ctx_.reduce(m * e0[0] + n * e1[0]), ctx_.reduce(m * e0[1] + n * e1[1])};
}

FermatAut FermatGroup::multiply(const Element& g, const Element& h) const {
  const auto t = act(g.sigma, h.m, h.n);
  return {ctx_.add(g.m, t[0]), ctx_.add(g.n, t[1]), g.sigma * h.sigma};
}

FermatAut FermatGroup::inverse(const Element& g) const {
  const S3Element s = fermat::inverse(g.sigma);
  const auto t = act(s, g.m, g.n);
  return {ctx_.neg(t[0]), ctx_.neg(t[1]), s};
}

FermatAut FermatGroup::power(const Element& g, std::int64_t e) const {
  Element base = e < 0 ? inverse(g) : g;
  e = e < 0 ? -e : e;
  Element acc = identity();
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

std::int64_t FermatGroup::element_order(const Element& g) const {
  std::int64_t n = 1;
  for (Element x = g; x != identity(); x = multiply(x, g)) ++n;
  return n;
}

std::size_t FermatGroup::index(const Element& g) const {
  return static_cast<std::size_t>((g.m * ctx_.p() + g.n) * 6 + g.sigma.index());
}

FermatAut FermatGroup::element(std::size_t i) const {
  const auto p = static_cast<std::size_t>(ctx_.p());
  const auto s = static_cast<int>(i % 6);
  const auto mn = i / 6;
  return {static_cast<Residue>(mn / p), static_cast<Residue>(mn % p), S3Element::from_index(s)};
}

bool FermatGroup::contains(const Element& g) const noexcept {
  const auto p = ctx_.p();
  return g.m >= 0 && g.m < p && g.n >= 0 && g.n < p && (g.sigma.refl == 0 || g.sigma.refl == 1) &&
         g.sigma.rot >= 0 && g.sigma.rot < 3;
}

std::string FermatGroup::to_string(const Element& g) const {
  return "a1^" + std::to_string(g.m) + " a2^" + std::to_string(g.n) + " u^" + std::to_string(g.sigma.rot) +
         " v^" + std::to_string(g.sigma.refl);
}

// ---------------------------------------------------------------------------
// PGonalGroup

PGonalGroup::PGonalGroup(const PrimeContext& ctx) : PGonalGroup(ctx, ctx.gamma()) {}

PGonalGroup::PGonalGroup(const PrimeContext& ctx, Residue root) : ctx_(ctx), gamma_(root) {
  if (!ctx.has_gamma()) ctx.gamma();  // NO_GAMMA
  if (!ctx.is_gamma_root(root)) {
    throw Error(ErrorCode::kOutOfRange,
                std::to_string(root) + " is not a root of g^2 + g + 1 mod " + std::to_string(ctx.p()));
  }
  const Residue g2 = ctx_.mul(root, root);
  twist_ = {1, g2, ctx_.mul(g2, g2)};
}

PGonalAut PGonalGroup::multiply(const Element& g, const Element& h) const {
  return {ctx_.add(g.k, ctx_.mul(twist_[static_cast<std::size_t>(g.e)], h.k)), (g.e + h.e) % 3};
}

PGonalAut PGonalGroup::inverse(const Element& g) const {
  const int e = (3 - g.e) % 3;
  return {ctx_.neg(ctx_.mul(twist_[static_cast<std::size_t>(e)], g.k)), e};
}

PGonalAut PGonalGroup::power(const Element& g, std::int64_t e) const {
  Element base = e < 0 ? inverse(g) : g;
  e = e < 0 ? -e : e;
  Element acc = identity();
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

std::int64_t PGonalGroup::element_order(const Element& g) const {
  std::int64_t n = 1;
  for (Element x = g; x != identity(); x = multiply(x, g)) ++n;
  return n;
}

std::size_t PGonalGroup::index(const Element& g) const { return static_cast<std::size_t>(g.k * 3 + g.e); }

PGonalAut PGonalGroup::element(std::size_t i) const {
  return {static_cast<Residue>(i / 3), static_cast<int>(i % 3)};
}

bool PGonalGroup::contains(const Element& g) const noexcept {
  return g.k >= 0 && g.k < ctx_.p() && g.e >= 0 && g.e < 3;
}

std::string PGonalGroup::to_string(const Element& g) const {
  return "T^" + std::to_string(g.k) + " R^" + std::to_string(g.e);
}

// ---------------------------------------------------------------------------

Subgroup<FermatGroup> fermat_h(const FermatGroup& group) {
  return subgroup_closure(group, {group.a1(), group.a2()});
}

Subgroup<FermatGroup> fermat_h_j(const FermatGroup& group, std::int64_t j) {
  const auto& ctx = group.context();
  ctx.require_xp(j, "j");
  return subgroup_closure(group, {FermatAut{1, ctx.reduce(1 + j), {}}});
}

Subgroup<PGonalGroup> pgonal_k(const PGonalGroup& group, int i) {
  if (i < 1 || i > 3) throw Error(ErrorCode::kOutOfRange, "K_i is defined for i in {1, 2, 3}");
  const auto& ctx = group.context();
  const Residue shift = ctx.sub(ctx.mul(group.gamma(), group.gamma()), 1);
  return subgroup_closure(group, {PGonalAut{ctx.mul(i - 1, shift), 1}});
}

}  // namespace fermat
