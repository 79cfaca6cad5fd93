#include "fermat/monomial.hpp"

#include <array>

#include "fermat/error.hpp"

namespace fermat {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::kOutOfRange, "monomial exponent overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::kOutOfRange, "monomial exponent overflow");
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

Residue mod(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

const std::array<MoebiusMonomial, 6>& moebius_table() {
  static const std::array<MoebiusMonomial, 6> table = {{
      {MoebiusLabel::kId, {1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}},           // x;        x - 1
      {MoebiusLabel::kInv, {1, 0, -1, 0, 0}, {-1, 0, -1, 1, 0}},       // 1/x;      -(x-1)/x
      {MoebiusLabel::kOneMinus, {-1, 0, 0, 1, 0}, {-1, 0, 1, 0, 0}},   // 1-x;      -x
      {MoebiusLabel::kOver, {1, 0, 1, -1, 0}, {1, 0, 0, -1, 0}},       // x/(x-1);  1/(x-1)
      {MoebiusLabel::kCyc, {-1, 0, 0, -1, 0}, {-1, 0, 1, -1, 0}},      // 1/(1-x);  -x/(x-1)
      {MoebiusLabel::kCyc2, {1, 0, -1, 1, 0}, {-1, 0, -1, 0, 0}},      // (x-1)/x;  -1/x
  }};
  return table;
}

std::string factor(const std::string& base, std::int64_t e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace

MonomialFunction reduce(const MonomialFunction& f, const MonomialCurve& curve) {
  const std::int64_t q = floor_div(f.d, curve.p);
  MonomialFunction out = f;
  out.sign = f.sign < 0 ? -1 : 1;
  out.omega_exp = mod(f.omega_exp, curve.p);
  out.d = f.d - q * curve.p;
  out.a = checked_add(f.a, checked_mul(q, curve.alpha));
  out.b = checked_add(f.b, q);
  return out;
}

MonomialFunction multiply(const MonomialFunction& f, const MonomialFunction& g, const MonomialCurve& curve) {
  return reduce({f.sign * g.sign, f.omega_exp + g.omega_exp, checked_add(f.a, g.a), checked_add(f.b, g.b), f.d + g.d},
                curve);
}

MonomialFunction power(const MonomialFunction& f, std::int64_t n, const MonomialCurve& curve) {
  const int sign = (f.sign < 0 && n % 2 != 0) ? -1 : 1;
  return reduce({sign, mod(checked_mul(mod(f.omega_exp, curve.p), mod(n, curve.p)), curve.p), checked_mul(f.a, n),
                 checked_mul(f.b, n), checked_mul(f.d, n)},
                curve);
}

MoebiusMonomial moebius_monomial(MoebiusLabel label) {
  for (const auto& entry : moebius_table()) {
    if (entry.label == label) return entry;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown Moebius label");
}

std::optional<MoebiusMonomial> find_moebius(const MonomialFunction& f) {
  for (const auto& entry : moebius_table()) {
    if (entry.f == f) return entry;
  }
  return std::nullopt;
}

MonomialMap::MonomialMap(const MonomialCurve& curve, const MonomialFunction& x_image,
                         const MonomialFunction& y_image)
    : curve_(curve), x_image_(reduce(x_image, curve)), y_image_(reduce(y_image, curve)) {
  const auto entry = find_moebius(x_image_);
  if (!entry) throw Error(ErrorCode::kInvalidArgument, "x image " + render(x_image_) + " is not a Moebius map");
  x_label_ = entry->label;
}

MonomialMap MonomialMap::identity(const MonomialCurve& curve) {
  return MonomialMap(curve, monomial_x(), monomial_y());
}

MonomialFunction substitute(const MonomialFunction& h, const MonomialMap& inner) {
  const auto& curve = inner.curve();
  const auto entry = find_moebius(inner.x_image());
  if (!entry) throw Error(ErrorCode::kNonMonomial, "x image " + render(inner.x_image()) + " has no monomial f - 1");
  MonomialFunction out{h.sign, h.omega_exp, 0, 0, 0};
  out = multiply(out, power(inner.x_image(), h.a, curve), curve);
  out = multiply(out, power(entry->f_minus_one, h.b, curve), curve);
  out = multiply(out, power(inner.y_image(), h.d, curve), curve);
  return out;
}

MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner) {
  if (outer.curve() != inner.curve()) {
    throw Error(ErrorCode::kInvalidArgument, "compose of maps on different curves");
  }
  const auto x = substitute(outer.x_image(), inner);
  const auto y = substitute(outer.y_image(), inner);
  if (!find_moebius(x)) throw Error(ErrorCode::kNonMonomial, "composite x image " + render(x) + " left the Moebius set");
  return MonomialMap(inner.curve(), x, y);
}

MonomialMap power(const MonomialMap& m, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative power of a monomial map");
  MonomialMap result = MonomialMap::identity(m.curve());
  MonomialMap base = m;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

std::optional<std::int64_t> order_of(const MonomialMap& m, std::int64_t bound) {
  const auto id = MonomialMap::identity(m.curve());
  MonomialMap cur = m;
  for (std::int64_t n = 1; n <= bound; ++n) {
    if (cur == id) return n;
    cur = compose(cur, m);
  }
  return std::nullopt;
}

MonomialMap build_T(const PrimeContext& ctx, Residue alpha) {
  ctx.require_xp(alpha, "alpha");
  return MonomialMap({ctx.p(), alpha}, monomial_x(), {1, 1, 0, 0, 1});
}

MonomialMap build_T(const PrimeContext& ctx) { return build_T(ctx, ctx.gamma()); }

int default_epsilon(Residue root) { return root % 2 == 0 ? 1 : 2; }

MonomialMap build_R(const PrimeContext& ctx, Residue root, std::optional<int> eps) {
  if (!ctx.has_gamma()) {
    throw Error(ErrorCode::kNoGamma, "R needs p = 1 mod 3; p = " + std::to_string(ctx.p()));
  }
  if (!ctx.is_gamma_root(root)) {
    throw Error(ErrorCode::kOutOfRange, std::to_string(root) + " is not a root of g^2 + g + 1 mod " +
                                            std::to_string(ctx.p()));
  }
  const int e = eps.value_or(default_epsilon(root));
  if (e != 1 && e != 2) throw Error(ErrorCode::kInvalidArgument, "eps must be 1 or 2");
  const std::int64_t x_exp = (root * root + root + 1) / ctx.p();
  const MonomialFunction y{e == 1 ? -1 : 1, 0, x_exp, 0, -(root + 1)};
  return MonomialMap({ctx.p(), root}, moebius_monomial(MoebiusLabel::kCyc).f, y);
}

MonomialMap build_R(const PrimeContext& ctx) { return build_R(ctx, ctx.gamma()); }

MonomialMap build_J(const PrimeContext& ctx) {
  return MonomialMap({ctx.p(), 1}, moebius_monomial(MoebiusLabel::kOneMinus).f, monomial_y());
}

bool verify_curve_automorphism(const MonomialMap& m) {
  const auto& curve = m.curve();
  const auto entry = find_moebius(m.x_image());
  if (!entry) return false;
  const auto lhs = power(m.y_image(), curve.p, curve);
  const auto rhs = multiply(power(m.x_image(), curve.alpha, curve), entry->f_minus_one, curve);
  return lhs == rhs;
}

std::optional<int> EpsilonCheck::passing() const {
  if (!exactly_one()) return std::nullopt;
  return eps1_passes ? 1 : 2;
}

EpsilonCheck check_epsilon(const PrimeContext& ctx, Residue root) {
  return {verify_curve_automorphism(build_R(ctx, root, 1)), verify_curve_automorphism(build_R(ctx, root, 2))};
}

MonomialMap evaluate_word(const Word& word, const PrimeContext& ctx, Residue root) {
  const auto t = build_T(ctx, root);
  const auto r = build_R(ctx, root);
  MonomialMap acc = MonomialMap::identity(t.curve());
  for (const auto& part : word) {
    const bool is_t = part.letter == Letter::kT;
    const std::int64_t e = mod(part.exponent, is_t ? ctx.p() : 3);
    acc = compose(acc, power(is_t ? t : r, e));
  }
  return acc;
}

bool verify_relation(const Word& lhs, const Word& rhs, const PrimeContext& ctx) {
  return verify_relation(lhs, rhs, ctx, ctx.gamma());
}

bool verify_relation(const Word& lhs, const Word& rhs, const PrimeContext& ctx, Residue root) {
  return evaluate_word(lhs, ctx, root) == evaluate_word(rhs, ctx, root);
}

std::string to_string(const Word& word) {
  if (word.empty()) return "id";
  std::string out;
  for (const auto& part : word) {
    if (!out.empty()) out += " o ";
    out += factor(part.letter == Letter::kT ? "T" : "R", part.exponent);
  }
  return out;
}

std::string render(const MonomialFunction& f) {
  std::string body;
  auto append = [&body](const std::string& piece) {
    if (!body.empty()) body += "*";
    body += piece;
  };
  if (f.omega_exp != 0) append("w^" + std::to_string(f.omega_exp));
  if (f.a != 0) append(factor("x", f.a));
  if (f.b != 0) append(factor("(x-1)", f.b));
  if (f.d != 0) append(factor("y", f.d));
  if (body.empty()) body = "1";
  return f.sign < 0 ? "-" + body : body;
}

std::string render(const MonomialMap& m) { return "(" + render(m.x_image()) + ", " + render(m.y_image()) + ")"; }

}  // namespace fermat
