#include "fermat/curves.hpp"

#include <charconv>
#include <stdexcept>

#include "fermat/error.hpp"
#include "fermat/orbits.hpp"

namespace fermat {

std::string_view to_string(MoebiusLabel label) {
  switch (label) {
    case MoebiusLabel::kId: return "x";
    case MoebiusLabel::kInv: return "1/x";
    case MoebiusLabel::kOneMinus: return "1-x";
    case MoebiusLabel::kOver: return "x/(x-1)";
    case MoebiusLabel::kCyc: return "1/(1-x)";
    case MoebiusLabel::kCyc2: return "(x-1)/x";
  }
  return "?";
}

std::array<int, 3> moebius_points(MoebiusLabel label) {
  // index 0 -> 0, 1 -> 1, 2 -> oo
  switch (label) {
    case MoebiusLabel::kId: return {0, 1, 2};
    case MoebiusLabel::kInv: return {2, 1, 0};
    case MoebiusLabel::kOneMinus: return {1, 0, 2};
    case MoebiusLabel::kOver: return {0, 2, 1};
    case MoebiusLabel::kCyc: return {1, 2, 0};
    case MoebiusLabel::kCyc2: return {2, 0, 1};
  }
  throw std::logic_error("unknown Moebius label");
}

MoebiusLabel compose(MoebiusLabel outer, MoebiusLabel inner) {
  const auto o = moebius_points(outer);
  const auto i = moebius_points(inner);
  const std::array<int, 3> c = {o[i[0]], o[i[1]], o[i[2]]};
  for (auto label : kAllMoebius) {
    if (moebius_points(label) == c) return label;
  }
  throw std::logic_error("Moebius composition left S3");
}

CurveSpec CurveSpec::fermat(const PrimeContext& ctx) { return CurveSpec(ctx, CurveFamily::kFermat, 0); }

CurveSpec CurveSpec::p_gonal(Residue alpha, const PrimeContext& ctx) {
  ctx.require_xp(alpha, "alpha");
  return CurveSpec(ctx, CurveFamily::kPGonal, alpha);
}

CurveSpec CurveSpec::e_quotient(Residue gamma, const PrimeContext& ctx) {
  if (!ctx.has_gamma()) ctx.gamma();  // throws NO_GAMMA
  if (!ctx.is_gamma_root(gamma)) {
    throw Error(ErrorCode::kOutOfRange,
                std::to_string(gamma) + " is not a root of g^2 + g + 1 mod " + std::to_string(ctx.p()));
  }
  return CurveSpec(ctx, CurveFamily::kEQuotient, gamma);
}

std::string CurveSpec::descriptor() const {
  const std::string p = std::to_string(ctx_.p());
  switch (family_) {
    case CurveFamily::kFermat: return "F(" + p + ")";
    case CurveFamily::kPGonal: return "C_alpha(p=" + p + ", alpha=" + std::to_string(alpha_) + ")";
    case CurveFamily::kEQuotient: return "E_gamma(p=" + p + ", gamma=" + std::to_string(alpha_) + ")";
  }
  return {};
}

std::string CurveSpec::jacobian_symbol() const {
  switch (family_) {
    case CurveFamily::kFermat: return "JF(" + std::to_string(ctx_.p()) + ")";
    case CurveFamily::kPGonal: return "JC(" + std::to_string(alpha_) + ")";
    case CurveFamily::kEQuotient: return "JE(" + std::to_string(alpha_) + ")";
  }
  return {};
}

std::optional<std::string> CurveSpec::hyperelliptic_model() const {
  if (family_ == CurveFamily::kPGonal && alpha_ == 1) return "w^2 = u^" + std::to_string(ctx_.p()) + " - 1";
  return std::nullopt;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidArgument, "malformed curve descriptor '" + std::string(whole) + "'");
  }
  return value;
}

bool consume(std::string_view& text, std::string_view prefix) {
  if (text.substr(0, prefix.size()) != prefix) return false;
  text.remove_prefix(prefix.size());
  return true;
}

}  // namespace

CurveSpec parse_curve_descriptor(std::string_view text) {
  std::string_view rest = text;
  auto fail = [&] {
    return Error(ErrorCode::kInvalidArgument, "malformed curve descriptor '" + std::string(text) + "'");
  };
  if (rest.empty() || rest.back() != ')') throw fail();
  rest.remove_suffix(1);

  if (consume(rest, "F(")) return CurveSpec::fermat(make_context(parse_int(rest, text)));

  const bool is_c = consume(rest, "C_alpha(p=");
  if (!is_c && !consume(rest, "E_gamma(p=")) throw fail();
  const auto comma = rest.find(", ");
  if (comma == std::string_view::npos) throw fail();
  const auto ctx = make_context(parse_int(rest.substr(0, comma), text));
  rest.remove_prefix(comma + 2);
  if (!consume(rest, is_c ? "alpha=" : "gamma=")) throw fail();
  const Residue value = parse_int(rest, text);
  return is_c ? CurveSpec::p_gonal(value, ctx) : CurveSpec::e_quotient(value, ctx);
}

CurveSpec normalize(Residue alpha, Residue beta, const PrimeContext& ctx) {
  const auto p = ctx.p();
  if (alpha < 1 || alpha > p - 1 || beta < 1 || beta > p - 1) {
    throw Error(ErrorCode::kOutOfRange, "exponents (" + std::to_string(alpha) + ", " + std::to_string(beta) +
                                            ") must lie in {1, ..., p-1}");
  }
  if (ctx.add(alpha, beta) == 0) {
    throw Error(ErrorCode::kDegenerate, "alpha + beta = 0 mod " + std::to_string(p) +
                                            "; the cover has fewer than three branch points");
  }
  return CurveSpec::p_gonal(ctx.mul(alpha, ctx.inv(beta)), ctx);
}

Residue moebius_transport(Residue alpha, MoebiusLabel phi, const PrimeContext& ctx) {
  ctx.require_xp(alpha, "alpha");
  const Residue one_plus = alpha + 1;
  switch (phi) {
    case MoebiusLabel::kId: return alpha;
    case MoebiusLabel::kInv: return ctx.neg(one_plus);
    case MoebiusLabel::kOneMinus: return ctx.inv(alpha);
    case MoebiusLabel::kOver: return ctx.neg(ctx.mul(alpha, ctx.inv(one_plus)));
    case MoebiusLabel::kCyc: return ctx.neg(ctx.inv(one_plus));
    case MoebiusLabel::kCyc2: return ctx.neg(ctx.mul(ctx.inv(alpha), one_plus));
  }
  throw std::logic_error("unknown Moebius label");
}

bool are_isomorphic(Residue alpha1, Residue alpha2, const PrimeContext& ctx) {
  ctx.require_xp(alpha2, "alpha2");
  return orbit(alpha1, ctx).contains(alpha2);
}

std::int64_t genus_of(const CurveSpec& spec) {
  const auto p = spec.context().p();
  switch (spec.family()) {
    case CurveFamily::kFermat: return (p - 1) * (p - 2) / 2;
    case CurveFamily::kPGonal: return (p - 1) / 2;
    case CurveFamily::kEQuotient: return (p - 1) / 6;
  }
  throw std::logic_error("unknown curve family");
}

CurveSpec quotient_to_curve(std::int64_t j, const PrimeContext& ctx) {
  ctx.require_xp(j, "j");
  return CurveSpec::p_gonal(ctx.p() - 1 - j, ctx);
}

}  // namespace fermat
