#include <gtest/gtest.h>

#include <set>

#include "fermat/curves.hpp"
#include "fermat/error.hpp"
#include "fermat/orbits.hpp"

using namespace fermat;

TEST(Normalize, Examples) {
  auto c7 = make_context(7);
  EXPECT_EQ(normalize(4, 1, c7).alpha(), 4);
  EXPECT_EQ(normalize(1, 3, c7).alpha(), 5);  // 3^-1 = 5
  // p = 7: 3^-1 = 5, 2 * 5 = 10 = 3
  EXPECT_EQ(normalize(2, 3, c7).alpha(), 3);
  for (Residue a = 1; a <= 5; ++a) EXPECT_EQ(normalize(1, a, c7).alpha(), c7.inv(a));
}

TEST(Normalize, Errors) {
  auto c7 = make_context(7);
  try {
    normalize(3, 4, c7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerate);
  }
  EXPECT_THROW(normalize(0, 1, c7), Error);
  EXPECT_THROW(normalize(1, 7, c7), Error);
}

TEST(Normalize, UnitScalingInvariance) {
  for (auto p : {5, 7, 11, 13}) {
    auto ctx = make_context(p);
    for (Residue a = 1; a < p; ++a) {
      for (Residue b = 1; b < p; ++b) {
        if ((a + b) % p == 0) continue;
        const auto base = normalize(a, b, ctx);
        EXPECT_TRUE(ctx.in_xp(base.alpha()));
        for (Residue d = 1; d < p; ++d) EXPECT_EQ(normalize(ctx.mul(d, a), ctx.mul(d, b), ctx), base);
      }
    }
  }
}

TEST(Moebius, CompositionTableIsS3) {
  // closure, identity, inverses, associativity
  for (auto a : kAllMoebius) {
    EXPECT_EQ(compose(MoebiusLabel::kId, a), a);
    EXPECT_EQ(compose(a, MoebiusLabel::kId), a);
    int inverses = 0;
    for (auto b : kAllMoebius) {
      if (compose(a, b) == MoebiusLabel::kId) ++inverses;
      for (auto c : kAllMoebius) EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    }
    EXPECT_EQ(inverses, 1);
  }
  // 1/x o (1-x) = 1/(1-x)
  EXPECT_EQ(compose(MoebiusLabel::kInv, MoebiusLabel::kOneMinus), MoebiusLabel::kCyc);
  EXPECT_EQ(compose(MoebiusLabel::kCyc, MoebiusLabel::kCyc), MoebiusLabel::kCyc2);
}

TEST(Moebius, TransportExamples) {
  auto c7 = make_context(7);
  for (Residue a = 1; a <= 5; ++a) EXPECT_EQ(moebius_transport(a, MoebiusLabel::kId, c7), a);
  EXPECT_EQ(moebius_transport(2, MoebiusLabel::kInv, c7), 4);
  EXPECT_TRUE(orbit(2, c7).contains(4));
  // -2^-1 * 3 = -6 * 3 = -18 = 4 mod 11
  EXPECT_EQ(moebius_transport(2, MoebiusLabel::kCyc2, make_context(11)), 4);
  EXPECT_THROW(moebius_transport(0, MoebiusLabel::kInv, c7), Error);
}

TEST(Moebius, TransportEnumeratesOrbit) {
  for (auto p : {5, 7, 11, 13, 17, 19}) {
    auto ctx = make_context(p);
    for (Residue a = 1; a <= p - 2; ++a) {
      const auto o = orbit(a, ctx);
      std::multiset<Residue> images;
      for (auto phi : kAllMoebius) images.insert(moebius_transport(a, phi, ctx));
      EXPECT_EQ(std::set<Residue>(images.begin(), images.end()),
                std::set<Residue>(o.elements.begin(), o.elements.end()));
      for (auto e : o.elements) EXPECT_EQ(images.count(e), 6 / o.size());
    }
  }
}

// The labels name the substitution x -> phi(x) in the equation, so transport
// is contravariant in phi.
TEST(Moebius, TransportIsContravariant) {
  for (auto p : {5, 7, 11, 13}) {
    auto ctx = make_context(p);
    for (Residue a = 1; a <= p - 2; ++a) {
      for (auto outer : kAllMoebius) {
        for (auto inner : kAllMoebius) {
          EXPECT_EQ(moebius_transport(a, compose(outer, inner), ctx),
                    moebius_transport(moebius_transport(a, outer, ctx), inner, ctx));
        }
      }
    }
  }
}

TEST(Isomorphism, Examples) {
  auto c7 = make_context(7);
  for (Residue a = 1; a <= 5; ++a) EXPECT_TRUE(are_isomorphic(a, a, c7));
  EXPECT_TRUE(are_isomorphic(1, 5, c7));
  EXPECT_FALSE(are_isomorphic(2, 3, make_context(13)));
  EXPECT_THROW(are_isomorphic(1, 6, c7), Error);
}

TEST(Isomorphism, AgreesWithTransport) {
  for (auto p : {7, 11, 13, 19}) {
    auto ctx = make_context(p);
    for (Residue a = 1; a <= p - 2; ++a) {
      for (Residue b = 1; b <= p - 2; ++b) {
        bool reachable = false;
        for (auto phi : kAllMoebius) reachable = reachable || moebius_transport(a, phi, ctx) == b;
        EXPECT_EQ(are_isomorphic(a, b, ctx), reachable);
      }
    }
  }
}

TEST(Genus, Examples) {
  EXPECT_EQ(genus_of(CurveSpec::fermat(make_context(7))), 15);
  EXPECT_EQ(genus_of(CurveSpec::p_gonal(2, make_context(11))), 5);
  EXPECT_EQ(genus_of(CurveSpec::e_quotient(2, make_context(7))), 1);
  for (std::int64_t p = 5; p < 400; ++p) {
    if (!is_prime(p)) continue;
    auto ctx = make_context(p);
    EXPECT_EQ((p - 1) % 2, 0);
    EXPECT_EQ(2 * genus_of(CurveSpec::fermat(ctx)), (p - 1) * (p - 2));
    if (ctx.has_gamma()) {
      EXPECT_EQ((p - 1) % 6, 0);
      EXPECT_EQ(6 * genus_of(CurveSpec::e_quotient(ctx.gamma(), ctx)), p - 1);
    }
  }
}

TEST(CurveSpec, Validation) {
  EXPECT_THROW(CurveSpec::e_quotient(2, make_context(11)), Error);
  EXPECT_THROW(CurveSpec::e_quotient(3, make_context(7)), Error);
  EXPECT_THROW(CurveSpec::p_gonal(6, make_context(7)), Error);
  EXPECT_EQ(CurveSpec::p_gonal(1, make_context(7)).hyperelliptic_model(), "w^2 = u^7 - 1");
  EXPECT_FALSE(CurveSpec::p_gonal(2, make_context(7)).hyperelliptic_model());
}

TEST(CurveSpec, Descriptors) {
  auto c13 = make_context(13);
  EXPECT_EQ(CurveSpec::p_gonal(2, c13).descriptor(), "C_alpha(p=13, alpha=2)");
  EXPECT_EQ(CurveSpec::e_quotient(3, c13).descriptor(), "E_gamma(p=13, gamma=3)");
  EXPECT_EQ(CurveSpec::fermat(c13).descriptor(), "F(13)");
  EXPECT_EQ(CurveSpec::e_quotient(3, c13).jacobian_symbol(), "JE(3)");
  for (const auto& spec : {CurveSpec::p_gonal(2, c13), CurveSpec::e_quotient(9, c13), CurveSpec::fermat(c13)}) {
    EXPECT_EQ(parse_curve_descriptor(spec.descriptor()), spec);
  }
  EXPECT_THROW(parse_curve_descriptor("C_alpha(p=13, alpha=x)"), Error);
  EXPECT_THROW(parse_curve_descriptor("G(13)"), Error);
}

TEST(QuotientToCurve, Examples) {
  for (auto p : {7, 11, 13}) {
    auto ctx = make_context(p);
    EXPECT_EQ(quotient_to_curve(p - 2, ctx).alpha(), 1);
    if (ctx.has_gamma()) EXPECT_EQ(quotient_to_curve(ctx.inv(ctx.gamma()), ctx).alpha(), ctx.gamma());
    for (std::int64_t j = 1; j <= p - 2; ++j) {
      EXPECT_EQ(quotient_to_curve(j, ctx), normalize(ctx.neg(1 + j), 1, ctx));
    }
  }
  auto c7 = make_context(7);
  EXPECT_EQ(quotient_to_curve(4, c7).alpha(), 2);
  EXPECT_EQ(normalize(c7.reduce(-5), 1, c7).alpha(), 2);
  EXPECT_THROW(quotient_to_curve(0, c7), Error);
}
