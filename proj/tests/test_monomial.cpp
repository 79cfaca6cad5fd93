#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <numbers>
#include <set>

#include "fermat/error.hpp"
#include "fermat/groups.hpp"
#include "fermat/monomial.hpp"

namespace fermat {
namespace {

using cplx = std::complex<double>;

cplx ipow(cplx z, std::int64_t e) {
  cplx out = 1.0;
  cplx base = e < 0 ? 1.0 / z : z;
  for (std::int64_t n = e < 0 ? -e : e; n > 0; n >>= 1) {
    if (n & 1) out *= base;
    base *= base;
  }
  return out;
}

cplx evaluate(const MonomialFunction& f, std::int64_t p, cplx x, cplx y) {
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(f.omega_exp) / static_cast<double>(p));
  return static_cast<double>(f.sign) * w * ipow(x, f.a) * ipow(x - 1.0, f.b) * ipow(y, f.d);
}

struct Point {
  cplx x, y;
};

Point curve_point(const MonomialCurve& c, cplx x) {
  return {x, std::pow(ipow(x, c.alpha) * (x - 1.0), 1.0 / static_cast<double>(c.p))};
}

Point apply(const MonomialMap& m, Point pt) {
  const auto p = m.curve().p;
  return {evaluate(m.x_image(), p, pt.x, pt.y), evaluate(m.y_image(), p, pt.x, pt.y)};
}

bool on_curve(const MonomialCurve& c, Point pt) {
  const cplx lhs = ipow(pt.y, c.p);
  const cplx rhs = ipow(pt.x, c.alpha) * (pt.x - 1.0);
  return std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(rhs));
}

bool close(Point a, Point b) {
  return std::abs(a.x - b.x) <= 1e-8 * (1.0 + std::abs(a.x)) && std::abs(a.y - b.y) <= 1e-8 * (1.0 + std::abs(a.y));
}

const std::vector<cplx> kSamplePoints = {{0.3, 0.7}, {-1.2, 0.4}, {2.5, -0.8}, {0.6, -1.3}};

TEST(Reduce, CurveEquation) {
  const MonomialCurve c{13, 3};
  EXPECT_EQ(reduce({1, 0, 0, 0, 13}, c), (MonomialFunction{1, 0, 3, 1, 0}));
  const MonomialFunction normal{-1, 4, 2, -3, 5};
  EXPECT_EQ(reduce(normal, c), normal);
}

TEST(Reduce, SingleRewriteAtSeven) {
  EXPECT_EQ(reduce({1, 0, 0, 0, 9}, {7, 2}), (MonomialFunction{1, 0, 2, 1, 2}));
}

TEST(Reduce, NegativeExponent) {
  // y^-3 = y^4 / y^7 = x^-2 (x-1)^-1 y^4 on y^7 = x^2 (x-1)
  EXPECT_EQ(reduce({1, 0, 0, 0, -3}, {7, 2}), (MonomialFunction{1, 0, -2, -1, 4}));
  EXPECT_EQ(reduce({1, -1, 0, 0, 0}, {7, 2}).omega_exp, 6);
}

TEST(Reduce, ValueEqualOnCurve) {
  const MonomialCurve c{11, 4};
  for (std::int64_t d = -25; d <= 25; d += 3) {
    const MonomialFunction f{-1, 3, 2, -1, d};
    const auto g = reduce(f, c);
    EXPECT_GE(g.d, 0);
    EXPECT_LT(g.d, c.p);
    for (auto x : kSamplePoints) {
      const auto pt = curve_point(c, x);
      const cplx a = evaluate(f, c.p, pt.x, pt.y), b = evaluate(g, c.p, pt.x, pt.y);
      EXPECT_LE(std::abs(a - b), 1e-8 * (1.0 + std::abs(a))) << "d = " << d;
    }
  }
}

TEST(Multiply, CommutativeAndAssociativeOnGrid) {
  const MonomialCurve c{5, 2};
  std::vector<MonomialFunction> grid;
  for (int s : {1, -1})
    for (Residue k : {0, 3})
      for (std::int64_t a : {-1, 2})
        for (std::int64_t b : {0, -2})
          for (std::int64_t d : {0, 1, 4}) grid.push_back({s, k, a, b, d});
  for (const auto& f : grid) {
    for (const auto& g : grid) {
      ASSERT_EQ(multiply(f, g, c), multiply(g, f, c));
      for (const auto& h : grid) {
        ASSERT_EQ(multiply(multiply(f, g, c), h, c), multiply(f, multiply(g, h, c), c));
      }
    }
  }
}

TEST(Multiply, PowerMatchesRepeatedProduct) {
  const MonomialCurve c{7, 3};
  const MonomialFunction f{-1, 2, 1, -1, 3};
  MonomialFunction acc = monomial_one();
  for (int n = 0; n <= 9; ++n) {
    EXPECT_EQ(power(f, n, c), acc) << n;
    acc = multiply(acc, f, c);
  }
  EXPECT_EQ(multiply(power(f, -4, c), power(f, 4, c), c), monomial_one());
}

TEST(Moebius, TableValuesAndMinusOne) {
  const MonomialCurve c{7, 1};
  for (auto label : kAllMoebius) {
    const auto e = moebius_monomial(label);
    EXPECT_EQ(e.f.d, 0);
    EXPECT_EQ(e.f.omega_exp, 0);
    for (auto x : kSamplePoints) {
      const cplx f = evaluate(e.f, c.p, x, 1.0);
      const cplx fm1 = evaluate(e.f_minus_one, c.p, x, 1.0);
      EXPECT_LE(std::abs(f - 1.0 - fm1), 1e-12) << to_string(label);
    }
    EXPECT_EQ(find_moebius(e.f)->label, label);
  }
  EXPECT_FALSE(find_moebius({1, 0, 2, 0, 0}).has_value());
}

TEST(Moebius, TableMatchesPointPermutations) {
  // Images of 0, 1, oo read off the monomial forms.
  auto image = [](const MonomialFunction& f, int pt) {
    if (pt == 2) {
      const auto deg = f.a + f.b;
      return deg > 0 ? 2 : deg < 0 ? 0 : (f.sign == 1 ? 1 : -1);
    }
    const auto order = pt == 0 ? f.a : f.b;
    if (order > 0) return 0;
    if (order < 0) return 2;
    const double at = pt == 0 ? std::pow(-1.0, static_cast<double>(f.b)) : 1.0;
    return f.sign * at == 1.0 ? 1 : -1;
  };
  for (auto label : kAllMoebius) {
    const auto f = moebius_monomial(label).f;
    const auto expected = moebius_points(label);
    for (int pt = 0; pt < 3; ++pt) EXPECT_EQ(image(f, pt), expected[pt]) << to_string(label) << " at " << pt;
  }
}

TEST(Moebius, SubstitutionCompositionMatchesLabels) {
  const MonomialCurve c{7, 1};
  for (auto outer : kAllMoebius) {
    for (auto inner : kAllMoebius) {
      const MonomialMap mo(c, moebius_monomial(outer).f, monomial_y());
      const MonomialMap mi(c, moebius_monomial(inner).f, monomial_y());
      EXPECT_EQ(compose(mo, mi).x_label(), compose(outer, inner)) << to_string(outer) << " o " << to_string(inner);
    }
  }
}

TEST(MonomialMap, RejectsNonMoebiusXImage) {
  EXPECT_THROW(MonomialMap({7, 2}, {1, 0, 2, 0, 0}, monomial_y()), Error);
  EXPECT_THROW(MonomialMap({7, 2}, {1, 0, 1, 0, 1}, monomial_y()), Error);
}

TEST(Compose, IdentityNeutralAndAssociative) {
  const auto ctx = make_context(13);
  const auto t = build_T(ctx), r = build_R(ctx);
  const auto id = MonomialMap::identity(t.curve());
  const std::vector<MonomialMap> maps = {t, r, compose(t, r), compose(r, compose(r, t)), id};
  for (const auto& m : maps) {
    EXPECT_EQ(compose(id, m), m);
    EXPECT_EQ(compose(m, id), m);
    for (const auto& n : maps) {
      for (const auto& k : maps) EXPECT_EQ(compose(compose(m, n), k), compose(m, compose(n, k)));
    }
  }
}

TEST(Compose, ClosureOverMoebiusTimesMonomial) {
  const MonomialCurve c{7, 2};
  std::vector<MonomialMap> maps;
  for (auto label : kAllMoebius) {
    for (const MonomialFunction& y : {monomial_y(), MonomialFunction{-1, 3, 1, -2, 4}, MonomialFunction{1, 0, 0, 5, 6}}) {
      maps.emplace_back(c, moebius_monomial(label).f, y);
    }
  }
  for (const auto& m : maps) {
    for (const auto& n : maps) EXPECT_NO_THROW(compose(m, n));
  }
}

TEST(Compose, RejectsDifferentCurves) {
  const auto ctx = make_context(13);
  EXPECT_THROW(compose(build_T(ctx, 3), build_T(ctx, 9)), Error);
}

TEST(Compose, AgreesWithPointEvaluation) {
  for (std::int64_t p : {7, 13, 19}) {
    const auto ctx = make_context(p);
    const auto t = build_T(ctx), r = build_R(ctx);
    const std::vector<MonomialMap> maps = {t, r, compose(r, t), power(r, 2), power(t, 5)};
    for (const auto& m : maps) {
      for (const auto& n : maps) {
        const auto mn = compose(m, n);
        for (auto x : kSamplePoints) {
          const auto pt = curve_point(t.curve(), x);
          EXPECT_TRUE(close(apply(mn, pt), apply(m, apply(n, pt)))) << render(m) << " o " << render(n);
        }
      }
    }
  }
}

TEST(Builders, TAndJ) {
  const auto ctx = make_context(7);
  const auto t = build_T(ctx);
  EXPECT_EQ(t.y_image().omega_exp, 1);
  EXPECT_EQ(t.y_image().d, 1);
  EXPECT_EQ(render(t), "(x, w^1*y)");
  const auto j = build_J(ctx);
  EXPECT_EQ(j.curve().alpha, 1);
  EXPECT_EQ(render(j), "(-(x-1), y)");
  EXPECT_EQ(order_of(j, 10), 2);
}

TEST(Builders, RAtSeven) {
  const auto ctx = make_context(7);
  const auto r = build_R(ctx, 2);
  EXPECT_EQ(r, MonomialMap({7, 2}, {-1, 0, 0, -1, 0}, {-1, 0, 1, 0, -3}));
  EXPECT_EQ(render(r), "(-(x-1)^-1, -x^-1*(x-1)^-1*y^4)");
}

TEST(Builders, RAtThirteen) {
  const auto ctx = make_context(13);
  EXPECT_EQ(default_epsilon(3), 2);
  EXPECT_EQ(build_R(ctx, 3), MonomialMap({13, 3}, {-1, 0, 0, -1, 0}, {1, 0, 1, 0, -4}));
  EXPECT_TRUE(verify_curve_automorphism(build_R(ctx, 3)));
}

TEST(Builders, Errors) {
  const auto ctx11 = make_context(11);
  EXPECT_THROW(build_R(ctx11), Error);
  EXPECT_THROW(build_T(ctx11), Error);
  const auto ctx7 = make_context(7);
  try {
    build_R(ctx7, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
  EXPECT_THROW(build_R(ctx7, 2, 3), Error);
}

TEST(Automorphism, TAndJ) {
  for (std::int64_t p : {5, 7, 11, 13}) {
    const auto ctx = make_context(p);
    for (Residue alpha = 1; alpha <= p - 2; ++alpha) EXPECT_TRUE(verify_curve_automorphism(build_T(ctx, alpha)));
    EXPECT_TRUE(verify_curve_automorphism(build_J(ctx)));
  }
  // 1 - x is not an automorphism of C_alpha for alpha != 1
  const auto ctx = make_context(7);
  EXPECT_FALSE(verify_curve_automorphism(MonomialMap({7, 2}, {-1, 0, 0, 1, 0}, monomial_y())));
}

TEST(Automorphism, EpsilonExactlyOnePerRoot) {
  for (std::int64_t p : {7, 13, 19, 31, 37, 43}) {
    const auto ctx = make_context(p);
    for (Residue root : {ctx.gamma_pair()->first, ctx.gamma_pair()->second}) {
      const auto check = check_epsilon(ctx, root);
      ASSERT_TRUE(check.exactly_one()) << "p = " << p << ", root = " << root;
      EXPECT_EQ(check.passing(), default_epsilon(root)) << "p = " << p << ", root = " << root;
    }
  }
}

TEST(Automorphism, AgreesWithPointEvaluation) {
  for (std::int64_t p : {7, 13, 19}) {
    const auto ctx = make_context(p);
    for (Residue root : {ctx.gamma_pair()->first, ctx.gamma_pair()->second}) {
      for (int eps : {1, 2}) {
        const auto r = build_R(ctx, root, eps);
        bool numeric = true;
        for (auto x : kSamplePoints) numeric = numeric && on_curve(r.curve(), apply(r, curve_point(r.curve(), x)));
        EXPECT_EQ(numeric, verify_curve_automorphism(r)) << "p = " << p << ", root = " << root << ", eps = " << eps;
      }
    }
  }
}

TEST(Relations, OrdersOfTAndR) {
  for (std::int64_t p : {7, 13, 19, 31}) {
    const auto ctx = make_context(p);
    EXPECT_EQ(order_of(build_T(ctx), 2 * p), p);
    EXPECT_EQ(order_of(build_R(ctx), 2 * p), 3);
    EXPECT_EQ(compose(build_T(ctx), power(build_T(ctx), p - 1)), MonomialMap::identity(build_T(ctx).curve()));
  }
}

TEST(Relations, PaperRelations) {
  for (std::int64_t p : {7, 13, 19, 31}) {
    const auto ctx = make_context(p);
    const auto g = ctx.gamma();
    const auto g2 = ctx.mul(g, g);
    EXPECT_TRUE(verify_relation({{Letter::kR, 3}}, {}, ctx));
    EXPECT_TRUE(verify_relation({{Letter::kT, p}}, {}, ctx));
    EXPECT_TRUE(verify_relation({{Letter::kR, 1}, {Letter::kT, 1}}, {{Letter::kT, g2}, {Letter::kR, 1}}, ctx));
    for (std::int64_t l = 0; l < p; ++l) {
      EXPECT_TRUE(verify_relation({{Letter::kT, -l}, {Letter::kR, 1}, {Letter::kT, l}},
                                  {{Letter::kT, l * (g2 - 1)}, {Letter::kR, 1}}, ctx))
          << "p = " << p << ", l = " << l;
    }
    EXPECT_FALSE(verify_relation({{Letter::kR, 1}, {Letter::kT, 1}}, {{Letter::kT, 1}, {Letter::kR, 1}}, ctx));
  }
  EXPECT_THROW(verify_relation({}, {}, make_context(11)), Error);
}

TEST(Relations, WordRendering) {
  EXPECT_EQ(to_string(Word{{Letter::kT, -2}, {Letter::kR, 1}, {Letter::kT, 2}}), "T^-2 o R o T^2");
  EXPECT_EQ(to_string(Word{}), "id");
}

TEST(Isomorphism, PGonalGroupAtSeven) {
  const auto ctx = make_context(7);
  const PGonalGroup group(ctx);
  const auto t = build_T(ctx), r = build_R(ctx);
  auto phi = [&](const PGonalAut& g) { return compose(power(t, g.k), power(r, g.e)); };

  std::set<MonomialMap> generated{MonomialMap::identity(t.curve())};
  std::vector<MonomialMap> frontier(generated.begin(), generated.end());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (const auto& s : {t, r}) {
      auto next = compose(frontier[i], s);
      if (generated.insert(next).second) frontier.push_back(next);
    }
  }
  EXPECT_EQ(generated.size(), 21u);

  std::set<MonomialMap> image;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto g = group.element(i);
    image.insert(phi(g));
    for (std::size_t j = 0; j < group.order(); ++j) {
      const auto h = group.element(j);
      ASSERT_EQ(phi(group.multiply(g, h)), compose(phi(g), phi(h)));
    }
  }
  EXPECT_EQ(image, generated);

  std::set<MonomialMap> r_powers, t_powers;
  for (int e = 0; e < 6; ++e) r_powers.insert(power(r, e));
  for (int k = 0; k < 14; ++k) t_powers.insert(power(t, k));
  EXPECT_EQ(r_powers.size(), 3u);
  EXPECT_EQ(t_powers.size(), 7u);

  for (const auto& m : generated) {
    EXPECT_TRUE(m.y_image().d == 0 || std::gcd(m.y_image().d, std::int64_t{7}) == 1);
    EXPECT_TRUE(verify_curve_automorphism(m));
  }
}

}  // namespace
}  // namespace fermat
