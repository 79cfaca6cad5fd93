#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fermat/error.hpp"
#include "fermat/orbits.hpp"

using namespace fermat;

namespace {

// Independent oracle: brute-force inverse table.
std::map<std::int64_t, std::int64_t> inverse_table(std::int64_t p) {
  std::map<std::int64_t, std::int64_t> inv;
  for (std::int64_t a = 1; a < p; ++a) {
    for (std::int64_t b = 1; b < p; ++b) {
      if (a * b % p == 1) inv[a] = b;
    }
  }
  return inv;
}

// Independent oracle: the six-element orbit formula, evaluated literally.
std::set<std::int64_t> orbit_by_formula(std::int64_t a, std::int64_t p) {
  auto inv = inverse_table(p);
  auto m = [p](std::int64_t x) { return ((x % p) + p) % p; };
  const std::int64_t s = m(1 + a);
  return {a, inv[a], m(-s), m(-inv[s]), m(-inv[a] * s), m(-a * inv[s])};
}

const std::vector<std::int64_t> kSweep = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 97, 101, 199};

}  // namespace

TEST(PrimeContext, GammaRoots) {
  auto c7 = make_context(7);
  ASSERT_TRUE(c7.gamma_pair());
  EXPECT_EQ(*c7.gamma_pair(), std::make_pair(Residue{2}, Residue{4}));
  EXPECT_FALSE(make_context(5).gamma_pair());

  // p = 13 against a brute-force scan
  std::vector<std::int64_t> roots;
  for (std::int64_t g = 1; g <= 11; ++g) {
    if ((g * g + g + 1) % 13 == 0) roots.push_back(g);
  }
  ASSERT_EQ(roots, (std::vector<std::int64_t>{3, 9}));
  EXPECT_EQ(*make_context(13).gamma_pair(), std::make_pair(Residue{3}, Residue{9}));
}

TEST(PrimeContext, GammaInvariants) {
  for (auto p : kSweep) {
    auto ctx = make_context(p);
    EXPECT_EQ(ctx.has_gamma(), p % 3 == 1) << p;
    if (!ctx.has_gamma()) continue;
    auto [g, h] = *ctx.gamma_pair();
    EXPECT_EQ(ctx.reduce(g * g + g + 1), 0);
    EXPECT_EQ(ctx.mul(g, h), 1);
    EXPECT_EQ(h, p - 1 - g);
    EXPECT_LT(g, h);
  }
}

TEST(PrimeContext, Errors) {
  auto code_of = [](std::int64_t p) {
    try {
      make_context(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code_of(3), ErrorCode::kTooSmall);
  EXPECT_EQ(code_of(-7), ErrorCode::kTooSmall);
  EXPECT_EQ(code_of(9), ErrorCode::kNotPrime);
  EXPECT_EQ(code_of(91), ErrorCode::kNotPrime);
  EXPECT_EQ(code_of(kMaxPrime + 2), ErrorCode::kTooLarge);
  try {
    make_context(15);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not prime"), std::string::npos);
  }
}

TEST(PrimeContext, InverseMatchesTable) {
  for (auto p : {5, 7, 11, 13, 31}) {
    auto ctx = make_context(p);
    for (auto [a, b] : inverse_table(p)) EXPECT_EQ(ctx.inv(a), b);
  }
  EXPECT_THROW(make_context(7).inv(14), Error);
}

TEST(S3Action, Examples) {
  for (auto p : {5, 7, 11, 13}) EXPECT_EQ(s3_apply(S3Generator::kV, 1, make_context(p)), 1);
  EXPECT_EQ(s3_apply(S3Generator::kU, 1, make_context(7)), 3);
  EXPECT_EQ(inverse_table(11)[2], 6);
  EXPECT_EQ(s3_apply(S3Generator::kV, 2, make_context(11)), 6);
}

TEST(S3Action, OutOfRange) {
  auto ctx = make_context(7);
  for (auto a : {0, 6, 7, -1}) {
    try {
      s3_apply(S3Generator::kU, a, ctx);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
    }
  }
}

TEST(S3Action, RelationsHoldPointwise) {
  for (auto p : kSweep) {
    auto ctx = make_context(p);
    auto U = [&](Residue a) { return s3_apply(S3Generator::kU, a, ctx); };
    auto V = [&](Residue a) { return s3_apply(S3Generator::kV, a, ctx); };
    for (Residue a = 1; a <= p - 2; ++a) {
      ASSERT_TRUE(ctx.in_xp(U(a)));
      ASSERT_TRUE(ctx.in_xp(V(a)));
      EXPECT_EQ(U(U(U(a))), a);
      EXPECT_EQ(V(V(a)), a);
      EXPECT_EQ(U(V(U(V(a)))), a);
    }
  }
}

TEST(Orbits, PaperExamples) {
  auto c7 = make_context(7);
  auto o1 = orbit(1, c7);
  EXPECT_EQ(o1.elements, (std::vector<Residue>{1, 3, 5}));
  EXPECT_EQ(o1.kind, OrbitKind::kSpecialOne);
  auto o2 = orbit(2, c7);
  EXPECT_EQ(o2.elements, (std::vector<Residue>{2, 4}));
  EXPECT_EQ(o2.kind, OrbitKind::kGamma);
  auto o11 = orbit(2, make_context(11));
  EXPECT_EQ(o11.elements, (std::vector<Residue>{2, 3, 4, 6, 7, 8}));
  EXPECT_EQ(o11.kind, OrbitKind::kGeneric);
}

TEST(Orbits, MatchesSixElementFormula) {
  for (auto p : {5, 7, 11, 13, 17, 19, 31}) {
    auto ctx = make_context(p);
    for (Residue a = 1; a <= p - 2; ++a) {
      auto expected = orbit_by_formula(a, p);
      auto got = orbit(a, ctx).elements;
      EXPECT_EQ(std::set<Residue>(got.begin(), got.end()), expected) << "p=" << p << " a=" << a;
    }
  }
}

TEST(OrbitPartition, Examples) {
  auto p11 = orbit_partition(make_context(11));
  ASSERT_EQ(p11.orbits.size(), 2u);
  EXPECT_EQ(p11.orbits[0].elements, (std::vector<Residue>{1, 5, 9}));
  EXPECT_EQ(p11.orbits[1].elements, (std::vector<Residue>{2, 3, 4, 6, 7, 8}));
  EXPECT_EQ(orbit_partition(make_context(7)).orbits.size(), 2u);

  auto p13 = orbit_partition(make_context(13));
  ASSERT_EQ(p13.orbits.size(), 3u);
  EXPECT_EQ(p13.orbits[0].elements, (std::vector<Residue>{1, 6, 11}));
  EXPECT_EQ(p13.orbits[1].elements, (std::vector<Residue>{2, 4, 5, 7, 8, 10}));
  EXPECT_EQ(p13.orbits[2].elements, (std::vector<Residue>{3, 9}));
  EXPECT_EQ(p13.orbit_of(9).kind, OrbitKind::kGamma);
}

TEST(OrbitPartition, CountLawAndCoverage) {
  for (auto p : kSweep) {
    auto ctx = make_context(p);
    auto part = orbit_partition(ctx);
    std::size_t total = 0;
    std::set<Residue> seen;
    Residue last_rep = 0;
    for (const auto& o : part.orbits) {
      total += o.size();
      EXPECT_GT(o.representative, last_rep);
      last_rep = o.representative;
      EXPECT_EQ(o.representative, o.elements.front());
      for (auto e : o.elements) EXPECT_TRUE(seen.insert(e).second);
      for (auto e : o.elements) {
        EXPECT_TRUE(o.contains(ctx.inv(e)));
        EXPECT_TRUE(o.contains(ctx.neg(ctx.inv(e + 1))));
      }
      if (o.kind == OrbitKind::kSpecialOne) {
        EXPECT_EQ(o.elements, (std::vector<Residue>{1, (p - 1) / 2, p - 2}));
      }
      if (o.kind == OrbitKind::kGamma) {
        for (auto g : o.elements) EXPECT_EQ(ctx.reduce(g * g + g + 1), 0);
      }
    }
    EXPECT_EQ(total, static_cast<std::size_t>(p - 2));
    EXPECT_EQ(part.count(OrbitKind::kSpecialOne), 1u);
    EXPECT_EQ(part.count(OrbitKind::kGamma), p % 3 == 1 ? 1u : 0u);
    EXPECT_EQ(part.count(OrbitKind::kGeneric), static_cast<std::size_t>(p % 3 == 1 ? (p - 7) / 6 : (p - 5) / 6));
  }
}
