#include "fermat/suites.hpp"

#include <functional>

#include "fermat/monomial.hpp"

namespace fermat {

namespace {

/// Runs f, turning a thrown Error into a failed check.
CheckEntry guarded(const std::string& name, const std::function<CheckEntry()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return {name, false, e.what()};
  }
}

std::string rational_text(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool all_sizes(const OrbitPartition& partition, OrbitKind kind, std::size_t size) {
  for (const auto& o : partition.orbits) {
    if (o.kind == kind && o.size() != size) return false;
  }
  return true;
}

}  // namespace

std::vector<CheckEntry> orbit_law_checks(const PrimeContext& ctx) {
  const auto partition = orbit_partition(ctx);
  const auto p = ctx.p();
  const auto special = partition.count(OrbitKind::kSpecialOne);
  const auto gamma = partition.count(OrbitKind::kGamma);
  const auto generic = static_cast<std::int64_t>(partition.count(OrbitKind::kGeneric));
  const std::int64_t expected_generic = ctx.has_gamma() ? (p - 7) / 6 : (p - 5) / 6;
  std::int64_t size_sum = 0;
  for (const auto& o : partition.orbits) size_sum += static_cast<std::int64_t>(o.size());
  return {
      {"orbits.special_one", special == 1 && all_sizes(partition, OrbitKind::kSpecialOne, 3),
       std::to_string(special) + " orbit of size 3"},
      {"orbits.gamma", gamma == (ctx.has_gamma() ? 1u : 0u) && all_sizes(partition, OrbitKind::kGamma, 2),
       std::to_string(gamma) + " orbit of size 2, p mod 3 = " + std::to_string(ctx.residue_mod_3())},
      {"orbits.generic", generic == expected_generic && all_sizes(partition, OrbitKind::kGeneric, 6),
       std::to_string(generic) + " orbits of size 6, expected " + std::to_string(expected_generic)},
      {"orbits.size_sum", size_sum == p - 2, "sizes sum to " + std::to_string(size_sum)},
  };
}

std::vector<CheckEntry> dual_oracle_checks(const FermatGroup& group, const GeneratingTriple& triple) {
  const auto g_top = fermat_genus(group.context());
  const auto fix = full_fix_table(group, triple);
  auto agree = [&](const Subgroup<FermatGroup>& k) { return rh_genus(g_top, k, fix) == coset_genus(k, triple); };

  std::vector<CheckEntry> out;
  out.push_back(guarded("dual_oracle.cyclic", [&]() -> CheckEntry {
    const auto cyclic = cyclic_subgroups(group);
    std::size_t bad = 0;
    for (const auto& k : cyclic) bad += agree(k) ? 0 : 1;
    return {"dual_oracle.cyclic", bad == 0,
            std::to_string(cyclic.size() - bad) + " of " + std::to_string(cyclic.size()) + " cyclic subgroups agree"};
  }));
  out.push_back(guarded("dual_oracle.h_family", [&]() -> CheckEntry {
    const auto p = group.context().p();
    std::vector<Subgroup<FermatGroup>> h_j;
    for (std::int64_t j = 1; j <= p - 2; ++j) h_j.push_back(fermat_h_j(group, j));
    std::size_t total = 1, bad = agree(fermat_h(group)) ? 0 : 1;
    for (std::size_t i = 0; i < h_j.size(); ++i) {
      ++total;
      bad += agree(h_j[i]) ? 0 : 1;
      for (std::size_t j = i + 1; j < h_j.size(); ++j) {
        ++total;
        bad += agree(join(h_j[i], h_j[j])) ? 0 : 1;
      }
    }
    return {"dual_oracle.h_family", bad == 0,
            std::to_string(total - bad) + " of " + std::to_string(total) + " of H, H_j, <H_i, H_j> agree"};
  }));
  out.push_back(guarded("dual_oracle.trivial", [&]() -> CheckEntry {
    const auto g = coset_genus(trivial_subgroup(group), triple);
    return {"dual_oracle.trivial", g == g_top, "coset genus of the trivial subgroup = " + std::to_string(g)};
  }));
  return out;
}

std::vector<CheckEntry> monomial_checks(const PrimeContext& ctx) {
  std::vector<CheckEntry> out;
  out.push_back(guarded("monomial.J_automorphism", [&]() -> CheckEntry {
    const auto j = build_J(ctx);
    return {"monomial.J_automorphism", verify_curve_automorphism(j) && order_of(j, 4) == 2,
            "J = " + render(j) + " on C_1"};
  }));
  if (!ctx.has_gamma()) return out;

  const auto p = ctx.p();
  const auto g = ctx.gamma();
  const auto g2 = ctx.mul(g, g);
  out.push_back(guarded("monomial.T_order", [&]() -> CheckEntry {
    return {"monomial.T_order", order_of(build_T(ctx), p) == p, "T^p = id, no smaller power"};
  }));
  out.push_back(guarded("monomial.R_order", [&]() -> CheckEntry {
    const bool ok = verify_relation({{Letter::kR, 3}}, {}, ctx) && order_of(build_R(ctx), 3) == 3;
    return {"monomial.R_order", ok, "R^3 = id"};
  }));
  out.push_back(guarded("monomial.R_T", [&]() -> CheckEntry {
    const bool ok = verify_relation({{Letter::kR, 1}, {Letter::kT, 1}}, {{Letter::kT, g2}, {Letter::kR, 1}}, ctx);
    return {"monomial.R_T", ok, "R o T = T^" + std::to_string(g2) + " o R"};
  }));
  out.push_back(guarded("monomial.conjugation", [&]() -> CheckEntry {
    std::int64_t bad = 0;
    for (std::int64_t l = 0; l < p; ++l) {
      const Word lhs = {{Letter::kT, -l}, {Letter::kR, 1}, {Letter::kT, l}};
      const Word rhs = {{Letter::kT, ctx.mul(l, ctx.sub(g2, 1))}, {Letter::kR, 1}};
      bad += verify_relation(lhs, rhs, ctx) ? 0 : 1;
    }
    return {"monomial.conjugation", bad == 0, "T^-l o R o T^l = T^(l(g^2-1)) o R for l = 0.." + std::to_string(p - 1)};
  }));
  out.push_back(guarded("monomial.epsilon", [&]() -> CheckEntry {
    bool ok = true;
    std::string detail;
    for (Residue root : {ctx.gamma_pair()->first, ctx.gamma_pair()->second}) {
      const auto check = check_epsilon(ctx, root);
      ok = ok && check.exactly_one() && check.passing() == default_epsilon(root);
      detail += (detail.empty() ? "" : "; ") + std::string("gamma = ") + std::to_string(root) + ": eps = " +
                (check.passing() ? std::to_string(*check.passing()) : std::string("none")) + " passes";
    }
    return {"monomial.epsilon", ok, detail};
  }));
  out.push_back(guarded("monomial.R_automorphism", [&]() -> CheckEntry {
    const auto r = build_R(ctx);
    return {"monomial.R_automorphism", verify_curve_automorphism(r), "R = " + render(r)};
  }));
  return out;
}

std::optional<MonomialEntry> monomial_summary(const PrimeContext& ctx) {
  if (!ctx.has_gamma()) return std::nullopt;
  const auto root = ctx.gamma();
  MonomialEntry out;
  out.root = root;
  out.epsilon = check_epsilon(ctx, root).passing().value_or(0);
  out.maps = {{"J", render(build_J(ctx))}, {"R", render(build_R(ctx))}, {"T", render(build_T(ctx))}};
  return out;
}

std::vector<CheckEntry> certificate_checks(const FermatGroup& group, const GeneratingTriple& triple) {
  const auto p = group.context().p();
  const auto cert = fermat_certificate(group, triple);
  bool h_j_ok = true;
  for (std::size_t i = 0; i < cert.with_h_j.size(); ++i) {
    h_j_ok = h_j_ok && cert.with_h_j[i] == Rational(p - 1) && cert.with_h_j[i] == Rational(2 * cert.quotient_genus_h_j[i]);
  }
  return {
      {"certificates.trivial_pairing", cert.with_trivial == Rational(0),
       "<1, chi_rat> = " + rational_text(cert.with_trivial)},
      {"certificates.chi_a1", cert.chi_at_a1 == 2 - p, "chi_rat(a1) = " + std::to_string(cert.chi_at_a1)},
      {"certificates.h_j_pairing", h_j_ok,
       "<Ind_{H_j} 1, chi_rat> = " + std::to_string(p - 1) + " = 2 g(F_p / H_j) for j = 1.." + std::to_string(p - 2)},
      {"certificates.integral", cert.all_integral, "all pairings have denominator 1"},
  };
}

}  // namespace fermat
