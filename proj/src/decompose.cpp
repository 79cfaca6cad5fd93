#include "fermat/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace fermat {

namespace {

void audit_fail(const std::string& message) { throw Error(ErrorCode::kAuditFail, message); }

void shape_fail(const std::string& message) { throw Error(ErrorCode::kShapeMismatch, message); }

int kind_rank(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::kSpecialOne: return 0;
    case OrbitKind::kGamma: return 1;
    case OrbitKind::kGeneric: return 2;
  }
  return 3;
}

std::vector<std::string> numbered(const std::string& prefix, std::int64_t count) {
  std::vector<std::string> out;
  for (std::int64_t i = 1; i <= count; ++i) out.push_back(prefix + "_" + std::to_string(i));
  return out;
}

std::string first_failure(const KaniRosenAudit& audit) {
  for (const auto& c : audit.commuting_checks) {
    if (!c.commutes) return audit.subgroups[c.i] + " " + audit.subgroups[c.j] + " != " + audit.subgroups[c.j] + " " +
                            audit.subgroups[c.i];
  }
  for (const auto& c : audit.genus_zero_checks) {
    if (!c.pass()) {
      return "genus of the quotient by <" + audit.subgroups[c.i] + ", " + audit.subgroups[c.j] + "> is " +
             std::to_string(c.genus);
    }
  }
  return "sum of quotient genera " + std::to_string(audit.genus_sum_check.sum()) + " != " +
         std::to_string(audit.genus_sum_check.expected);
}

KaniRosenAudit structured_fermat_audit(const FermatGroup& group, const FixTable<FermatGroup>& fix) {
  const auto& ctx = group.context();
  const std::int64_t count = ctx.p() - 2;
  const std::int64_t g_top = fermat_genus(ctx);
  KaniRosenAudit audit;
  audit.subgroups = numbered("H", count);
  audit.method = AuditMethod::kStructured;
  audit.genus_sum_check.expected = g_top;

  const auto h = fermat_h(group);
  const bool h_abelian = group.multiply(group.a1(), group.a2()) == group.multiply(group.a2(), group.a1());
  const std::int64_t g_h = rh_genus(g_top, h, fix);

  std::vector<FermatAut> gens;
  for (std::int64_t j = 1; j <= count; ++j) {
    const auto h_j = fermat_h_j(group, j);
    gens.push_back(h_j.generators().front());
    audit.genus_sum_check.genera.push_back(rh_genus(g_top, h_j, fix));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const bool inside_h = group.in_h(gens[i]) && group.in_h(gens[j]);
      audit.commuting_checks.push_back({i, j, h_abelian && inside_h});
      // <(m1, n1), (m2, n2)> = H iff the determinant is a unit
      const Residue det = ctx.sub(ctx.mul(gens[i].m, gens[j].n), ctx.mul(gens[i].n, gens[j].m));
      const std::int64_t genus =
          (inside_h && det != 0) ? g_h
                                 : rh_genus(g_top, subgroup_closure(group, {gens[i], gens[j]}), fix);
      audit.genus_zero_checks.push_back({i, j, genus});
    }
  }
  return audit;
}

}  // namespace

std::int64_t GenusSumCheck::sum() const noexcept {
  return std::accumulate(genera.begin(), genera.end(), std::int64_t{0});
}

std::string_view to_string(AuditMethod method) {
  return method == AuditMethod::kExplicit ? "explicit" : "structured";
}

AuditMethod parse_audit_method(std::string_view text) {
  if (text == "explicit") return AuditMethod::kExplicit;
  if (text == "structured") return AuditMethod::kStructured;
  throw Error(ErrorCode::kInvalidArgument, "unknown audit method '" + std::string(text) + "'");
}

bool KaniRosenAudit::commuting_pass() const noexcept {
  return std::all_of(commuting_checks.begin(), commuting_checks.end(), [](const auto& c) { return c.commutes; });
}

bool KaniRosenAudit::genus_zero_pass() const noexcept {
  return std::all_of(genus_zero_checks.begin(), genus_zero_checks.end(), [](const auto& c) { return c.pass(); });
}

KaniRosenAudit fermat_kani_rosen_audit(const PrimeContext& ctx, std::optional<AuditMethod> method) {
  const FermatGroup group(ctx);
  const auto fix = fermat_h_fix_table(group);
  const auto m = method.value_or(ctx.p() <= kExplicitAuditBound ? AuditMethod::kExplicit : AuditMethod::kStructured);
  if (m == AuditMethod::kStructured) return structured_fermat_audit(group, fix);
  std::vector<Subgroup<FermatGroup>> subgroups;
  for (std::int64_t j = 1; j <= ctx.p() - 2; ++j) subgroups.push_back(fermat_h_j(group, j));
  return kani_rosen_check(fermat_genus(ctx), subgroups, numbered("H", ctx.p() - 2), fix);
}

KaniRosenAudit pgonal_kani_rosen_audit(const PrimeContext& ctx) {
  const PGonalGroup group(ctx);
  std::vector<Subgroup<PGonalGroup>> subgroups;
  for (int i = 1; i <= 3; ++i) subgroups.push_back(pgonal_k(group, i));
  return kani_rosen_check(pgonal_genus(ctx), subgroups, numbered("K", 3), pgonal_fix_table(group));
}

bool GammaRefinement::genus_pass(std::int64_t p) const {
  if (quotient_genera.size() != 3 || join_genera.size() != 3) return false;
  const bool quotients = std::all_of(quotient_genera.begin(), quotient_genera.end(),
                                     [p](std::int64_t g) { return g == (p - 1) / 6; });
  const bool joins = std::all_of(join_genera.begin(), join_genera.end(), [](std::int64_t g) { return g == 0; });
  return quotients && joins && kani_rosen.genus_sum_check.pass();
}

GammaRefinement gamma_refinement(const PrimeContext& ctx) {
  GammaRefinement out;
  out.gamma = ctx.gamma();
  out.kani_rosen = pgonal_kani_rosen_audit(ctx);
  out.quotient_genera = out.kani_rosen.genus_sum_check.genera;
  for (const auto& c : out.kani_rosen.genus_zero_checks) out.join_genera.push_back(c.genus);
  out.certificate = pgonal_certificate(PGonalGroup(ctx));
  return out;
}

std::string_view to_string(DecompositionLevel level) {
  return level == DecompositionLevel::kCoarse ? "coarse" : "fine";
}

DecompositionLevel parse_level(std::string_view text) {
  if (text == "coarse") return DecompositionLevel::kCoarse;
  if (text == "fine") return DecompositionLevel::kFine;
  throw Error(ErrorCode::kInvalidArgument, "unknown level '" + std::string(text) + "'");
}

std::string IsogenyDecomposition::render() const {
  std::string out = "JF(" + std::to_string(context.p()) + ") ~ ";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += " x ";
    out += factors[i].curve.jacobian_symbol() + "^" + std::to_string(factors[i].multiplicity);
  }
  return out;
}

std::int64_t IsogenyDecomposition::total_dimension() const {
  std::int64_t total = 0;
  for (const auto& f : factors) total += f.multiplicity * f.dimension;
  return total;
}

IsogenyDecomposition decompose_coarse(const PrimeContext& ctx, std::optional<AuditMethod> method) {
  auto audit = fermat_kani_rosen_audit(ctx, method);
  if (!audit.passes()) audit_fail("Kani-Rosen audit at p = " + std::to_string(ctx.p()) + ": " + first_failure(audit));

  const auto partition = orbit_partition(ctx);
  std::vector<std::int64_t> hits(partition.orbits.size(), 0);
  for (std::int64_t j = 1; j <= ctx.p() - 2; ++j) {
    const auto curve = quotient_to_curve(j, ctx);
    if (genus_of(curve) != audit.genus_sum_check.genera[static_cast<std::size_t>(j - 1)]) {
      audit_fail("genus of " + curve.descriptor() + " differs from the genus of F_p / H_" + std::to_string(j));
    }
    const auto& orbit = partition.orbit_of(curve.alpha());
    const auto it = std::find(partition.orbits.begin(), partition.orbits.end(), orbit);
    ++hits[static_cast<std::size_t>(it - partition.orbits.begin())];
  }

  IsogenyDecomposition d{ctx, DecompositionLevel::kCoarse, {}, std::move(audit), std::nullopt};
  for (std::size_t i = 0; i < partition.orbits.size(); ++i) {
    const auto& orbit = partition.orbits[i];
    if (hits[i] != static_cast<std::int64_t>(orbit.size())) {
      audit_fail("orbit of " + std::to_string(orbit.representative) + " received " + std::to_string(hits[i]) +
                 " quotients");
    }
    const auto curve = CurveSpec::p_gonal(orbit.representative, ctx);
    d.factors.push_back({curve, orbit.kind, hits[i], genus_of(curve)});
  }
  std::stable_sort(d.factors.begin(), d.factors.end(), [](const IsogenyFactor& a, const IsogenyFactor& b) {
    return kind_rank(a.kind) < kind_rank(b.kind);
  });
  return d;
}

IsogenyDecomposition decompose_fine(const PrimeContext& ctx, std::optional<AuditMethod> method) {
  auto d = decompose_coarse(ctx, method);
  d.level = DecompositionLevel::kFine;
  if (!ctx.has_gamma()) return d;

  auto refinement = gamma_refinement(ctx);
  if (!refinement.genus_pass(ctx.p())) {
    audit_fail("genus conditions for C_gamma / K_i fail at p = " + std::to_string(ctx.p()));
  }
  if (!refinement.certificate.passes()) {
    audit_fail("character certificate for H_1(C_gamma) fails at p = " + std::to_string(ctx.p()));
  }
  for (auto& f : d.factors) {
    if (f.kind != OrbitKind::kGamma) continue;
    const auto e = CurveSpec::e_quotient(refinement.gamma, ctx);
    if (genus_of(e) != refinement.quotient_genera.front()) audit_fail("genus of " + e.descriptor());
    f = {e, OrbitKind::kGamma, f.multiplicity * 3, genus_of(e)};
  }
  d.refinement = std::move(refinement);
  return d;
}

DimensionAudit dimension_audit(const IsogenyDecomposition& d) {
  const auto& ctx = d.context;
  const std::int64_t p = ctx.p();
  const std::int64_t half = (p - 1) / 2, sixth = (p - 1) / 6;
  const bool fine = d.level == DecompositionLevel::kFine;

  DimensionAudit out;
  out.total = d.total_dimension();
  out.expected = fermat_genus(ctx);
  out.expected_generic = ctx.has_gamma() ? (p - 7) / 6 : (p - 5) / 6;
  if (out.total != out.expected) {
    audit_fail("sum of multiplicity x dimension = " + std::to_string(out.total) + " != g(F_p) = " +
               std::to_string(out.expected));
  }
  for (const auto& f : d.factors) {
    if (f.multiplicity == 3 && f.dimension == half) {
      ++out.exponent3_count;
    } else if (f.multiplicity == 6 && f.dimension == half && f.kind == OrbitKind::kGeneric) {
      ++out.generic_count;
    } else if (f.kind == OrbitKind::kGamma && ((fine && f.multiplicity == 6 && f.dimension == sixth) ||
                                              (!fine && f.multiplicity == 2 && f.dimension == half))) {
      ++out.gamma_count;
    } else {
      audit_fail("factor " + f.curve.jacobian_symbol() + "^" + std::to_string(f.multiplicity) + " of dimension " +
                 std::to_string(f.dimension) + " fits no expected shape");
    }
  }
  if (out.exponent3_count != 1) audit_fail("expected one exponent-3 factor, found " + std::to_string(out.exponent3_count));
  if (out.gamma_count != (ctx.has_gamma() ? 1 : 0)) {
    audit_fail("expected " + std::to_string(ctx.has_gamma() ? 1 : 0) + " gamma factor, found " +
               std::to_string(out.gamma_count));
  }
  if (out.generic_count != out.expected_generic) {
    audit_fail("expected " + std::to_string(out.expected_generic) + " generic factors, found " +
               std::to_string(out.generic_count));
  }
  return out;
}

std::vector<ShapeMatch> match_group_algebra_shape(const IsogenyDecomposition& d) {
  if (d.level != DecompositionLevel::kFine) shape_fail("shape matching needs the fine decomposition");
  try {
    dimension_audit(d);
  } catch (const Error& e) {
    shape_fail(e.what());
  }
  const std::int64_t p = d.context.p();
  std::vector<ShapeMatch> out;
  std::int64_t generic_index = 0;
  for (const auto& f : d.factors) {
    ShapeMatch m{"", f.curve, 0, 0};
    switch (f.kind) {
      case OrbitKind::kSpecialOne:
        m = {"B_0", f.curve, 3, (p - 1) / 2};
        break;
      case OrbitKind::kGamma:
        m = {"B", f.curve, 6, (p - 1) / 6};
        break;
      case OrbitKind::kGeneric:
        m = {"B_" + std::to_string(++generic_index), f.curve, 6, (p - 1) / 2};
        break;
    }
    if (m.exponent != f.multiplicity || m.dimension != f.dimension) {
      shape_fail(m.component + " has exponent " + std::to_string(m.exponent) + " and dimension " +
                 std::to_string(m.dimension) + " but " + f.curve.jacobian_symbol() + " appears with " +
                 std::to_string(f.multiplicity) + " and " + std::to_string(f.dimension));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace fermat
