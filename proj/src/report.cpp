#include "fermat/report.hpp"

#include <algorithm>
#include <sstream>

namespace fermat {

using nlohmann::json;

namespace {

std::string rational_text(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string pass_text(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string join_ints(const std::vector<std::int64_t>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

template <class T>
void read_optional(const json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key) && !j.at(key).is_null()) {
    out = j.at(key).get<T>();
  } else {
    out.reset();
  }
}

}  // namespace

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OrbitEntry, representative, elements, kind)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OrbitSummary, orbits, special_one, gamma, generic)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FactorEntry, curve, symbol, kind, multiplicity, dimension)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DecompositionEntry, level, text, factors)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckEntry, name, pass, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RefinementEntry, gamma, quotient_genera, join_genera, products_commute,
                                   with_trivial, with_t_invariant, self, with_k)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MonomialEntry, root, epsilon, maps)

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
}

OrbitSummary summarize(const OrbitPartition& partition) {
  OrbitSummary out;
  for (const auto& o : partition.orbits) {
    out.orbits.push_back({o.representative, o.elements, std::string(to_string(o.kind))});
  }
  out.special_one = static_cast<std::int64_t>(partition.count(OrbitKind::kSpecialOne));
  out.gamma = static_cast<std::int64_t>(partition.count(OrbitKind::kGamma));
  out.generic = static_cast<std::int64_t>(partition.count(OrbitKind::kGeneric));
  return out;
}

DecompositionEntry summarize(const IsogenyDecomposition& d) {
  DecompositionEntry out{std::string(to_string(d.level)), d.render(), {}};
  for (const auto& f : d.factors) {
    out.factors.push_back(
        {f.curve.descriptor(), f.curve.jacobian_symbol(), std::string(to_string(f.kind)), f.multiplicity, f.dimension});
  }
  return out;
}

RefinementEntry summarize(const GammaRefinement& r) {
  RefinementEntry out;
  out.gamma = r.gamma;
  out.quotient_genera = r.quotient_genera;
  out.join_genera = r.join_genera;
  out.products_commute = r.kani_rosen.commuting_pass();
  out.with_trivial = rational_text(r.certificate.with_trivial);
  out.with_t_invariant = rational_text(r.certificate.with_t_invariant);
  out.self = rational_text(r.certificate.self);
  for (const auto& v : r.certificate.with_k) out.with_k.push_back(rational_text(v));
  return out;
}

std::vector<CheckEntry> audit_checks(const IsogenyDecomposition& d) {
  const auto& a = d.audit;
  const std::string level(to_string(d.level));
  const auto pairs = std::to_string(a.commuting_checks.size());
  std::vector<CheckEntry> out = {
      {level + ".kani_rosen.commuting", a.commuting_pass(), pairs + " pairs H_i H_j = H_j H_i"},
      {level + ".kani_rosen.genus_zero", a.genus_zero_pass(), pairs + " pairs with g(F_p / <H_i, H_j>) = 0"},
      {level + ".kani_rosen.genus_sum", a.genus_sum_check.pass(),
       "sum of g(F_p / H_j) = " + std::to_string(a.genus_sum_check.sum()) + ", g(F_p) = " +
           std::to_string(a.genus_sum_check.expected)},
  };
  if (d.refinement) {
    const auto& r = *d.refinement;
    const auto p = d.context.p();
    out.push_back({level + ".gamma.genus", r.genus_pass(p),
                   "g(C/K_i) = " + join_ints(r.quotient_genera, ", ") + "; g(C/<K_i, K_j>) = " +
                       join_ints(r.join_genera, ", ")});
    out.push_back({level + ".gamma.certificate", r.certificate.passes(),
                   "<1, chi> = " + rational_text(r.certificate.with_trivial) + ", <Ind_T 1, chi> = " +
                       rational_text(r.certificate.with_t_invariant) + ", <chi, chi> = " +
                       rational_text(r.certificate.self)});
  }
  try {
    const auto dim = dimension_audit(d);
    out.push_back({level + ".dimension", true,
                   "sum of multiplicity x dimension = " + std::to_string(dim.total) + " = g(F_p)"});
  } catch (const Error& e) {
    out.push_back({level + ".dimension", false, e.what()});
  }
  if (d.level == DecompositionLevel::kFine) {
    try {
      const auto shape = match_group_algebra_shape(d);
      std::string detail;
      for (const auto& m : shape) {
        detail += (detail.empty() ? "" : ", ") + m.component + " ~ " + m.curve.jacobian_symbol();
      }
      out.push_back({level + ".group_algebra_shape", true, detail});
    } catch (const Error& e) {
      out.push_back({level + ".group_algebra_shape", false, e.what()});
    }
  }
  return out;
}

void to_json(json& j, const Report& r) {
  j = json{{"schema_version", r.schema_version},
           {"command", r.command},
           {"p", r.p},
           {"orbits", r.orbits},
           {"decompositions", r.decompositions},
           {"checks", r.checks},
           {"passed", r.passed()}};
  j["gamma_roots"] = r.gamma_roots ? json(*r.gamma_roots) : json(nullptr);
  if (r.refinement) j["refinement"] = *r.refinement;
  if (r.monomial) j["monomial"] = *r.monomial;
  json prov{{"audit_method", r.provenance.audit_method}};
  if (r.provenance.triple) prov["triple"] = *r.provenance.triple;
  if (r.provenance.timings_ms) prov["timings_ms"] = *r.provenance.timings_ms;
  j["provenance"] = prov;
}

void from_json(const json& j, Report& r) {
  j.at("schema_version").get_to(r.schema_version);
  if (r.schema_version != kSchemaVersion) {
    throw Error(ErrorCode::kInvalidArgument, "unsupported schema_version " + r.schema_version);
  }
  j.at("command").get_to(r.command);
  j.at("p").get_to(r.p);
  j.at("orbits").get_to(r.orbits);
  j.at("decompositions").get_to(r.decompositions);
  j.at("checks").get_to(r.checks);
  read_optional(j, "gamma_roots", r.gamma_roots);
  read_optional(j, "refinement", r.refinement);
  read_optional(j, "monomial", r.monomial);
  const auto& prov = j.at("provenance");
  prov.at("audit_method").get_to(r.provenance.audit_method);
  read_optional(prov, "triple", r.provenance.triple);
  read_optional(prov, "timings_ms", r.provenance.timings_ms);
}

std::string to_json_text(const Report& r) { return json(r).dump(2) + "\n"; }

Report report_from_json_text(const std::string& text) {
  try {
    return json::parse(text).get<Report>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  for (const auto& d : r.decompositions) out << d.text << "\n";
  if (!r.orbits.orbits.empty()) {
    out << "p = " << r.p << ", p mod 3 = " << r.p % 3;
    if (r.gamma_roots) out << ", gamma roots " << (*r.gamma_roots)[0] << ", " << (*r.gamma_roots)[1];
    out << "\n";
    for (const auto& o : r.orbits.orbits) {
      out << "{" << join_ints(o.elements, ", ") << "} " << o.kind << "\n";
    }
    out << "orbits: " << r.orbits.orbits.size() << " (SPECIAL_ONE " << r.orbits.special_one << ", GAMMA "
        << r.orbits.gamma << ", GENERIC " << r.orbits.generic << ")\n";
  }
  if (r.monomial) {
    for (const auto& [name, form] : r.monomial->maps) out << name << " = " << form << "\n";
  }
  for (const auto& c : r.checks) {
    out << pass_text(c.pass) << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  if (r.provenance.timings_ms) {
    for (const auto& [stage, ms] : *r.provenance.timings_ms) out << "time " << stage << " " << ms << " ms\n";
  }
  if (!r.checks.empty()) out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace fermat
