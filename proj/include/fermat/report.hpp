#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermat/decompose.hpp"
#include "fermat/orbits.hpp"

namespace fermat {

inline constexpr const char* kSchemaVersion = "1.0";

struct OrbitEntry {
  Residue representative = 0;
  std::vector<Residue> elements;
  std::string kind;

  friend bool operator==(const OrbitEntry&, const OrbitEntry&) = default;
};

struct OrbitSummary {
  std::vector<OrbitEntry> orbits;
  std::int64_t special_one = 0;
  std::int64_t gamma = 0;
  std::int64_t generic = 0;

  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

struct FactorEntry {
  std::string curve;   // descriptor, e.g. "C_alpha(p=13, alpha=2)"
  std::string symbol;  // "JC(2)"
  std::string kind;
  std::int64_t multiplicity = 0;
  std::int64_t dimension = 0;

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct DecompositionEntry {
  std::string level;
  std::string text;  // "JF(7) ~ JC(1)^3 x JC(2)^2"
  std::vector<FactorEntry> factors;

  friend bool operator==(const DecompositionEntry&, const DecompositionEntry&) = default;
};

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string detail;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct RefinementEntry {
  Residue gamma = 0;
  std::vector<std::int64_t> quotient_genera;
  std::vector<std::int64_t> join_genera;
  bool products_commute = false;  // K_i K_j = K_j K_i for all pairs; not required
  std::string with_trivial;
  std::string with_t_invariant;
  std::string self;
  std::vector<std::string> with_k;

  friend bool operator==(const RefinementEntry&, const RefinementEntry&) = default;
};

struct MonomialEntry {
  Residue root = 0;
  int epsilon = 0;
  std::map<std::string, std::string> maps;  // "T", "R", "J" -> rendered normal form

  friend bool operator==(const MonomialEntry&, const MonomialEntry&) = default;
};

struct Provenance {
  std::string audit_method;
  std::optional<std::vector<std::string>> triple;  // c2, c3, c2p
  std::optional<std::map<std::string, double>> timings_ms;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Report {
  std::string schema_version = kSchemaVersion;
  std::string command;
  std::int64_t p = 0;
  OrbitSummary orbits;
  std::optional<std::vector<Residue>> gamma_roots;
  std::vector<DecompositionEntry> decompositions;
  std::optional<RefinementEntry> refinement;
  std::vector<CheckEntry> checks;
  std::optional<MonomialEntry> monomial;
  Provenance provenance;

  bool passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

OrbitSummary summarize(const OrbitPartition& partition);
DecompositionEntry summarize(const IsogenyDecomposition& d);
RefinementEntry summarize(const GammaRefinement& r);

/// Verdicts of the audits attached to d (Kani-Rosen, gamma refinement,
/// dimension, and the group algebra shape at the fine level).
std::vector<CheckEntry> audit_checks(const IsogenyDecomposition& d);

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

/// Pretty-printed JSON with a trailing newline.
std::string to_json_text(const Report& r);
Report report_from_json_text(const std::string& text);

/// Human-readable rendering. Decomposition lines come first, one per level.
std::string to_text(const Report& r);

}  // namespace fermat
