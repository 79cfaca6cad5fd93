#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fermat/arith.hpp"

namespace fermat {

/// Generators of the S3-action on X_p: U(a) = -(1+a)^-1, V(a) = a^-1.
enum class S3Generator { kU, kV };

enum class OrbitKind { kSpecialOne, kGamma, kGeneric };

std::string_view to_string(OrbitKind kind);

struct OrbitClass {
  Residue representative = 0;     // smallest member
  std::vector<Residue> elements;  // sorted
  OrbitKind kind = OrbitKind::kGeneric;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Residue a) const;

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

struct OrbitPartition {
  PrimeContext context;
  std::vector<OrbitClass> orbits;  // sorted by representative

  std::size_t count(OrbitKind kind) const;
  const OrbitClass& orbit_of(Residue a) const;
};

Residue s3_apply(S3Generator generator, Residue alpha, const PrimeContext& ctx);

/// Closure of {alpha} under U and V.
OrbitClass orbit(Residue alpha, const PrimeContext& ctx);

OrbitPartition orbit_partition(const PrimeContext& ctx);

}  // namespace fermat
