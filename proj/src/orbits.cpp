#include "fermat/orbits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fermat/error.hpp"

namespace fermat {

std::string_view to_string(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::kSpecialOne: return "SPECIAL_ONE";
    case OrbitKind::kGamma: return "GAMMA";
    case OrbitKind::kGeneric: return "GENERIC";
  }
  return "UNKNOWN";
}

bool OrbitClass::contains(Residue a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

std::size_t OrbitPartition::count(OrbitKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(orbits.begin(), orbits.end(), [kind](const OrbitClass& o) { return o.kind == kind; }));
}

const OrbitClass& OrbitPartition::orbit_of(Residue a) const {
  context.require_xp(a, "alpha");
  for (const auto& o : orbits) {
    if (o.contains(a)) return o;
  }
  throw std::logic_error("orbit partition does not cover " + std::to_string(a));
}

Residue s3_apply(S3Generator generator, Residue alpha, const PrimeContext& ctx) {
  ctx.require_xp(alpha, "alpha");
  switch (generator) {
    case S3Generator::kU: return ctx.neg(ctx.inv(alpha + 1));
    case S3Generator::kV: return ctx.inv(alpha);
  }
  throw std::logic_error("unknown S3 generator");
}

OrbitClass orbit(Residue alpha, const PrimeContext& ctx) {
  ctx.require_xp(alpha, "alpha");
  std::vector<Residue> members{alpha};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto gen : {S3Generator::kU, S3Generator::kV}) {
      const Residue image = s3_apply(gen, members[i], ctx);
      if (std::find(members.begin(), members.end(), image) == members.end()) members.push_back(image);
    }
  }
  std::sort(members.begin(), members.end());

  OrbitClass out;
  out.representative = members.front();
  switch (members.size()) {
    case 2: out.kind = OrbitKind::kGamma; break;
    case 3: out.kind = OrbitKind::kSpecialOne; break;
    case 6: out.kind = OrbitKind::kGeneric; break;
    default:
      throw std::logic_error("S3-orbit of size " + std::to_string(members.size()) + " at p = " +
                             std::to_string(ctx.p()));
  }
  out.elements = std::move(members);
  return out;
}

OrbitPartition orbit_partition(const PrimeContext& ctx) {
  OrbitPartition partition{ctx, {}};
  std::vector<bool> seen(static_cast<std::size_t>(ctx.p()), false);
  for (Residue a = 1; a <= ctx.p() - 2; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    OrbitClass o = orbit(a, ctx);
    for (Residue e : o.elements) seen[static_cast<std::size_t>(e)] = true;
    partition.orbits.push_back(std::move(o));
  }
  return partition;
}

}  // namespace fermat
