#include "fermat/genus.hpp"

#include <array>
#include <boost/rational.hpp>

namespace fermat {

namespace {

using Rational = boost::rational<std::int64_t>;

struct LeftCosets {
  std::vector<std::uint32_t> coset_of;  // by element index
  std::vector<FermatAut> representatives;
};

LeftCosets left_cosets(const Subgroup<FermatGroup>& k) {
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  const auto& group = k.group();
  LeftCosets out;
  out.coset_of.assign(group.order(), kUnassigned);
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (out.coset_of[i] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(out.representatives.size());
    const FermatAut g = group.element(i);
    out.representatives.push_back(g);
    for (const auto& x : k.elements()) out.coset_of[group.index(group.multiply(g, x))] = id;
  }
  return out;
}

/// Cycle lengths of left multiplication by c on G/K.
std::vector<std::int64_t> cycle_lengths(const FermatGroup& group, const LeftCosets& cosets, const FermatAut& c) {
  const std::size_t n = cosets.representatives.size();
  std::vector<char> seen(n, 0);
  std::vector<std::int64_t> lengths;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::int64_t len = 0;
    for (std::size_t cur = start; !seen[cur];
         cur = cosets.coset_of[group.index(group.multiply(c, cosets.representatives[cur]))]) {
      seen[cur] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::array<FermatAut, 3> as_array(const GeneratingTriple& t) { return {t.c2, t.c3, t.c2p}; }

std::array<std::int64_t, 3> branch_orders(const PrimeContext& ctx) { return {2, 3, 2 * ctx.p()}; }

bool matches_h_fix_pattern(const FermatGroup& group, const GeneratingTriple& triple) {
  const auto h_fix = fermat_h_fix_table(group);
  const auto h = fermat_h(group);
  for (const auto& x : h.elements()) {
    if (x == group.identity()) continue;
    if (full_fix_count(group, x, triple) != h_fix.at(x)) return false;
  }
  return true;
}

}  // namespace

std::int64_t fermat_genus(const PrimeContext& ctx) { return (ctx.p() - 1) * (ctx.p() - 2) / 2; }

FixTable<FermatGroup> fermat_h_fix_table(const FermatGroup& group) {
  const auto& ctx = group.context();
  std::vector<std::optional<std::int64_t>> counts(group.order());
  for (Residue m = 0; m < ctx.p(); ++m) {
    for (Residue n = 0; n < ctx.p(); ++n) {
      if (m == 0 && n == 0) continue;
      // a1^k = (k, 0), a2^k = (0, k), a3^k = (-k, -k)
      const bool has_fixed_points = m == 0 || n == 0 || m == n;
      counts[group.index({m, n, {}})] = has_fixed_points ? ctx.p() : 0;
    }
  }
  return FixTable<FermatGroup>(group, std::move(counts));
}

std::int64_t fermat_quotient_genus(const Subgroup<FermatGroup>& k, const FixTable<FermatGroup>& h_fix) {
  for (const auto& x : k.elements()) {
    if (!k.group().in_h(x)) {
      throw Error(ErrorCode::kNotSubgroupOfH, k.group().to_string(x) + " is not in H = <a1, a2>");
    }
  }
  return rh_genus(fermat_genus(k.group().context()), k, h_fix);
}

std::int64_t fermat_quotient_genus(const Subgroup<FermatGroup>& k) {
  return fermat_quotient_genus(k, fermat_h_fix_table(k.group()));
}

void validate_triple(const FermatGroup& group, const GeneratingTriple& triple) {
  const auto orders = branch_orders(group.context());
  const auto elems = as_array(triple);
  for (std::size_t i = 0; i < 3; ++i) {
    if (group.element_order(elems[i]) != orders[i]) {
      throw Error(ErrorCode::kInvalidArgument, "triple element " + group.to_string(elems[i]) +
                                                   " does not have order " + std::to_string(orders[i]));
    }
  }
  if (group.multiply(group.multiply(triple.c2, triple.c3), triple.c2p) != group.identity()) {
    throw Error(ErrorCode::kInvalidArgument, "c2 c3 c2p != 1");
  }
  if (subgroup_closure(group, {triple.c2, triple.c3}).order() != group.order()) {
    throw Error(ErrorCode::kInvalidArgument, "<c2, c3> is a proper subgroup");
  }
  const auto genus = coset_genus(trivial_subgroup(group), triple);
  if (genus != fermat_genus(group.context())) {
    throw Error(ErrorCode::kInvalidArgument, "triple induces genus " + std::to_string(genus));
  }
}

GeneratingTriple find_generating_triple(const FermatGroup& group, std::int64_t search_bound) {
  const auto& ctx = group.context();
  if (ctx.p() > search_bound) {
    throw Error(ErrorCode::kTooLarge, "triple search is exhaustive; p = " + std::to_string(ctx.p()) +
                                          " exceeds the bound " + std::to_string(search_bound));
  }
  std::vector<FermatAut> involutions, order_three;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto g = group.element(i);
    const auto ord = group.element_order(g);
    if (ord == 2) involutions.push_back(g);
    if (ord == 3) order_three.push_back(g);
  }
  for (const auto& c2 : involutions) {
    for (const auto& c3 : order_three) {
      const auto c2p = group.inverse(group.multiply(c2, c3));
      if (group.element_order(c2p) != 2 * ctx.p()) continue;
      if (subgroup_closure(group, {c2, c3}).order() != group.order()) continue;
      GeneratingTriple triple{c2, c3, c2p};
      if (coset_genus(trivial_subgroup(group), triple) != fermat_genus(ctx)) continue;
      if (!matches_h_fix_pattern(group, triple)) continue;
      return triple;
    }
  }
  throw Error(ErrorCode::kSearchExhausted, "no (2, 3, 2p) generating triple at p = " + std::to_string(ctx.p()));
}

std::int64_t coset_genus(const Subgroup<FermatGroup>& k, const GeneratingTriple& triple) {
  const auto& group = k.group();
  const auto cosets = left_cosets(k);
  const auto n = static_cast<std::int64_t>(cosets.representatives.size());
  const auto orders = branch_orders(group.context());
  const auto elems = as_array(triple);

  // chi_orb(F/K) = [G:K] (-1 + sum 1/m_i); underlying chi = chi_orb + sum over cone points (1 - 1/order)
  Rational chi_orb(-1);
  for (auto m : orders) chi_orb += Rational(1, m);
  chi_orb *= n;
  Rational cone_sum(0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (auto len : cycle_lengths(group, cosets, elems[i])) cone_sum += Rational(1) - Rational(len, orders[i]);
  }
  const Rational genus = (Rational(2) - chi_orb - cone_sum) / 2;
  if (genus.denominator() != 1 || genus.numerator() < 0) {
    throw Error(ErrorCode::kInconsistentOrbifold,
                "orbifold formula gives genus " + std::to_string(genus.numerator()) + "/" +
                    std::to_string(genus.denominator()) + " for a subgroup of order " + std::to_string(k.order()));
  }
  return genus.numerator();
}

std::int64_t full_fix_count(const FermatGroup& group, const FermatAut& g, const GeneratingTriple& triple) {
  if (g == group.identity()) throw Error(ErrorCode::kIdentityInput, "fixed points of the identity are not counted");
  std::int64_t total = 0;
  for (const auto& c : as_array(triple)) {
    const auto stabilizer = subgroup_closure(group, {c});
    std::int64_t hits = 0;
    for (std::size_t i = 0; i < group.order(); ++i) {
      const auto h = group.element(i);
      if (stabilizer.contains(group.multiply(group.multiply(group.inverse(h), g), h))) ++hits;
    }
    total += hits / static_cast<std::int64_t>(stabilizer.order());
  }
  return total;
}

FixTable<FermatGroup> full_fix_table(const FermatGroup& group, const GeneratingTriple& triple) {
  const auto classes = conjugacy_classes(group);
  std::vector<std::optional<std::int64_t>> counts(group.order());
  for (const auto& cls : classes.classes) {
    if (cls.front() == group.identity()) continue;
    const auto value = full_fix_count(group, cls.front(), triple);
    for (const auto& x : cls) counts[group.index(x)] = value;
  }
  return FixTable<FermatGroup>(group, std::move(counts));
}

bool euler_characteristic_holds(const FermatGroup& group) {
  Rational branch(0);
  for (auto m : branch_orders(group.context())) branch += Rational(1) - Rational(1, m);
  const Rational chi = Rational(static_cast<std::int64_t>(group.order())) * (Rational(2) - branch);
  return chi == Rational(2 - 2 * fermat_genus(group.context()));
}

std::int64_t pgonal_genus(const PrimeContext& ctx) { return (ctx.p() - 1) / 2; }

FixTable<PGonalGroup> pgonal_fix_table(const PGonalGroup& group) {
  std::vector<std::optional<std::int64_t>> counts(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto g = group.element(i);
    if (g == group.identity()) continue;
    counts[i] = g.e == 0 ? 3 : 2;
  }
  return FixTable<PGonalGroup>(group, std::move(counts));
}

}  // namespace fermat
