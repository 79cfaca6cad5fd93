#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fermat/arith.hpp"
#include "fermat/error.hpp"

namespace fermat {

enum class Flavor { kFermat, kPGonal };

/// Element u^rot v^refl of S3 (the D3 factor of Aut(F_p)). u is the 3-cycle
/// [x:y:z] -> [z:x:y], v the transposition [x:y:z] -> [y:x:z].
struct S3Element {
  int refl = 0;  // 0 or 1
  int rot = 0;   // 0, 1, 2

  int index() const noexcept { return refl * 3 + rot; }
  static S3Element from_index(int i) noexcept { return {i / 3, i % 3}; }
  bool is_identity() const noexcept { return refl == 0 && rot == 0; }

  /// Action on the indices t of (a1, a2, a3) = (a_0, a_1, a_2) under
  /// conjugation: s a_t s^-1 = a_{s(t)}. u: t -> t+1, v: swaps 0 and 1.
  int apply(int t) const noexcept { return (rot + (refl ? 1 - t : t) + 6) % 3; }

  friend auto operator<=>(const S3Element&, const S3Element&) = default;
};

S3Element operator*(S3Element a, S3Element b) noexcept;
S3Element inverse(S3Element a) noexcept;

/// a1^m a2^n composed with the permutation part sigma (translation first).
struct FermatAut {
  Residue m = 0;
  Residue n = 0;
  S3Element sigma;

  friend auto operator<=>(const FermatAut&, const FermatAut&) = default;
};

/// T^k R^e in <T, R> = Z_p x| Z_3.
struct PGonalAut {
  Residue k = 0;
  int e = 0;

  friend auto operator<=>(const PGonalAut&, const PGonalAut&) = default;
};

template <class G>
concept FiniteGroup = requires(const G& g, const typename G::Element& x, std::size_t i) {
  { G::kFlavor } -> std::convertible_to<Flavor>;
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.identity() } -> std::same_as<typename G::Element>;
  { g.multiply(x, x) } -> std::same_as<typename G::Element>;
  { g.inverse(x) } -> std::same_as<typename G::Element>;
  { g.index(x) } -> std::convertible_to<std::size_t>;
  { g.element(i) } -> std::same_as<typename G::Element>;
  { g.generators() } -> std::same_as<std::vector<typename G::Element>>;
  { g.contains(x) } -> std::same_as<bool>;
  { g.to_string(x) } -> std::same_as<std::string>;
  { g.context() } -> std::convertible_to<const PrimeContext&>;
};

/// Aut(F_p) = Z_p^2 x| S3, order 6p^2. Multiplication
/// (t1, s1)(t2, s2) = (t1 + M_{s1} t2, s1 s2), where M_s is the action of s on
/// exponent pairs induced by a_t -> a_{s(t)} and a3 = (a1 a2)^-1.
class FermatGroup {
 public:
  using Element = FermatAut;
  static constexpr Flavor kFlavor = Flavor::kFermat;

  explicit FermatGroup(const PrimeContext& ctx) : ctx_(ctx) {}

  const PrimeContext& context() const noexcept { return ctx_; }
  std::size_t order() const noexcept { return static_cast<std::size_t>(6 * ctx_.p() * ctx_.p()); }

  Element identity() const noexcept { return {}; }
  Element multiply(const Element& g, const Element& h) const;
  Element inverse(const Element& g) const;
  Element power(const Element& g, std::int64_t e) const;
  std::int64_t element_order(const Element& g) const;
  Element conjugate(const Element& h, const Element& g) const { return multiply(multiply(h, g), inverse(h)); }

  std::size_t index(const Element& g) const;
  Element element(std::size_t i) const;
  bool contains(const Element& g) const noexcept;
  std::vector<Element> generators() const { return {a1(), a2(), u(), v()}; }

  /// M_s (m, n).
  std::array<Residue, 2> act(S3Element s, Residue m, Residue n) const;

  Element a1() const noexcept { return {1, 0, {}}; }
  Element a2() const noexcept { return {0, 1, {}}; }
  Element a3() const { return {ctx_.neg(1), ctx_.neg(1), {}}; }
  Element u() const noexcept { return {0, 0, {0, 1}}; }
  Element v() const noexcept { return {0, 0, {1, 0}}; }

  bool in_h(const Element& g) const noexcept { return g.sigma.is_identity(); }

  std::string to_string(const Element& g) const;

  friend bool operator==(const FermatGroup&, const FermatGroup&) = default;

 private:
  PrimeContext ctx_;
};

/// <T, R> acting on C_gamma, with R T R^-1 = T^{gamma^2}; order 3p.
class PGonalGroup {
 public:
  using Element = PGonalAut;
  static constexpr Flavor kFlavor = Flavor::kPGonal;

  /// Uses the smaller root; throws NO_GAMMA when p = 2 mod 3.
  explicit PGonalGroup(const PrimeContext& ctx);
  /// Throws OUT_OF_RANGE unless root is one of the two gamma roots.
  PGonalGroup(const PrimeContext& ctx, Residue root);

  const PrimeContext& context() const noexcept { return ctx_; }
  Residue gamma() const noexcept { return gamma_; }
  std::size_t order() const noexcept { return static_cast<std::size_t>(3 * ctx_.p()); }

  Element identity() const noexcept { return {}; }
  Element multiply(const Element& g, const Element& h) const;
  Element inverse(const Element& g) const;
  Element power(const Element& g, std::int64_t e) const;
  std::int64_t element_order(const Element& g) const;
  Element conjugate(const Element& h, const Element& g) const { return multiply(multiply(h, g), inverse(h)); }

  std::size_t index(const Element& g) const;
  Element element(std::size_t i) const;
  bool contains(const Element& g) const noexcept;
  std::vector<Element> generators() const { return {T(), R()}; }

  Element T() const noexcept { return {1, 0}; }
  Element R() const noexcept { return {0, 1}; }

  std::string to_string(const Element& g) const;

  friend bool operator==(const PGonalGroup&, const PGonalGroup&) = default;

 private:
  PrimeContext ctx_;
  Residue gamma_;
  std::array<Residue, 3> twist_;  // gamma^{2e}
};

/// A subgroup with its elements cached in index order.
template <FiniteGroup G>
class Subgroup {
 public:
  using Element = typename G::Element;

  Subgroup(G group, std::vector<Element> generators, std::vector<Element> elements)
      : group_(std::move(group)), generators_(std::move(generators)), elements_(std::move(elements)) {}

  const G& group() const noexcept { return group_; }
  std::span<const Element> generators() const noexcept { return generators_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const Element& g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  G group_;
  std::vector<Element> generators_;
  std::vector<Element> elements_;
};

namespace detail {

template <FiniteGroup G>
void require_member(const G& group, const typename G::Element& g) {
  if (!group.contains(g)) {
    throw Error(ErrorCode::kFlavorMismatch,
                "element " + group.to_string(g) + " does not belong to the group at p = " +
                    std::to_string(group.context().p()));
  }
}

template <FiniteGroup G>
std::vector<typename G::Element> collect(const G& group, const std::vector<char>& mask) {
  std::vector<typename G::Element> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(group.element(i));
  }
  return out;
}

}  // namespace detail

template <FiniteGroup G>
Subgroup<G> subgroup_closure(const G& group, std::vector<typename G::Element> generators) {
  if (generators.empty()) throw Error(ErrorCode::kInvalidArgument, "subgroup_closure needs a generator");
  for (const auto& g : generators) detail::require_member(group, g);

  std::vector<char> seen(group.order(), 0);
  std::vector<typename G::Element> frontier{group.identity()};
  seen[group.index(group.identity())] = 1;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (const auto& g : generators) {
      auto next = group.multiply(frontier[i], g);
      auto& flag = seen[group.index(next)];
      if (!flag) {
        flag = 1;
        frontier.push_back(next);
      }
    }
  }
  return Subgroup<G>(group, std::move(generators), detail::collect(group, seen));
}

template <FiniteGroup G>
struct ProductSet {
  std::vector<typename G::Element> elements;  // K1 K2 in index order
  bool commutes = false;                      // K1 K2 == K2 K1 as sets
};

template <FiniteGroup G>
ProductSet<G> product_set(const Subgroup<G>& k1, const Subgroup<G>& k2) {
  if (!(k1.group() == k2.group())) {
    throw Error(ErrorCode::kFlavorMismatch, "product_set of subgroups of different groups");
  }
  const G& group = k1.group();
  std::vector<char> left(group.order(), 0), right(group.order(), 0);
  for (const auto& x : k1.elements()) {
    for (const auto& y : k2.elements()) {
      left[group.index(group.multiply(x, y))] = 1;
      right[group.index(group.multiply(y, x))] = 1;
    }
  }
  return {detail::collect(group, left), left == right};
}

/// Subgroup generated by the union of two subgroups.
template <FiniteGroup G>
Subgroup<G> join(const Subgroup<G>& k1, const Subgroup<G>& k2) {
  if (!(k1.group() == k2.group())) throw Error(ErrorCode::kFlavorMismatch, "join of subgroups of different groups");
  std::vector<typename G::Element> gens(k1.generators().begin(), k1.generators().end());
  gens.insert(gens.end(), k2.generators().begin(), k2.generators().end());
  return subgroup_closure(k1.group(), std::move(gens));
}

template <FiniteGroup G>
Subgroup<G> trivial_subgroup(const G& group) {
  return subgroup_closure(group, {group.identity()});
}

template <FiniteGroup G>
Subgroup<G> whole_group(const G& group) {
  return subgroup_closure(group, group.generators());
}

template <FiniteGroup G>
struct ConjugacyClasses {
  std::vector<std::vector<typename G::Element>> classes;  // each sorted; ordered by first element
  std::vector<std::uint32_t> class_of;                    // by element index
};

template <FiniteGroup G>
ConjugacyClasses<G> conjugacy_classes(const G& group) {
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  ConjugacyClasses<G> out;
  out.class_of.assign(group.order(), kUnassigned);
  const auto gens = group.generators();
  std::vector<typename G::Element> conj_by;
  for (const auto& s : gens) conj_by.push_back(s);

  for (std::size_t i = 0; i < group.order(); ++i) {
    if (out.class_of[i] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(out.classes.size());
    std::vector<typename G::Element> members{group.element(i)};
    out.class_of[i] = id;
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (const auto& s : conj_by) {
        auto c = group.conjugate(s, members[j]);
        auto& slot = out.class_of[group.index(c)];
        if (slot == kUnassigned) {
          slot = id;
          members.push_back(c);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  return out;
}

/// All distinct cyclic subgroups, ordered by their element lists.
template <FiniteGroup G>
std::vector<Subgroup<G>> cyclic_subgroups(const G& group) {
  std::set<std::vector<typename G::Element>> seen;
  std::vector<Subgroup<G>> out;
  for (std::size_t i = 0; i < group.order(); ++i) {
    auto k = subgroup_closure(group, {group.element(i)});
    std::vector<typename G::Element> key(k.elements().begin(), k.elements().end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup<G>& a, const Subgroup<G>& b) {
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                        b.elements().end());
  });
  return out;
}

/// H = <a1, a2>, the translation subgroup of order p^2.
Subgroup<FermatGroup> fermat_h(const FermatGroup& group);

/// H_j = <a1 a2^{1+j}>, j in {1, ..., p-2}; these act freely on F_p.
Subgroup<FermatGroup> fermat_h_j(const FermatGroup& group, std::int64_t j);

/// K_1 = <R>, K_2 = <T^{g^2-1} R>, K_3 = <T^{2(g^2-1)} R>.
Subgroup<PGonalGroup> pgonal_k(const PGonalGroup& group, int i);

}  // namespace fermat
