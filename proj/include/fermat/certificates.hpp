#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "fermat/genus.hpp"
#include "fermat/groups.hpp"

namespace fermat {

using Rational = boost::rational<std::int64_t>;

/// Integer-valued function on the conjugacy classes of a finite group.
template <FiniteGroup G>
class ClassFunction {
 public:
  using Element = typename G::Element;

  ClassFunction(G group, std::shared_ptr<const ConjugacyClasses<G>> classes, std::vector<std::int64_t> values)
      : group_(std::move(group)), classes_(std::move(classes)), values_(std::move(values)) {
    if (values_.size() != classes_->classes.size()) {
      throw Error(ErrorCode::kInvalidArgument, "class function needs one value per class");
    }
  }

  const G& group() const noexcept { return group_; }
  const ConjugacyClasses<G>& classes() const noexcept { return *classes_; }
  const std::shared_ptr<const ConjugacyClasses<G>>& shared_classes() const noexcept { return classes_; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  std::int64_t at(const Element& g) const { return values_[classes_->class_of.at(group_.index(g))]; }
  std::int64_t at_identity() const { return at(group_.identity()); }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  G group_;
  std::shared_ptr<const ConjugacyClasses<G>> classes_;
  std::vector<std::int64_t> values_;
};

template <FiniteGroup G>
std::shared_ptr<const ConjugacyClasses<G>> shared_conjugacy_classes(const G& group) {
  return std::make_shared<const ConjugacyClasses<G>>(conjugacy_classes(group));
}

/// Evaluates f once per class, on its first element.
template <FiniteGroup G>
ClassFunction<G> make_class_function(const G& group, std::shared_ptr<const ConjugacyClasses<G>> classes,
                                     const std::function<std::int64_t(const typename G::Element&)>& f) {
  std::vector<std::int64_t> values;
  values.reserve(classes->classes.size());
  for (const auto& cls : classes->classes) values.push_back(f(cls.front()));
  return ClassFunction<G>(group, std::move(classes), std::move(values));
}

template <FiniteGroup G>
ClassFunction<G> trivial_character(const G& group, std::shared_ptr<const ConjugacyClasses<G>> classes) {
  return make_class_function<G>(group, std::move(classes), [](const auto&) { return std::int64_t{1}; });
}

/// g -> number of cosets hK with g h K = h K, via |G| |K cap cl(g)| / (|cl(g)| |K|).
template <FiniteGroup G>
ClassFunction<G> induced_perm_character(const Subgroup<G>& k, std::shared_ptr<const ConjugacyClasses<G>> classes) {
  const auto& group = k.group();
  std::vector<std::int64_t> hits(classes->classes.size(), 0);
  for (const auto& x : k.elements()) ++hits[classes->class_of[group.index(x)]];
  std::vector<std::int64_t> values(classes->classes.size());
  const auto order = static_cast<std::int64_t>(group.order());
  const auto k_order = static_cast<std::int64_t>(k.order());
  for (std::size_t c = 0; c < values.size(); ++c) {
    const auto size = static_cast<std::int64_t>(classes->classes[c].size());
    values[c] = order * hits[c] / (size * k_order);
  }
  return ClassFunction<G>(group, std::move(classes), std::move(values));
}

/// (1/|G|) sum_g chi1(g) chi2(g), summed over all elements.
template <FiniteGroup G>
Rational inner_product(const ClassFunction<G>& a, const ClassFunction<G>& b) {
  if (!(a.group() == b.group())) throw Error(ErrorCode::kFlavorMismatch, "inner product across different groups");
  const auto& group = a.group();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto g = group.element(i);
    sum += a.at(g) * b.at(g);
  }
  return Rational(sum, static_cast<std::int64_t>(group.order()));
}

/// Same pairing weighted by class sizes.
template <FiniteGroup G>
Rational inner_product_by_class(const ClassFunction<G>& a, const ClassFunction<G>& b) {
  if (!(a.group() == b.group())) throw Error(ErrorCode::kFlavorMismatch, "inner product across different groups");
  std::int64_t sum = 0;
  const auto& classes = a.classes().classes;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    sum += static_cast<std::int64_t>(classes[c].size()) * a.values()[c] * b.values()[c];
  }
  return Rational(sum, static_cast<std::int64_t>(a.group().order()));
}

/// Trace on H_1(F_p): 2 g(F_p) at the identity, 2 - |Fix(g)| elsewhere.
ClassFunction<FermatGroup> chi_rat(const FermatGroup& group, const GeneratingTriple& triple,
                                   std::shared_ptr<const ConjugacyClasses<FermatGroup>> classes);
ClassFunction<FermatGroup> chi_rat(const FermatGroup& group, const GeneratingTriple& triple);

/// Trace on H_1(C_gamma): p - 1 at the identity, 2 - |Fix(g)| elsewhere.
ClassFunction<PGonalGroup> chi_rat(const PGonalGroup& group,
                                   std::shared_ptr<const ConjugacyClasses<PGonalGroup>> classes);
ClassFunction<PGonalGroup> chi_rat(const PGonalGroup& group);

/// Pairings of chi_rat on <T, R> showing H_1(C_gamma) is one rational
/// irreducible: no trivial or Z_3 part, <chi, chi> = (p-1)/3, and each K_i
/// fixes a (p-1)/3-dimensional subspace.
struct PGonalCertificate {
  std::int64_t p = 0;
  Rational with_trivial;
  Rational with_t_invariant;  // pairing with Ind_<T> 1
  Rational self;
  std::vector<Rational> with_k;  // pairing with Ind_{K_i} 1, i = 1, 2, 3

  bool passes() const;
  friend bool operator==(const PGonalCertificate&, const PGonalCertificate&) = default;
};

PGonalCertificate pgonal_certificate(const PGonalGroup& group);

/// Certificate values for Aut(F_p).
struct FermatCertificate {
  std::int64_t p = 0;
  Rational with_trivial;
  std::int64_t chi_at_a1 = 0;
  std::vector<Rational> with_h_j;  // j = 1, ..., p-2
  std::vector<std::int64_t> quotient_genus_h_j;
  bool all_integral = false;

  bool passes() const;
  friend bool operator==(const FermatCertificate&, const FermatCertificate&) = default;
};

FermatCertificate fermat_certificate(const FermatGroup& group, const GeneratingTriple& triple);

}  // namespace fermat
