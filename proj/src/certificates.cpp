#include "fermat/certificates.hpp"

namespace fermat {

ClassFunction<FermatGroup> chi_rat(const FermatGroup& group, const GeneratingTriple& triple,
                                   std::shared_ptr<const ConjugacyClasses<FermatGroup>> classes) {
  const auto fix = full_fix_table(group, triple);
  const auto dim = 2 * fermat_genus(group.context());
  return make_class_function<FermatGroup>(group, std::move(classes), [&](const FermatAut& g) {
    return g == group.identity() ? dim : 2 - fix.at(g);
  });
}

ClassFunction<FermatGroup> chi_rat(const FermatGroup& group, const GeneratingTriple& triple) {
  return chi_rat(group, triple, shared_conjugacy_classes(group));
}

ClassFunction<PGonalGroup> chi_rat(const PGonalGroup& group,
                                   std::shared_ptr<const ConjugacyClasses<PGonalGroup>> classes) {
  const auto fix = pgonal_fix_table(group);
  const auto dim = 2 * pgonal_genus(group.context());
  return make_class_function<PGonalGroup>(group, std::move(classes), [&](const PGonalAut& g) {
    return g == group.identity() ? dim : 2 - fix.at(g);
  });
}

ClassFunction<PGonalGroup> chi_rat(const PGonalGroup& group) {
  return chi_rat(group, shared_conjugacy_classes(group));
}

bool PGonalCertificate::passes() const {
  const Rational third((p - 1) / 3);
  if (with_trivial != Rational(0) || with_t_invariant != Rational(0) || self != third || with_k.size() != 3) return false;
  for (const auto& v : with_k) {
    if (v != third) return false;
  }
  return true;
}

PGonalCertificate pgonal_certificate(const PGonalGroup& group) {
  const auto classes = shared_conjugacy_classes(group);
  const auto chi = chi_rat(group, classes);
  PGonalCertificate out;
  out.p = group.context().p();
  out.with_trivial = inner_product(trivial_character(group, classes), chi);
  out.with_t_invariant = inner_product(induced_perm_character(subgroup_closure(group, {group.T()}), classes), chi);
  out.self = inner_product(chi, chi);
  for (int i = 1; i <= 3; ++i) {
    out.with_k.push_back(inner_product(induced_perm_character(pgonal_k(group, i), classes), chi));
  }
  return out;
}

bool FermatCertificate::passes() const {
  if (with_trivial != Rational(0) || chi_at_a1 != 2 - p || !all_integral) return false;
  if (with_h_j.size() != quotient_genus_h_j.size()) return false;
  for (std::size_t i = 0; i < with_h_j.size(); ++i) {
    if (with_h_j[i] != Rational(p - 1) || with_h_j[i] != Rational(2 * quotient_genus_h_j[i])) return false;
  }
  return true;
}

FermatCertificate fermat_certificate(const FermatGroup& group, const GeneratingTriple& triple) {
  const auto& ctx = group.context();
  const auto classes = shared_conjugacy_classes(group);
  const auto chi = chi_rat(group, triple, classes);
  FermatCertificate out;
  out.p = ctx.p();
  out.with_trivial = inner_product(trivial_character(group, classes), chi);
  out.chi_at_a1 = chi.at(group.a1());
  out.all_integral = out.with_trivial.denominator() == 1;
  for (std::int64_t j = 1; j <= ctx.p() - 2; ++j) {
    const auto h_j = fermat_h_j(group, j);
    const auto value = inner_product(induced_perm_character(h_j, classes), chi);
    out.all_integral = out.all_integral && value.denominator() == 1;
    out.with_h_j.push_back(value);
    out.quotient_genus_h_j.push_back(fermat_quotient_genus(h_j));
  }
  return out;
}

}  // namespace fermat
