#include "tenfold/classify.hpp"

#include <array>

namespace tenfold {

namespace {

ClassDescriptor make(const SymmetryProfile& p, KFunctor k, int degree, std::string note) {
  ClassDescriptor d;
  d.profile = p;
  d.k_functor = k;
  d.degree = mod(degree, k == KFunctor::Real ? 8 : 2);
  d.subalgebra_note = std::move(note);
  d.cartan_label = cartan_label(d);
  return d;
}

std::string parity_word(int s) { return s > 0 ? "even" : "odd"; }

// Fills in signs implied by the ones present, rejecting contradictions.
// Returns (trs parity, grading reality) for the chiral-plus-real rows.
std::pair<int, int> chiral_real_signs(const SymmetryProfile& p) {
  std::optional<int> trs = p.trs;
  std::optional<int> reality = p.grading_reality;
  if (!reality && p.phs_grading_reality) reality = p.phs_grading_reality;
  if (p.trs && p.phs && !reality) reality = *p.trs * *p.phs;
  if (!reality) throw InconsistentProfile("chiral and real symmetry present but the grading reality sign is unknown");
  if (!trs) trs = *reality * *p.phs;
  if (p.phs && *p.phs != *reality * *trs)
    throw InconsistentProfile("declared PHS parity " + parity_word(*p.phs) + " contradicts TRS parity " +
                              parity_word(*trs) + " and grading reality " + std::to_string(*reality));
  if (p.grading_reality && p.phs_grading_reality && *p.grading_reality != *p.phs_grading_reality)
    throw InconsistentProfile("TRS and PHS disagree on the reality of the grading");
  return {*trs, *reality};
}

}  // namespace

std::string functor_name(KFunctor k) { return k == KFunctor::Real ? "real" : "complex"; }

std::string group_name(GroupKind g) {
  switch (g) {
    case GroupKind::Z: return "Z";
    case GroupKind::Z2: return "Z2";
    default: return "0";
  }
}

int degree_from_real_subalgebra(int r, int s) { return mod(s - r + 1, 8); }

GroupKind ko_point(int i) {
  static constexpr std::array<GroupKind, 8> table{GroupKind::Z,       GroupKind::Z2,      GroupKind::Z2,
                                                  GroupKind::Trivial, GroupKind::Z,       GroupKind::Trivial,
                                                  GroupKind::Trivial, GroupKind::Trivial};
  return table[mod(i, 8)];
}

std::string cartan_label(const ClassDescriptor& d) {
  if (d.k_functor == KFunctor::Complex) return d.degree == 0 ? "A" : "AIII";
  static const std::array<const char*, 8> real{"AI", "BDI", "D", "DIII", "AII", "CII", "C", "CI"};
  return real[mod(d.degree, 8)];
}

ClassDescriptor classify(const SymmetryProfile& p) {
  const bool real = p.trs || p.phs;
  const bool chiral = p.chiral || (p.trs && p.phs);
  if (!real) {
    if (chiral) return make(p, KFunctor::Complex, 1, "(A, gamma)");
    return make(p, KFunctor::Complex, 0, "(A (x) Cl_1, id (x) st)");
  }
  if (!chiral) {
    if (p.trs)
      return *p.trs > 0 ? make(p, KFunctor::Real, 0, "A^f (x) Cl_{1,0}")
                        : make(p, KFunctor::Real, 4, "A^f (x) Cl_{0,3}");
    return *p.phs > 0 ? make(p, KFunctor::Real, 2, "A^f (x) Cl_{0,1}")
                      : make(p, KFunctor::Real, 6, "A^f (x) Cl_{3,0}");
  }
  const auto [trs, reality] = chiral_real_signs(p);
  SymmetryProfile full = p;
  full.chiral = true;
  full.trs = trs;
  full.phs = trs * reality;
  full.grading_reality = reality;
  if (trs > 0 && reality > 0) return make(full, KFunctor::Real, 1, "(A^f, gamma)");
  if (trs > 0) return make(full, KFunctor::Real, 7, "(A^{f gamma} (x) Cl_{2,0}, gamma (x) st)");
  if (reality < 0) return make(full, KFunctor::Real, 3, "(A^{f gamma} (x) Cl_{0,2}, gamma (x) st)");
  return make(full, KFunctor::Real, 5, "(A^f (x) H, gamma (x) id)");
}

ClassDescriptor rough_classify(const SymmetryProfile& p) {
  const bool real = p.trs || p.phs;
  const bool chiral = p.chiral || (p.trs && p.phs);
  if (!real) return classify(p);
  if (!chiral) {
    if (p.trs) return make(p, KFunctor::Real, 0, "A^t (x) Cl_{1,0}");
    return make(p, KFunctor::Real, 2, "A^p (x) Cl_{0,1}");
  }
  const int reality = chiral_real_signs(p).second;
  return reality > 0 ? make(p, KFunctor::Real, 1, "A^t_{++} (x) Cl_{1,1}")
                     : make(p, KFunctor::Real, 7, "A^t~_{++} (x) Cl_{2,0}");
}

SymmetryProfile profile_from_report(const SymmetryReport& r, double tol) {
  if (!r.consistent(tol)) {
    std::string why = "symmetry relations fail";
    if (!r.problems.empty()) why += ": " + r.problems.front();
    auto add = [&](const char* name, const std::optional<double>& v) {
      if (v && *v > tol) why += std::string("; ") + name + " residual " + std::to_string(*v);
    };
    add("chiral", r.chiral_residual);
    add("trs", r.trs_residual);
    add("phs", r.phs_residual);
    add("product", r.product_residual);
    throw InconsistentProfile(why);
  }
  SymmetryProfile p;
  p.chiral = r.chiral_residual.has_value() && !r.implied_chiral;
  p.trs = r.trs_parity;
  p.phs = r.phs_parity;
  p.grading_reality = r.grading_reality;
  p.phs_grading_reality = r.phs_grading_reality;
  return p;
}

GroupKind strong_invariant_group(const ClassDescriptor& d, int dim) {
  if (dim < 0) throw PreconditionError("strong_invariant_group: negative dimension");
  if (d.k_functor == KFunctor::Complex) return mod(d.degree - dim, 2) == 0 ? GroupKind::Z : GroupKind::Trivial;
  return ko_point(d.degree - dim);
}

}  // namespace tenfold
