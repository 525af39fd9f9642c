#pragma once
// Symmetry profile -> K-functor kind and degree, and the strong-invariant group.

#include <optional>
#include <stdexcept>
#include <string>

#include "tenfold/models.hpp"

namespace tenfold {

struct SymmetryProfile {
  bool chiral = false;
  std::optional<int> trs;              // parity +1 / -1
  std::optional<int> phs;
  std::optional<int> grading_reality;  // t(Gamma) Gamma when chiral and TRS are present
  std::optional<int> phs_grading_reality;
};

enum class KFunctor { Complex, Real };
enum class GroupKind { Z, Z2, Trivial };

struct ClassDescriptor {
  SymmetryProfile profile;
  KFunctor k_functor = KFunctor::Complex;
  int degree = 0;  // mod 2 (complex) or mod 8 (real)
  std::string subalgebra_note;
  std::string cartan_label;
};

struct InconsistentProfile : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Refined classification relative to entrywise conjugation.
ClassDescriptor classify(const SymmetryProfile& profile);

// Coarse classification relative to the symmetry's own real subalgebra
// (TRS -> KO_0(A^t), PHS -> KO_2(A^p), chiral + TRS -> KO_{+-1}(A^t)).
ClassDescriptor rough_classify(const SymmetryProfile& profile);

// Profile read off a verified symmetry report; throws InconsistentProfile
// when the report is not consistent.
SymmetryProfile profile_from_report(const SymmetryReport& report, double tol = kTolAlg);

GroupKind strong_invariant_group(const ClassDescriptor& descriptor, int d);
// KO_i of the point for i mod 8.
GroupKind ko_point(int i);
std::string cartan_label(const ClassDescriptor& descriptor);
std::string group_name(GroupKind g);
std::string functor_name(KFunctor k);

// Van Daele degree of a real subalgebra Cl_{r,s}: (s - r + 1) mod 8.
int degree_from_real_subalgebra(int r, int s);

inline int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace tenfold
