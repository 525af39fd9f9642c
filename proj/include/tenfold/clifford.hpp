#pragma once
// Matrix models of Clifford algebras, graded tensor products and
// generator-level isomorphism certificates.

#include <optional>
#include <string>
#include <vector>

#include "tenfold/algebra.hpp"

namespace tenfold {

// Generators are stored positive squares first: gens[0..r) square to +1,
// gens[r..r+s) square to -1.
struct CliffordRep {
  int r = 0;
  int s = 0;
  bool real = true;  // false: complex Clifford algebra, no real structure
  std::vector<Mat> gens;
  Mat grading;
  std::optional<Mat> theta;

  int dim() const { return static_cast<int>(grading.rows()); }
  std::string label() const;
  GradedRealAlgebra algebra() const;
  // Residuals of every defining relation of the model.
  std::vector<Check> invariant_checks() const;
};

// Largest r+s accepted by build_clifford.
inline constexpr int kMaxCliffordGenerators = 12;

// Jordan-Wigner model of dimension 2^ceil((r+s)/2). For odd r+s this is
// twice the irreducible size, so an honest grading operator always exists.
CliffordRep build_clifford(int r, int s, bool real = true);

// Koszul-signed tensor product realized by a (x) b -> a Gamma_a^{|b|} (x) b.
// With an imaginary inner grading on the left factor the right real
// structure is composed with its grading so that generators stay real.
CliffordRep graded_tensor(const CliffordRep& a, const CliffordRep& b);
GradedRealAlgebra graded_tensor(const GradedRealAlgebra& a, const GradedRealAlgebra& b);

// Ordinary tensor product: grading Gamma_a (x) Gamma_b, real structure
// Theta_a (x) Theta_b.
GradedRealAlgebra tensor(const GradedRealAlgebra& a, const GradedRealAlgebra& b);

// Checks that images of src's generators satisfy its relations in tgt,
// respect adjoints, grading and real structure, and induce a bijection onto
// tgt (rank comparison of spanned algebras).
IsoCertificate certify_iso(const CliffordRep& src, const GradedRealAlgebra& tgt,
                           const std::vector<Mat>& images, double tol = kTolAlg);
IsoCertificate certify_iso(const CliffordRep& src, const CliffordRep& tgt,
                           const std::vector<Mat>& images, double tol = kTolAlg);

// Quaternions as M_2(C) with real structure Ad_{sigma_y} o conj, ungraded.
GradedRealAlgebra quaternions();
// M_2 with grading Ad_{sigma_z} and entrywise conjugation.
GradedRealAlgebra real_matrices_2();

// The six generator-level isomorphisms H (x) Cl_{a,b} -> Cl_{r,s} and
// M_2(R) (x) Cl_{r,s} -> Cl_{r+1,s+1}; the last uses (r,s) = (1,1).
std::vector<IsoCertificate> quaternion_tensor_certificates(double tol = kTolAlg);

// Cl_{r1,s1} graded-tensor Cl_{r2,s2} -> Cl_{r1+r2,s1+s2}.
IsoCertificate certify_tensor_sum(int r1, int s1, int r2, int s2, double tol = kTolAlg);
// (M_2(R) (x) Cl_{r,s}, Ad_{sigma_z} (x) st) -> Cl_{r+1,s+1}.
IsoCertificate certify_real_matrix_doubling(int r, int s, double tol = kTolAlg);
// (M_2(C) (x) Cl_n, Ad_{sigma_z} (x) st) -> Cl_{n+2} (complex).
IsoCertificate certify_complex_matrix_doubling(int n, double tol = kTolAlg);

// Ungraded isomorphism type: copies x M_size(field).
struct Species {
  enum class Field { R, C, H };
  Field field = Field::R;
  int size = 1;
  int copies = 1;
  std::string str() const;
  bool operator==(const Species&) const = default;
};

// Reduction ladder: peel M_2(R) factors while r,s >= 1, trade three
// like-signed generators for a quaternion factor, stop at r+s <= 2.
Species species(int r, int s);

}  // namespace tenfold
