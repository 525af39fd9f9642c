#pragma once
// Sign invariants of real structures inner related to entrywise conjugation,
// unitary square roots, conjugacy witnesses and the Morita reduction maps.

#include <optional>
#include <string>
#include <vector>

#include "tenfold/algebra.hpp"
#include "tenfold/clifford.hpp"

namespace tenfold {

enum class Structure { Real, RealStar, Grading, GradingStar };

// A structure map xi attached to an algebra.
struct StructureMap {
  const GradedRealAlgebra* algebra = nullptr;
  Structure kind = Structure::Real;
  Mat operator()(const Mat& a) const;
  bool linear() const { return kind == Structure::Grading || kind == Structure::RealStar; }
};

// u * xi(u).
Mat phi(const StructureMap& xi, const Mat& u, double tol = kTolAlg);

struct SignPair {
  int eta1 = 1;  // parity Theta conj(Theta)
  int eta2 = 1;  // homogeneity Gamma Theta Gamma Theta^dagger
  bool operator==(const SignPair&) const = default;
  std::string str() const;
};

SignPair relative_signs(const GradedRealAlgebra& algebra, const Mat& theta);

// v with v^2 = u. Eigenphases are reduced mod pi; the branch cut is placed in
// the middle of the widest gap (ties: smallest midpoint), on the side of the
// circle nearest -1. Optional xi must be linear and fix u; it then fixes v.
Mat sqrt_unitary(const Mat& u, std::optional<StructureMap> xi = std::nullopt,
                 double tol_gap = kTolGap, double tol = kTolAlg);

struct OrderTwoReport {
  Structure xi = Structure::Real;
  bool order_two_predicted = false;   // phi_xi(u) scalar
  bool order_two_direct = false;      // xi'^2 = id on a spanning set
  bool commute_predicted = false;     // phi_{xi*}(u) scalar
  bool commute_direct = false;        // xi' xi = xi xi' on a spanning set
  bool commute_by_square = false;     // u^2 scalar; meaningful when order two
  bool consequences_hold = true;      // u, xi(u) commute; phi invariant; phi_xi = phi_xi'
  bool agree() const;
};

// Diagnoses xi' = Ad_u o xi for an automorphism xi (Real or Grading).
OrderTwoReport order_two_check(const GradedRealAlgebra& algebra, const Mat& u,
                               Structure xi = Structure::Real, double tol = kTolAlg);

// Unit multiple w of Theta with R(w) = w for R = Ad_Theta o conj.
Mat invariant_generator(const GradedRealAlgebra& algebra, const Mat& theta,
                        double tol = kTolAlg);

struct ConjugacyResult {
  SignPair eta;
  std::optional<Mat> witness;  // even w with Theta = w conj(w)^dagger
  double residual = 0.0;       // intertwining residual on a spanning set
  bool obstructed() const { return !witness.has_value(); }
  std::string tag() const;
};

ConjugacyResult inner_conjugacy_witness(const GradedRealAlgebra& algebra, const Mat& theta,
                                        double tol = kTolAlg);

// Max over a spanning set of || w^dagger R(w a w^dagger) w - conj(a) ||.
double intertwining_residual(const GradedRealAlgebra& algebra, const Mat& theta, const Mat& w);

struct MoritaReport {
  std::string real_case;      // "complex", "3+" or "3-"
  IsoCertificate psi_doubled;  // Psi_e on M_2(A)
  IsoCertificate unitary_u;    // U(Gamma (x) sigma_z)U^dagger = 1 (x) sigma_z, plus 2+/2-
  IsoCertificate psi_reduced;  // psi_e: A -> M_2(A_{++})
  Mat U;
  Mat W;                       // psi_e = Ad_{W^dagger}
  int plus_dimension = 0;
  std::string real_subalgebra;
  bool passed() const {
    return psi_doubled.passed() && unitary_u.passed() && psi_reduced.passed();
  }
};

MoritaReport morita_psi_e(const GradedRealAlgebra& algebra, const Mat& e, double tol = kTolAlg);

// The map b1 (x)^ b2 -> b1 Gamma^{|b2|} (x) b2 intertwines the real
// structures: checked on all monomial pairs of two Clifford models.
// With swap_rule the wrong rule for the grading type is used (for tests).
IsoCertificate certify_inner_grading_rule(const CliffordRep& left, const CliffordRep& right,
                                          bool swap_rule = false, double tol = kTolAlg);

}  // namespace tenfold
