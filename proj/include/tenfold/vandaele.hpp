#pragma once
// Odd self-adjoint unitaries, spectral flattening, rotation homotopies, the
// compression map Q_e and degree-wise unitary representatives.

#include <string>
#include <vector>

#include "tenfold/algebra.hpp"

namespace tenfold {

struct GapError : std::runtime_error {
  GapError(const std::string& where, double eigenvalue)
      : std::runtime_error("gap failure at " + where + ": |eigenvalue| = " + std::to_string(eigenvalue)),
        location(where),
        value(eigenvalue) {}
  std::string location;
  double value;
};

struct OSU {
  Mat x;
  GradedRealAlgebra algebra;
  std::vector<Check> checks;
};

// Validates x = x^dagger = x^{-1}, gamma(x) = -x and R(x) = x when R exists.
OSU make_osu(const GradedRealAlgebra& algebra, const Mat& x, double tol = kTolAlg);

// sgn(h); throws GapError when min |eigenvalue| <= tol_gap.
Mat flatten(const Mat& h, double tol_gap = kTolGap, const std::string& where = "matrix");

// Lower bound of the gap along (1-t) h + t sgn(h), sampled.
double linear_path_gap(const Mat& h, int samples = 32);

struct HomotopyWitness {
  Mat start;
  Mat quarter;  // endpoint of the quarter turn, equals e2
  Mat end;      // endpoint of the half turn, equals -e1
  int samples = 64;
  double max_residual = 0.0;  // worst OSU residual over the samples
  bool valid(double tol = kTolAlg) const { return max_residual < tol; }
};

// w(t) = cos(t) e1 + sin(t) e2 for t in [0, pi].
HomotopyWitness rotation_homotopy(const OSU& e1, const OSU& e2, int samples = 64,
                                  double tol = kTolAlg);

// Pi_+ e h Pi_+ written in an orthonormal basis of the +1 eigenspace.
Mat q_map(const GradedRealAlgebra& algebra, const Mat& h, const Mat& e, double tol = 1e-8);

// Default basepoint: the odd self-adjoint unitary exchanging the two
// eigenspaces of Gamma through their eigenbases.
Mat default_basepoint(const Mat& gamma);

struct BLRepresentative {
  int degree = 0;
  Mat element;
  std::string condition;
  double residual = 0.0;
};

// Degree-wise condition (R^h = R (x) Ad_{i sigma_y} o conj on M_2(A)):
//   0: u* = u, R(u) = u        1: R(U) = U        2: u* = u, R(u) = -u
//   3: R(U) = -U*              4: u* = u, R^h(u) = u
//   5: R^h(U) = U              6: u* = u, R^h(u) = -u   7: R(U) = U*
// Degrees 4-6 take elements of M_{2m}(A) laid out as M_m (x) M_2 (x) A.
// Throws PreconditionError naming the violated condition.
BLRepresentative bl_representative(int degree, const Mat& u, const GradedRealAlgebra& algebra,
                                   double tol = kTolAlg);

}  // namespace tenfold
