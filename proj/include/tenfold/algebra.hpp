#pragma once
// Finite graded matrix algebras with an optional real structure, and the
// certificate record every constructive isomorphism check produces.

#include <optional>
#include <string>
#include <vector>

#include "tenfold/linalg.hpp"

namespace tenfold {

// A (sub)algebra of M_n with grading Ad_Gamma and real structure
// R(a) = Theta conj(a) Theta^dagger. An empty `generators` list means all of
// M_n; otherwise the algebra is the unital span generated by the list.
struct GradedRealAlgebra {
  int n = 1;
  std::optional<Mat> grading;  // nullopt = trivial grading
  std::optional<Mat> theta;    // nullopt = complex algebra, no R
  std::vector<Mat> generators;

  static GradedRealAlgebra full(int n, std::optional<Mat> grading = std::nullopt,
                                std::optional<Mat> theta = std::nullopt);

  Mat gamma_op() const;  // Gamma, or the identity when trivial
  bool has_real() const { return theta.has_value(); }
  bool is_reference() const;  // Theta == 1

  Mat grade(const Mat& a) const;       // gamma(a)
  Mat real(const Mat& a) const;        // R(a); requires theta
  Mat real_star(const Mat& a) const;   // R(a^dagger)

  // Complex dimension; equals the real dimension of the R-fixed part.
  int dimension() const;
  // Spanning set of the algebra (matrix units or generated products).
  std::vector<Mat> spanning_set() const;

  // Throws PreconditionError when a structural invariant fails.
  void validate(double tol = kTolAlg) const;
};

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = kTolAlg;
  bool passed() const { return residual < tolerance; }
};

struct IsoCertificate {
  std::string source;
  std::string target;
  std::vector<Mat> generator_images;
  std::vector<Check> checks;

  bool passed() const;
  double max_residual() const;  // over the numeric relation checks
  std::vector<std::string> failures() const;
  void add(std::string name, double residual, double tol = kTolAlg);
  void add_count(std::string name, int got, int expected);
};

}  // namespace tenfold
