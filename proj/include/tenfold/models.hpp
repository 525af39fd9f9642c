#pragma once
// Tight-binding Bloch models h(k) = sum_n t_n exp(2 pi i n.k), k in [0,1)^d.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tenfold/linalg.hpp"

namespace tenfold {

using Lattice = std::vector<int>;
using Momentum = std::vector<double>;

class BlochModel {
 public:
  BlochModel(std::string name, int d, int N);

  // Stores t at n and t^dagger at -n. For n = 0, t must be Hermitian.
  void add_hopping(const Lattice& n, const Mat& t);

  const std::string& name() const { return name_; }
  int d() const { return d_; }
  int N() const { return N_; }
  const std::map<Lattice, Mat>& hoppings() const { return hops_; }
  int support_radius() const;

  std::map<std::string, double> parameters;
  std::map<std::string, std::string> notes;

 private:
  std::string name_;
  int d_;
  int N_;
  std::map<Lattice, Mat> hops_;
};

// Antiunitary operators act as Theta conj(h(-k)) Theta^dagger.
struct SymmetrySpec {
  std::optional<Mat> chiral;
  std::optional<Mat> trs;
  std::optional<Mat> phs;
};

struct ModelWithSymmetries {
  BlochModel model;
  SymmetrySpec symmetries;
};

Mat evaluate(const BlochModel& model, const Momentum& k);

// Grid points j/grid in every direction, row-major with the last index fastest.
std::vector<Momentum> grid_points(int d, int grid);

struct GapResult {
  double gap = 0.0;
  Momentum k;
};
GapResult gap(const BlochModel& model, int grid);

ModelWithSymmetries build_ssh(double v, double w);
ModelWithSymmetries build_qwz(double m);
ModelWithSymmetries build_haldane(double t1, double t2, double phi, double m);
ModelWithSymmetries build_kane_mele(double t, double lambda_so, double lambda_r, double m);
// Constant model h(k) = h0 on a d-dimensional lattice.
ModelWithSymmetries build_onsite(const Mat& h0, int d = 1, const std::string& name = "onsite");

struct SymmetryReport {
  std::optional<double> chiral_residual;
  std::optional<double> trs_residual;
  std::optional<double> phs_residual;
  std::optional<int> trs_parity;        // Theta_T conj(Theta_T)
  std::optional<int> phs_parity;        // Theta_P conj(Theta_P)
  std::optional<int> grading_reality;   // Theta_T conj(Gamma) Theta_T^dagger Gamma
  std::optional<int> phs_grading_reality;
  std::optional<double> product_residual;  // Ad_{Theta_P} vs Ad_{Gamma Theta_T}
  // Chiral operator implied by declared TRS and PHS without a declared one:
  // Theta_P conj(Theta_T), phase-fixed to square to 1.
  std::optional<Mat> implied_chiral;
  std::vector<std::string> problems;    // failures of the operator relations
  int grid = 0;
  bool consistent(double tol = kTolAlg) const;
};

SymmetryReport verify_symmetries(const BlochModel& model, const SymmetrySpec& spec, int grid,
                                 double tol = kTolAlg);

// Block-diagonal sum with symmetry operators summed blockwise.
ModelWithSymmetries direct_sum(const ModelWithSymmetries& a, const ModelWithSymmetries& b);

// t_n -> f(t_n) applied to every stored hopping (f must respect adjoints).
BlochModel transform(const BlochModel& model, const std::function<Mat(const Mat&)>& f,
                     const std::string& name);

// t_n -> conj(t_n); realizes h(k) -> conj(h(-k)).
BlochModel conjugate_model(const BlochModel& model);

// Spin blocks [[h1, R],[R^dagger, h2]] of a four-band model in spin (x) sublattice
// order: max over the grid of || conj h1(-k) - h2(k) || and || conj R(-k) + R(k)^dagger ||.
struct SpinBlockResiduals {
  double h_blocks = 0.0;
  double r_block = 0.0;
};
SpinBlockResiduals spin_block_residuals(const BlochModel& model, int grid);

}  // namespace tenfold
