#pragma once
// Numerical strong invariants of Bloch models: 1D chiral winding, 2D Chern
// number and the 2D time-reversal Z2 index.

#include <optional>
#include <stdexcept>
#include <string>

#include "tenfold/models.hpp"
#include "tenfold/vandaele.hpp"

namespace tenfold {

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantReport {
  std::string kind;  // winding | chern | z2
  int value = 0;
  int grid = 0;            // resolution that produced `value`
  double gap = 0.0;        // minimum |eigenvalue| over that grid
  int check_grid = 0;      // second resolution
  int check_value = 0;
  double rounding_residual = 0.0;
  bool retried = false;    // Chern: base grid was doubled once
  bool converged() const { return value == check_value; }
};

// Default resolutions.
inline constexpr int kWindingGrid = 256;
inline constexpr int kChernGrid = 24;
inline constexpr int kZ2Grid = 128;  // points around k_x; k_y uses grid/2 steps to 1/2

// Winding of det q(k), q = compression of sgn h(k) between the +1 eigenspace
// of the chiral operator and the basepoint e (default: default_basepoint).
// Orientation: q(k) = exp(-2 pi i k) has winding +1.
InvariantReport winding_number(const BlochModel& model, const Mat& chiral, int grid = kWindingGrid,
                               std::optional<Mat> basepoint = std::nullopt, double tol_gap = kTolGap);

// Single-resolution raw value (no rounding) for tests.
double winding_raw(const BlochModel& model, const Mat& chiral, int grid, std::optional<Mat> basepoint = std::nullopt,
                   double tol_gap = kTolGap);

// Chern number of the projection onto negative energies.
InvariantReport chern_number(const BlochModel& model, int grid = kChernGrid, double tol_gap = kTolGap);
double chern_raw(const BlochModel& model, int grid, double tol_gap = kTolGap);

// Fu-Kane Z2 index for an odd time reversal Theta conj(h(-k)) Theta^dagger = h(k).
InvariantReport z2_invariant(const BlochModel& model, const Mat& trs, int grid = kZ2Grid, double tol_gap = kTolGap);
int z2_single(const BlochModel& model, const Mat& trs, int grid, double tol_gap = kTolGap, double* gap = nullptr);

// Compression t_n -> V^dagger t_n V onto an invariant subspace with orthonormal
// basis V; throws if some hopping leaks out of the subspace.
BlochModel block_model(const BlochModel& model, const Mat& v, double tol = kTolAlg);

struct SpinChernReport {
  int chern_up = 0;
  int chern_down = 0;
  int spin_chern() const { return (chern_up - chern_down) / 2; }
  int z2() const { return mod2(spin_chern()); }
  static int mod2(int a) { return ((a % 2) + 2) % 2; }
};

// Chern numbers of the two eigenspaces of a conserved spin operator s_z
// (e.g. sigma_z (x) 1 in spin (x) orbital order).
SpinChernReport spin_chern(const BlochModel& model, const Mat& s_z, int grid = kChernGrid,
                           double tol_gap = kTolGap);

struct DoublingReport {
  int z2_single = 0;
  int z2_doubled = 0;
  int chern_single = 0;   // total Chern number (complex theory)
  int chern_doubled = 0;
  std::optional<int> spin_chern_single;
  std::optional<int> spin_chern_doubled;
  bool doubled_trivial() const { return z2_doubled == 0; }
};

// With s_z given, spin Chern numbers are reported alongside.
DoublingReport mod2_doubling_check(const ModelWithSymmetries& model, std::optional<Mat> s_z = std::nullopt,
                                   int grid = kZ2Grid);

}  // namespace tenfold
