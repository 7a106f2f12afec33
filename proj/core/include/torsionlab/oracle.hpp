#pragma once

#include <vector>

#include "torsionlab/geometry.hpp"

namespace torsionlab {

/// Five-point finite-difference solution of -Laplace(u) = 1 with u = 0 on
/// the boundary.
///
/// `values` holds every node of the (nx+1) x (ny+1) lattice, row-major in y,
/// with zeros on the boundary and (for triangles) beyond the hypotenuse.
struct GridField {
  Shape shape;
  int N = 0;
  int nx = 0;
  int ny = 0;
  double hx = 0.0;
  double hy = 0.0;
  std::vector<double> values;
  double residual_norm = 0.0;  // ||b - A u|| / ||b||

  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * (nx + 1) + i]; }
  bool is_unknown(int i, int j) const;
  std::size_t unknowns() const;
};

inline constexpr double kSolverTolerance = 1e-10;
inline constexpr int kOracleMaxGrid = 4096;

/// N >= 8 cells along the shorter rectangle side (the longer side gets the
/// proportional count) or along the triangle leg, where the nodes with
/// i + j = N lie exactly on the hypotenuse.
GridField poisson_solve(const Shape& shape, int N);

/// hx hy times the sum of nodal values.
double torsion_fdm(const GridField& field);
double torsion_fdm(const Shape& shape, int N);

/// Largest |coarse - fine| over nodes the two grids share (fine has 2N).
double max_shared_difference(const GridField& coarse, const GridField& fine);

struct OracleResult {
  double value = 0.0;
  double estimated_error = 0.0;
  int final_grid = 0;
  bool converged = false;
};

/// Doubles N from `start_grid`, forming (4 T_2N - T_N) / 3 at each step
/// until successive extrapolations differ by less than tol. Reports the best
/// estimate with converged = false once the grid would exceed kOracleMaxGrid.
OracleResult torsion_oracle(const Shape& shape, double tol, int start_grid = 16);

}  // namespace torsionlab
