#include "torsionlab/oracle.hpp"

#include <cmath>
#include <string>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "torsionlab/error.hpp"

namespace torsionlab {

namespace {

struct Lattice {
  int nx;
  int ny;
  double hx;
  double hy;
};

Lattice lattice_for(const Shape& shape, int N) {
  if (shape.is_triangle()) {
    const double h = shape.length().value() / N;
    return {N, N, h, h};
  }
  const double l = shape.length().value();
  const double h = shape.height().value();
  const double shortest = std::min(l, h);
  const int nx = std::max(1, static_cast<int>(std::lround(N * l / shortest)));
  const int ny = std::max(1, static_cast<int>(std::lround(N * h / shortest)));
  return {nx, ny, l / nx, h / ny};
}

}  // namespace

bool GridField::is_unknown(int i, int j) const {
  if (i <= 0 || j <= 0 || i >= nx || j >= ny) return false;
  return shape.is_rectangle() || i + j < N;
}

std::size_t GridField::unknowns() const {
  std::size_t n = 0;
  for (int j = 1; j < ny; ++j) {
    for (int i = 1; i < nx; ++i) n += is_unknown(i, j) ? 1 : 0;
  }
  return n;
}

GridField poisson_solve(const Shape& shape, int N) {
  if (N < 8) throw InvalidArgument("poisson_solve requires N >= 8");
  const Lattice lat = lattice_for(shape, N);
  GridField field{shape, N, lat.nx, lat.ny, lat.hx, lat.hy, {}, 0.0};
  field.values.assign(static_cast<std::size_t>(lat.nx + 1) * (lat.ny + 1), 0.0);

  // Unknown numbering follows the fixed (j, i) sweep.
  std::vector<int> index(field.values.size(), -1);
  int n = 0;
  for (int j = 1; j < lat.ny; ++j) {
    for (int i = 1; i < lat.nx; ++i) {
      if (field.is_unknown(i, j)) index[static_cast<std::size_t>(j) * (lat.nx + 1) + i] = n++;
    }
  }
  if (n == 0) throw InvalidArgument("grid has no interior nodes");

  const double cx = 1.0 / (lat.hx * lat.hx);
  const double cy = 1.0 / (lat.hy * lat.hy);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n) * 5);
  auto id = [&](int i, int j) { return index[static_cast<std::size_t>(j) * (lat.nx + 1) + i]; };
  for (int j = 1; j < lat.ny; ++j) {
    for (int i = 1; i < lat.nx; ++i) {
      const int row = id(i, j);
      if (row < 0) continue;
      triplets.emplace_back(row, row, 2.0 * cx + 2.0 * cy);
      const int nbrs[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
      for (int d = 0; d < 4; ++d) {
        const int col = id(nbrs[d][0], nbrs[d][1]);
        if (col >= 0) triplets.emplace_back(row, col, d < 2 ? -cx : -cy);
      }
    }
  }
  Eigen::SparseMatrix<double> a(n, n);
  a.setFromTriplets(triplets.begin(), triplets.end());
  const Eigen::VectorXd b = Eigen::VectorXd::Ones(n);

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(a);
  if (solver.info() != Eigen::Success) {
    throw NumericFailure("sparse factorization failed for " + shape.literal());
  }
  Eigen::VectorXd u = solver.solve(b);
  Eigen::VectorXd r = b - a * u;
  // Iterative refinement if the direct solve lands above the tolerance.
  for (int pass = 0; pass < 3 && r.norm() > kSolverTolerance * b.norm(); ++pass) {
    u += solver.solve(r);
    r = b - a * u;
  }
  field.residual_norm = r.norm() / b.norm();
  if (!(field.residual_norm <= kSolverTolerance)) {
    throw NumericFailure("Poisson solve for " + shape.literal() + " at N=" + std::to_string(N) +
                         " did not reach the residual tolerance");
  }

  for (int j = 1; j < lat.ny; ++j) {
    for (int i = 1; i < lat.nx; ++i) {
      const int k = id(i, j);
      if (k >= 0) field.values[static_cast<std::size_t>(j) * (lat.nx + 1) + i] = u[k];
    }
  }
  return field;
}

double torsion_fdm(const GridField& field) {
  double sum = 0.0;
  for (double v : field.values) sum += v;
  return field.hx * field.hy * sum;
}

double torsion_fdm(const Shape& shape, int N) { return torsion_fdm(poisson_solve(shape, N)); }

double max_shared_difference(const GridField& coarse, const GridField& fine) {
  if (fine.nx != 2 * coarse.nx || fine.ny != 2 * coarse.ny) {
    throw InvalidArgument("fine grid must refine the coarse grid by two");
  }
  double worst = 0.0;
  for (int j = 0; j <= coarse.ny; ++j) {
    for (int i = 0; i <= coarse.nx; ++i) {
      worst = std::max(worst, std::abs(coarse.at(i, j) - fine.at(2 * i, 2 * j)));
    }
  }
  return worst;
}

OracleResult torsion_oracle(const Shape& shape, double tol, int start_grid) {
  if (!(tol >= 1e-7)) throw InvalidArgument("oracle tolerance must be at least 1e-7");
  if (start_grid < 8) throw InvalidArgument("oracle start grid must be at least 8");

  OracleResult out;
  int n = start_grid;
  double t_prev = torsion_fdm(shape, n);
  double r_prev = 0.0;
  bool have_extrapolation = false;
  while (2 * n <= kOracleMaxGrid) {
    n *= 2;
    const double t = torsion_fdm(shape, n);
    const double r = (4.0 * t - t_prev) / 3.0;
    out.value = r;
    out.final_grid = n;
    if (have_extrapolation) {
      out.estimated_error = std::abs(r - r_prev);
      if (out.estimated_error < tol) {
        out.converged = true;
        return out;
      }
    } else {
      out.estimated_error = std::abs(r - t);
    }
    have_extrapolation = true;
    r_prev = r;
    t_prev = t;
  }
  out.converged = false;
  return out;
}

}  // namespace torsionlab
