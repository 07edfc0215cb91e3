#pragma once

#include <utility>
#include <vector>

#include "respole/types.hpp"

namespace respole {

/// Gauss-Legendre rule on [-1, 1], computed by Newton iteration on the
/// Legendre recurrence. Deterministic for a given n.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Generalized Gauss-Laguerre rule for the weight t^{-1/2} e^{-t} on [0, inf),
/// fixed 64 nodes, built once via Golub-Welsch.
struct GaussLaguerreHalf {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};
const GaussLaguerreHalf& gauss_laguerre_half();

/// Power iteration for the largest-modulus eigenvalue. Start vector is
/// all-ones normalized; `restarts` deterministic alternative starts are tried
/// if the iteration stagnates (e.g. between two eigenvalues of equal modulus).
struct PowerIterationResult {
  Complex eigenvalue{};
  VectorXcd eigenvector;
  int iterations = 0;
  bool converged = false;
};
PowerIterationResult dominant_eigenpair(const MatrixXcd& a, double tol = 1e-13,
                                        int max_iter = 500, int restarts = 0);

/// Extremal singular pair of a square matrix: sigma_min with its right
/// singular vector (by inverse iteration through an LU factorization) and
/// sigma_max (by power iteration on A^H A).
struct ExtremalSingular {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  VectorXcd right_vector;  // unit norm, first significant entry real positive
};
ExtremalSingular extremal_singular_pair(const MatrixXcd& a);

/// Rotates a vector so its first entry above 1e-8 * max|v_i| is real positive
/// and scales it to unit norm. Fixes the phase/scale ambiguity deterministically.
void normalize_phase(VectorXcd& v);

}  // namespace respole
