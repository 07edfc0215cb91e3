#pragma once

#include <span>

#include "respole/foldy_lax.hpp"
#include "respole/geometry.hpp"
#include "respole/types.hpp"

namespace respole {

/// Truncated scattering amplitude on the global Fourier-Hankel basis about
/// the origin. S = I + T maps incoming to outgoing coefficients; for lossless
/// media and real k, S is unitary up to truncation. Row/column index m in
/// [-order, order] addresses the outgoing/incoming harmonic e^{i m theta}.
struct TMatrix {
  Complex k{};
  int order = 0;
  MatrixXcd entries;

  Complex at(int n, int m) const { return entries(n + order, m + order); }
  MatrixXcd scattering_matrix() const {
    return MatrixXcd::Identity(entries.rows(), entries.cols()) + entries;
  }
};

/// Assembles T(k): each incoming global harmonic is expanded into local
/// regular waves (regular-to-regular), scattered through the coupled system,
/// and the outgoing local waves are re-expanded about the origin
/// (outgoing-to-outgoing, valid outside the circumscribing disk). The
/// normalization is fixed so that S = I + T, i.e. T doubles the J-to-H map.
TMatrix global_tmatrix(Complex k, std::span<const Cylinder> cylinders, Polarization pol,
                       const Truncation& trunc);

/// Evaluator with truncation frozen at a representative wavenumber so every
/// sample along a contour shares one matrix dimension.
TEval make_tmatrix_evaluator(std::vector<Cylinder> cylinders, Polarization pol, Truncation trunc);

}  // namespace respole
