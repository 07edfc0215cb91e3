#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/LU>

#include "respole/geometry.hpp"
#include "respole/mie.hpp"
#include "respole/types.hpp"

namespace respole {

/// Incident plane wave e^{i k_bg (cos a, sin a) . r} of unit amplitude.
struct PlaneWave {
  double angle = 0.0;  // propagation direction, radians
};

/// Self-consistent multiple-scattering solution at one wavenumber: local
/// incident (regular) coefficients a_j, outgoing coefficients b_j and
/// interior coefficients c_j per cylinder, orders -m_cyl..m_cyl.
struct LocalSolution {
  Complex k{};
  Polarization polarization = Polarization::EParallel;
  int m_cyl = 0;
  std::vector<Cylinder> cylinders;
  std::optional<PlaneWave> incident_wave;  // closed form for field rendering
  std::vector<VectorXcd> incident;         // a_j
  std::vector<VectorXcd> outgoing;         // b_j
  std::vector<VectorXcd> interior;         // c_j
  double residual = 0.0;                   // ||(I - D H) b - D a|| / ||D a||

  int block_size() const { return 2 * m_cyl + 1; }
};

/// Truncation orders: per-cylinder multipole order and global Fourier order.
struct Truncation {
  int m_cyl = 4;
  int l_glob = 8;
};

/// Wiscombe-style defaults: m_cyl = max(4, ceil(x + 4 x^{1/3}) + 2) with
/// x = |k| max_radius, l_glob = ceil(|k| R_circ) + 8 with R_circ the
/// circumscribing radius max(|c_j| + r_j).
Truncation default_truncation(Complex k, std::span<const Cylinder> cylinders);

/// Assembled coupled system (I - D H) b = D a at a fixed wavenumber, with the
/// LU factorization cached so many right-hand sides reuse one assembly.
/// D is the block diagonal of per-cylinder Mie responses and H carries the
/// outgoing-to-regular couplings between distinct cylinders.
class FoldyLaxSystem {
 public:
  FoldyLaxSystem(Complex k, std::vector<Cylinder> cylinders, Polarization pol, int m_cyl);

  Complex k() const { return k_; }
  Complex k_background() const { return k_bg_; }
  Polarization polarization() const { return pol_; }
  int m_cyl() const { return m_cyl_; }
  int block_size() const { return 2 * m_cyl_ + 1; }
  Eigen::Index dimension() const { return matrix_.rows(); }
  std::size_t cylinder_count() const { return cylinders_.size(); }
  const std::vector<Cylinder>& cylinders() const { return cylinders_; }
  const std::vector<MieCoefficients>& mie() const { return mie_; }
  const MatrixXcd& matrix() const { return matrix_; }      // I - D H
  const MatrixXcd& coupling() const { return coupling_; }  // H

  /// Solves for stacked outgoing coefficients given stacked incident
  /// coefficients (one column per excitation). A single refinement pass is
  /// applied when the raw residual misses 1e-12 relative.
  MatrixXcd solve_stacked(const MatrixXcd& incident_stacked, double* residual = nullptr) const;

  LocalSolution solve(const std::vector<VectorXcd>& incident,
                      std::optional<PlaneWave> wave = std::nullopt) const;

  VectorXcd stack(const std::vector<VectorXcd>& per_cylinder) const;
  std::vector<VectorXcd> unstack(const VectorXcd& stacked) const;

 private:
  Complex k_{};
  Complex k_bg_{};
  Polarization pol_ = Polarization::EParallel;
  int m_cyl_ = 0;
  std::vector<Cylinder> cylinders_;
  std::vector<MieCoefficients> mie_;
  MatrixXcd coupling_;
  MatrixXcd matrix_;
  Eigen::PartialPivLU<MatrixXcd> lu_;
};

/// Regular expansion coefficients of a unit plane wave about each cylinder
/// center: a_j[n] = e^{i k_bg d . c_j} i^n e^{-i n angle}.
std::vector<VectorXcd> plane_wave_local_coeffs(Complex k, double angle,
                                               std::span<const Cylinder> cylinders, int m_cyl);

/// Convenience wrapper: assemble, excite with a plane wave, solve.
LocalSolution solve_plane_wave(Complex k, std::span<const Cylinder> cylinders, Polarization pol,
                               int m_cyl, double angle);

}  // namespace respole
