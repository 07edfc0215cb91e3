#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "respole/types.hpp"

namespace respole {

enum class Polarization { EParallel, HParallel };

/// One homogeneous dielectric rod. Sign convention e^{-i omega t}: passive
/// media have Im(eps) >= 0 and resonance poles sit in the lower half k-plane.
struct Cylinder {
  Vec2 center{0.0, 0.0};
  double radius = 0.0;
  Complex eps_rod{1.0, 0.0};
  Complex eps_bg{1.0, 0.0};
};

/// Declarative description of a rectangular rod lattice with removals.
struct CrystalSpec {
  int nx = 1;
  int ny = 1;
  double pitch = 1.0;
  double radius = 0.3;
  Complex eps_rod{9.0, 0.0};
  Complex eps_bg{1.0, 0.0};
  std::vector<std::pair<int, int>> removed;  // (i, j) site indices
  Polarization polarization = Polarization::EParallel;
};

/// Builds the rod collection, centered at the origin; site (i, j) maps to
/// ((i - (nx-1)/2) * pitch, (j - (ny-1)/2) * pitch). Output is ordered
/// row-major by (j, i). Out-of-range or duplicate removals raise
/// Errc::configuration.
std::vector<Cylinder> build_crystal(const CrystalSpec& spec);

struct GeometryFinding {
  enum class Severity { Error, Warning };
  Severity severity;
  std::size_t first = 0, second = 0;  // cylinder indices
  double distance = 0.0;
  std::string message;
};

struct GeometryReport {
  std::vector<GeometryFinding> findings;
  bool ok() const {
    for (const auto& f : findings)
      if (f.severity == GeometryFinding::Severity::Error) return false;
    return true;
  }
};

/// Flags overlapping pairs as errors and touching pairs (separation within
/// 1e-9 relative of the radii sum) as warnings; touching rods make the
/// translation re-expansions marginal but are not rejected.
GeometryReport validate_geometry(std::span<const Cylinder> cylinders);

}  // namespace respole
