#pragma once

#include <cstdlib>
#include <vector>

#include "respole/geometry.hpp"
#include "respole/types.hpp"

namespace respole {

/// Per-harmonic scattering response of one cylinder: outgoing/incident ratio
/// s_n and interior/incident ratio c_n, with s_{-n} = s_n, c_{-n} = c_n.
struct MieCoefficients {
  Complex k{};
  int m_cyl = 0;
  std::vector<Complex> s;          // index |n| = 0..m_cyl
  std::vector<Complex> c;
  std::vector<bool> singular;      // boundary system singular at this order

  Complex s_at(int n) const { return s[static_cast<std::size_t>(std::abs(n))]; }
  Complex c_at(int n) const { return c[static_cast<std::size_t>(std::abs(n))]; }
  bool singular_at(int n) const { return singular[static_cast<std::size_t>(std::abs(n))]; }
  bool any_singular() const;
};

/// Solves the 2x2 boundary continuity system per harmonic. E-parallel matches
/// the field and its radial derivative; H-parallel weights the derivative by
/// 1/eps. For a lossless rod, |1 + 2 s_n| = 1.
MieCoefficients mie_coefficients(Complex k, const Cylinder& cyl, Polarization pol, int m_cyl);

}  // namespace respole
