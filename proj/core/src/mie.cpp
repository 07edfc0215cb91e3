#include "respole/mie.hpp"

#include <cmath>

#include "respole/bessel.hpp"
#include "respole/errors.hpp"

namespace respole {

bool MieCoefficients::any_singular() const {
  for (bool b : singular)
    if (b) return true;
  return false;
}

MieCoefficients mie_coefficients(Complex k, const Cylinder& cyl, Polarization pol, int m_cyl) {
  if (m_cyl < 0) throw Error(Errc::invalid_argument, "mie_coefficients: m_cyl must be >= 0");
  if (!(cyl.radius > 0.0)) throw Error(Errc::invalid_argument, "mie_coefficients: radius must be positive");

  const Complex k_bg = k * std::sqrt(cyl.eps_bg);
  const Complex k_in = k * std::sqrt(cyl.eps_rod);
  const Complex x_bg = k_bg * cyl.radius;
  const Complex x_in = k_in * cyl.radius;

  const BesselFamily bg = cyl_bessel_family(m_cyl, x_bg);
  const BesselFamily in = cyl_bessel_family(m_cyl, x_in);

  // derivative weights: k for E-parallel, k/eps for H-parallel
  const Complex w_bg = (pol == Polarization::EParallel) ? k_bg : k_bg / cyl.eps_bg;
  const Complex w_in = (pol == Polarization::EParallel) ? k_in : k_in / cyl.eps_rod;

  MieCoefficients mie;
  mie.k = k;
  mie.m_cyl = m_cyl;
  mie.s.resize(static_cast<std::size_t>(m_cyl) + 1);
  mie.c.resize(static_cast<std::size_t>(m_cyl) + 1);
  mie.singular.assign(static_cast<std::size_t>(m_cyl) + 1, false);

  for (int n = 0; n <= m_cyl; ++n) {
    const std::size_t un = static_cast<std::size_t>(n);
    const Complex num = w_in * in.j_prime[un] * bg.j[un] - w_bg * in.j[un] * bg.j_prime[un];
    const Complex den = w_in * in.j_prime[un] * bg.h1[un] - w_bg * in.j[un] * bg.h1_prime[un];
    if (den == Complex(0.0, 0.0) || !std::isfinite(den.real()) || !std::isfinite(den.imag())) {
      mie.singular[un] = true;
      mie.s[un] = 0.0;
      mie.c[un] = 0.0;
      continue;
    }
    const Complex s = -num / den;
    Complex c;
    if (in.j[un] == Complex(0.0, 0.0)) {
      // interior expansion coefficient undefined at a J zero; flag it
      mie.singular[un] = true;
      c = 0.0;
    } else {
      c = (bg.j[un] + s * bg.h1[un]) / in.j[un];
    }
    mie.s[un] = s;
    mie.c[un] = c;
  }
  return mie;
}

}  // namespace respole
