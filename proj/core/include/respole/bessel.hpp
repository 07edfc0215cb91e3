#pragma once

#include <cmath>
#include <vector>

#include "respole/types.hpp"

namespace respole {

/// Cylinder-harmonic function family J_n, Y_n, H^(1)_n and derivatives for
/// integer orders 0..order_max at one complex argument.
///
/// Negative orders follow from F_{-n} = (-1)^n F_n; use the *_at accessors.
/// Target accuracy is 1e-10 relative to max(|J_n|, |Y_n|) for |z| <= 60,
/// |Im z| <= 20, orders <= 50.
struct BesselFamily {
  int order_max = 0;
  Complex argument{};
  bool singular_at_origin = false;  // z == 0: y/h1 and their derivatives are invalid

  std::vector<Complex> j, y, h1;                    // values, index n = 0..order_max
  std::vector<Complex> j_prime, y_prime, h1_prime;  // d/dz

  Complex j_at(int n) const { return signed_at(j, n); }
  Complex y_at(int n) const { return signed_at(y, n); }
  Complex h1_at(int n) const { return signed_at(h1, n); }
  Complex j_prime_at(int n) const { return signed_at(j_prime, n); }
  Complex y_prime_at(int n) const { return signed_at(y_prime, n); }
  Complex h1_prime_at(int n) const { return signed_at(h1_prime, n); }

 private:
  Complex signed_at(const std::vector<Complex>& f, int n) const {
    const Complex v = f[static_cast<std::size_t>(std::abs(n))];
    return (n >= 0 || std::abs(n) % 2 == 0) ? v : -v;
  }
};

/// Computes the full family at complex z.
///
/// z == 0 returns J = (1, 0, ...) with the Y/H entries flagged singular.
/// Non-finite z raises Errc::invalid_argument.
BesselFamily cyl_bessel_family(int order_max, Complex z);

}  // namespace respole
