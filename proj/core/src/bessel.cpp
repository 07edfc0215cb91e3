#include "respole/bessel.hpp"

#include <algorithm>
#include <cmath>

#include "respole/errors.hpp"
#include "respole/linalg.hpp"

namespace respole {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243104;

// Regime split: ascending series below, integral seeds + recurrences above.
constexpr double kSeriesSplit = 11.0;
// Below this modulus the Laguerre representation of K_nu degrades; use the
// Y_0/Y_1 log series and upward recurrence instead.
constexpr double kKernelSplit = 4.0;

Complex series_j(int n, Complex z) {
  const Complex half = 0.5 * z;
  const Complex zz = -half * half;
  Complex term = 1.0;
  Complex sum = term;
  for (int m = 1; m < 300; ++m) {
    term *= zz / static_cast<double>(m * (n + m));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) + 1e-300) break;
  }
  Complex pref = 1.0;
  for (int i = 1; i <= n; ++i) pref *= half / static_cast<double>(i);
  return pref * sum;
}

Complex series_y0(Complex z) {
  const Complex j0 = series_j(0, z);
  const Complex half = 0.5 * z;
  const Complex zz = half * half;
  Complex term = 1.0;
  double harmonic = 0.0;
  Complex sum = 0.0;
  for (int m = 1; m < 300; ++m) {
    term *= zz / static_cast<double>(m * m);
    harmonic += 1.0 / m;
    const Complex contrib = (m % 2 == 1 ? harmonic : -harmonic) * term;
    sum += contrib;
    if (std::abs(term) <= 1e-18 * (std::abs(sum) + 1.0)) break;
  }
  return (2.0 / kPi) * ((std::log(half) + kEulerGamma) * j0 + sum);
}

Complex series_y1(Complex z) {
  const Complex j1 = series_j(1, z);
  const Complex half = 0.5 * z;
  const Complex zz = -half * half;
  const Complex finite = -(1.0 / kPi) / half;
  Complex term = 1.0;  // (-z^2/4)^k / (k! (k+1)!)
  double hk = 0.0, hk1 = 1.0;
  Complex sum = 0.0;
  for (int k = 0; k < 300; ++k) {
    const double psisum = -2.0 * kEulerGamma + hk + hk1;  // psi(k+1) + psi(k+2)
    sum += psisum * term;
    term *= zz / static_cast<double>((k + 1) * (k + 2));
    hk += 1.0 / (k + 1);
    hk1 += 1.0 / (k + 2);
    if (std::abs(term) * (std::abs(psisum) + 2.0) <= 1e-18 * (std::abs(sum) + 1.0)) break;
  }
  return (2.0 / kPi) * std::log(half) * j1 + finite - (1.0 / kPi) * half * sum;
}

// J_n(z) = (1/2pi) int_0^{2pi} exp(i(z sin t - n t)) dt; the trapezoid rule on
// the periodic integrand is spectrally accurate. Only used for the n = 0, 1
// seeds, which stay at envelope magnitude.
Complex trapezoid_j(int n, Complex z) {
  const int count = static_cast<int>(std::ceil(1.85 * std::abs(z))) + 30;
  Complex sum = 0.0;
  for (int i = 0; i < count; ++i) {
    const double t = 2.0 * kPi * i / count;
    sum += std::exp(Complex(0.0, 1.0) * (z * std::sin(t) - static_cast<double>(n) * t));
  }
  return sum / static_cast<double>(count);
}

// K_nu(w) = sqrt(pi/2w) e^{-w} / Gamma(nu+1/2) * int_0^inf e^{-t} t^{nu-1/2}
// (1 + t/2w)^{nu-1/2} dt, nu in {0, 1}. The quadrature handles the t^{-1/2}
// weight; the integrand factor is analytic with nearest branch point at
// t = -2w, so convergence is fast once |2w| is a handful of units.
Complex laguerre_k(int nu, Complex w) {
  const GaussLaguerreHalf& rule = gauss_laguerre_half();
  Complex sum = 0.0;
  const Complex inv2w = 0.5 / w;
  if (nu == 0) {
    for (int i = 0; i < rule.size(); ++i)
      sum += rule.weights[i] / std::sqrt(1.0 + rule.nodes[i] * inv2w);
  } else {
    for (int i = 0; i < rule.size(); ++i)
      sum += rule.weights[i] * rule.nodes[i] * std::sqrt(1.0 + rule.nodes[i] * inv2w);
  }
  const double gamma_nu_half = (nu == 0) ? std::sqrt(kPi) : 0.5 * std::sqrt(kPi);
  return std::sqrt(kPi / (2.0 * w)) * std::exp(-w) / gamma_nu_half * sum;
}

// H^(1)_n(z) = (2/(i pi)) i^{-n} K_n(-i z). The K recurrence
// K_{n+1} = K_{n-1} + (2n/w) K_n runs upward without cancellation, which keeps
// the recessive Hankel content intact even when |J_n| >> |H_n|.
void hankel_by_k(int order_max, Complex z, std::vector<Complex>& h) {
  const Complex w = rotate_m90(z);  // -i z
  std::vector<Complex> kv(static_cast<std::size_t>(order_max) + 1);
  kv[0] = laguerre_k(0, w);
  if (order_max >= 1) kv[1] = laguerre_k(1, w);
  for (int n = 1; n < order_max; ++n)
    kv[n + 1] = kv[n - 1] + (2.0 * n / w) * kv[n];
  // prefactor (2/(i pi)) i^{-n} cycles with period 4; apply exactly.
  for (int n = 0; n <= order_max; ++n) {
    Complex f = kv[n] * (2.0 / kPi);
    switch (n % 4) {
      case 0: f = rotate_m90(f); break;        // 1/i
      case 1: f = -f; break;                   // (1/i)(-i) = -1
      case 2: f = rotate_p90(f); break;        // i
      case 3: break;                           // 1
    }
    h[static_cast<std::size_t>(n)] = f;
  }
}

// Backward (Miller) recurrence for J, normalized against the larger of the
// two integral seeds; J_0 alone is unusable near its zeros.
void miller_j(int order_max, Complex z, std::vector<Complex>& j) {
  const Complex j0 = trapezoid_j(0, z);
  const Complex j1 = trapezoid_j(1, z);
  const int start = std::max(order_max, static_cast<int>(std::ceil(std::abs(z)))) + 40;
  Complex fp = 0.0;
  Complex fc = 1e-280;
  std::vector<Complex> raw(static_cast<std::size_t>(order_max) + 1, Complex(0.0));
  for (int n = start; n >= 1; --n) {
    const Complex fm = (2.0 * n / z) * fc - fp;
    fp = fc;
    fc = fm;
    if (n - 1 <= order_max) raw[static_cast<std::size_t>(n - 1)] = fc;
    if (std::abs(fc) > 1e250) {
      fc *= 1e-250;
      fp *= 1e-250;
      for (auto& v : raw) v *= 1e-250;
    }
  }
  const Complex scale = (std::abs(j0) >= std::abs(j1)) ? j0 / raw[0] : j1 / raw[1];
  for (int n = 0; n <= order_max; ++n) j[static_cast<std::size_t>(n)] = raw[static_cast<std::size_t>(n)] * scale;
}

// Family at canonical argument (Im z >= 0, z != 0).
void family_upper(int order_max, Complex z, std::vector<Complex>& j, std::vector<Complex>& y,
                  std::vector<Complex>& h) {
  const double az = std::abs(z);
  if (az <= kSeriesSplit) {
    for (int n = 0; n <= order_max; ++n) j[static_cast<std::size_t>(n)] = series_j(n, z);
  } else {
    miller_j(order_max, z, j);
  }
  if (az < kKernelSplit) {
    y[0] = series_y0(z);
    if (order_max >= 1) y[1] = series_y1(z);
    for (int n = 1; n < order_max; ++n)
      y[static_cast<std::size_t>(n + 1)] = (2.0 * n / z) * y[static_cast<std::size_t>(n)] - y[static_cast<std::size_t>(n - 1)];
    for (int n = 0; n <= order_max; ++n)
      h[static_cast<std::size_t>(n)] = j[static_cast<std::size_t>(n)] + rotate_p90(y[static_cast<std::size_t>(n)]);
  } else {
    hankel_by_k(order_max, z, h);
    for (int n = 0; n <= order_max; ++n)
      y[static_cast<std::size_t>(n)] = rotate_m90(h[static_cast<std::size_t>(n)] - j[static_cast<std::size_t>(n)]);
  }
}

}  // namespace

BesselFamily cyl_bessel_family(int order_max, Complex z) {
  if (order_max < 0) throw Error(Errc::invalid_argument, "cyl_bessel_family: order_max must be >= 0");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(Errc::invalid_argument, "cyl_bessel_family: non-finite argument");

  BesselFamily fam;
  fam.order_max = order_max;
  fam.argument = z;
  const std::size_t count = static_cast<std::size_t>(order_max) + 1;

  if (z == Complex(0.0, 0.0)) {
    fam.singular_at_origin = true;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    fam.j.assign(count, Complex(0.0));
    fam.j[0] = 1.0;
    fam.j_prime.assign(count, Complex(0.0));
    if (order_max >= 1) fam.j_prime[1] = 0.5;
    fam.y.assign(count, Complex(nan, nan));
    fam.h1.assign(count, Complex(nan, nan));
    fam.y_prime.assign(count, Complex(nan, nan));
    fam.h1_prime.assign(count, Complex(nan, nan));
    return fam;
  }

  // Conjugation symmetry F_n(conj z) = conj F_n(z) holds exactly when the
  // lower half plane is routed through the upper half.
  const bool flip = z.imag() < 0.0;
  const Complex zc = flip ? std::conj(z) : z;

  const int internal_max = std::max(order_max, 1);
  std::vector<Complex> j(static_cast<std::size_t>(internal_max) + 1);
  std::vector<Complex> y(static_cast<std::size_t>(internal_max) + 1);
  std::vector<Complex> h(static_cast<std::size_t>(internal_max) + 1);
  family_upper(internal_max, zc, j, y, h);

  if (flip) {
    for (auto& v : j) v = std::conj(v);
    for (auto& v : y) v = std::conj(v);
    for (auto& v : h) v = std::conj(v);
  }

  fam.j.assign(j.begin(), j.begin() + static_cast<std::ptrdiff_t>(count));
  fam.y.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(count));
  fam.h1.resize(count);
  // Store h1 as literally j + i y so the triple satisfies its defining
  // identity under recomputation.
  for (std::size_t n = 0; n < count; ++n) fam.h1[n] = fam.j[n] + rotate_p90(fam.y[n]);

  fam.j_prime.resize(count);
  fam.y_prime.resize(count);
  fam.h1_prime.resize(count);
  fam.j_prime[0] = -j[1];
  fam.y_prime[0] = -y[1];
  fam.h1_prime[0] = -(j[1] + rotate_p90(y[1]));
  for (int n = 1; n <= order_max; ++n) {
    const Complex ratio = static_cast<double>(n) / z;
    const std::size_t un = static_cast<std::size_t>(n);
    fam.j_prime[un] = fam.j[un - 1] - ratio * fam.j[un];
    fam.y_prime[un] = fam.y[un - 1] - ratio * fam.y[un];
    fam.h1_prime[un] = fam.h1[un - 1] - ratio * fam.h1[un];
  }
  return fam;
}

}  // namespace respole
