#pragma once

#include <complex>
#include <functional>

#include <Eigen/Core>

namespace respole {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Evaluates the truncated scattering operator at a complex wavenumber.
/// All matrices returned by one evaluator must share the same dimension.
using TEval = std::function<MatrixXcd(Complex)>;

/// Multiply by +i / -i without rounding (exact component rotation).
inline Complex rotate_p90(Complex c) { return {-c.imag(), c.real()}; }
inline Complex rotate_m90(Complex c) { return {c.imag(), -c.real()}; }

}  // namespace respole
