#include "respole/linalg.hpp"

#include <cmath>
#include <mutex>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "respole/errors.hpp"

namespace respole {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "gauss_legendre: n must be >= 1");
  GaussLegendre rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // one polishing pass so dp matches the converged node
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

const GaussLaguerreHalf& gauss_laguerre_half() {
  static GaussLaguerreHalf rule;
  static std::once_flag once;
  std::call_once(once, [] {
    constexpr int n = 64;
    constexpr double alpha = -0.5;
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) jac(k, k) = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) {
      const double b = std::sqrt(k * (k + alpha));
      jac(k - 1, k) = b;
      jac(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    const double mu0 = std::sqrt(kPi);  // Gamma(1/2)
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < n; ++k) {
      rule.nodes[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
      const double v0 = es.eigenvectors()(0, k);
      rule.weights[static_cast<std::size_t>(k)] = mu0 * v0 * v0;
    }
  });
  return rule;
}

namespace {

VectorXcd start_vector(Eigen::Index dim, int attempt) {
  VectorXcd v(dim);
  switch (attempt) {
    case 0:
      v.setOnes();
      break;
    case 1:
      for (Eigen::Index i = 0; i < dim; ++i) v(i) = (i % 2 == 0) ? 1.0 : -1.0;
      break;
    default:
      for (Eigen::Index i = 0; i < dim; ++i) v(i) = 1.0 + static_cast<double>(i);
      break;
  }
  v /= v.norm();
  return v;
}

}  // namespace

PowerIterationResult dominant_eigenpair(const MatrixXcd& a, double tol, int max_iter, int restarts) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw Error(Errc::invalid_argument, "dominant_eigenpair: square nonempty matrix required");
  PowerIterationResult result;
  for (int attempt = 0; attempt <= restarts; ++attempt) {
    VectorXcd v = start_vector(a.rows(), attempt);
    for (int it = 1; it <= max_iter; ++it) {
      const VectorXcd w = a * v;
      const double wn = w.norm();
      if (!(wn > 0.0)) {
        // zero (or annihilated) vector: eigenvalue 0 with this start
        result.eigenvalue = 0.0;
        result.eigenvector = v;
        result.iterations = it;
        result.converged = true;
        return result;
      }
      const Complex lambda = v.dot(w);  // Rayleigh quotient, ||v|| = 1
      const double resid = (w - lambda * v).norm() / wn;
      v = w / wn;
      if (resid <= tol) {
        result.eigenvalue = lambda;
        result.eigenvector = v;
        result.iterations = it;
        result.converged = true;
        return result;
      }
      result.eigenvalue = lambda;
      result.eigenvector = v;
      result.iterations = it;
    }
  }
  result.converged = false;
  return result;
}

void normalize_phase(VectorXcd& v) {
  const double norm = v.norm();
  if (!(norm > 0.0)) return;
  v /= norm;
  const double peak = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8 * peak) {
      const Complex phase = v(i) / std::abs(v(i));
      v *= std::conj(phase);
      break;
    }
  }
}

ExtremalSingular extremal_singular_pair(const MatrixXcd& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw Error(Errc::invalid_argument, "extremal_singular_pair: square nonempty matrix required");
  const Eigen::Index dim = a.rows();
  ExtremalSingular out;

  // sigma_max via power iteration on A^H A
  {
    VectorXcd v = start_vector(dim, 0);
    double sigma = 0.0;
    for (int it = 0; it < 300; ++it) {
      VectorXcd w = a.adjoint() * (a * v);
      const double wn = w.norm();
      if (!(wn > 0.0)) break;
      const double next = std::sqrt(wn);
      v = w / wn;
      if (it > 2 && std::abs(next - sigma) <= 1e-12 * next) {
        sigma = next;
        break;
      }
      sigma = next;
    }
    out.sigma_max = sigma;
  }

  // sigma_min and right singular vector via inverse iteration with the LU of A:
  // power iteration on (A^H A)^{-1} = A^{-1} A^{-H}.
  {
    Eigen::PartialPivLU<MatrixXcd> lu(a);
    VectorXcd v = start_vector(dim, 0);
    double lambda = 0.0;
    for (int it = 0; it < 300; ++it) {
      VectorXcd u = lu.adjoint().solve(v);
      VectorXcd w = lu.solve(u);
      const double wn = w.norm();
      if (!(wn > 0.0) || !std::isfinite(wn)) {
        // exactly singular: sigma_min = 0, direction from the last iterate
        out.sigma_min = 0.0;
        normalize_phase(v);
        out.right_vector = v;
        return out;
      }
      const double next = wn;  // ||B v|| with ||v||=1 approximates lambda_max(B)
      v = w / wn;
      if (it > 2 && std::abs(next - lambda) <= 1e-12 * next) {
        lambda = next;
        break;
      }
      lambda = next;
    }
    out.sigma_min = (lambda > 0.0) ? 1.0 / std::sqrt(lambda) : 0.0;
    normalize_phase(v);
    out.right_vector = v;
  }
  return out;
}

}  // namespace respole
