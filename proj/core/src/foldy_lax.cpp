#include "respole/foldy_lax.hpp"

#include <cmath>
#include <sstream>

#include "respole/errors.hpp"
#include "respole/translation.hpp"

namespace respole {

Truncation default_truncation(Complex k, std::span<const Cylinder> cylinders) {
  double r_max = 0.0;
  double r_circ = 0.0;
  for (const auto& c : cylinders) {
    r_max = std::max(r_max, c.radius);
    r_circ = std::max(r_circ, c.center.norm() + c.radius);
  }
  const double x = std::abs(k) * r_max;
  Truncation t;
  t.m_cyl = std::max(4, static_cast<int>(std::ceil(x + 4.0 * std::cbrt(x))) + 2);
  t.l_glob = static_cast<int>(std::ceil(std::abs(k) * r_circ)) + 8;
  return t;
}

FoldyLaxSystem::FoldyLaxSystem(Complex k, std::vector<Cylinder> cylinders, Polarization pol, int m_cyl)
    : k_(k), pol_(pol), m_cyl_(m_cyl), cylinders_(std::move(cylinders)) {
  if (m_cyl_ < 1) throw Error(Errc::invalid_argument, "FoldyLaxSystem: m_cyl must be >= 1");
  k_bg_ = cylinders_.empty() ? k : k * std::sqrt(cylinders_[0].eps_bg);

  const Eigen::Index block = 2 * m_cyl_ + 1;
  const Eigen::Index dim = block * static_cast<Eigen::Index>(cylinders_.size());

  mie_.reserve(cylinders_.size());
  for (const auto& cyl : cylinders_) {
    mie_.push_back(mie_coefficients(k_, cyl, pol_, m_cyl_));
    if (mie_.back().any_singular())
      throw Error(Errc::singular_system,
                  "FoldyLaxSystem: singular per-harmonic boundary system (interior resonance)");
  }

  coupling_ = MatrixXcd::Zero(dim, dim);
  for (std::size_t tgt = 0; tgt < cylinders_.size(); ++tgt) {
    for (std::size_t src = 0; src < cylinders_.size(); ++src) {
      if (src == tgt) continue;
      const Vec2 shift = cylinders_[src].center - cylinders_[tgt].center;
      coupling_.block(static_cast<Eigen::Index>(tgt) * block, static_cast<Eigen::Index>(src) * block,
                      block, block) =
          translation_matrix(TranslationKind::OutgoingToRegular, k_bg_, shift, m_cyl_, m_cyl_);
    }
  }

  matrix_ = -coupling_;
  for (std::size_t j = 0; j < cylinders_.size(); ++j) {
    const Eigen::Index row0 = static_cast<Eigen::Index>(j) * block;
    for (int n = -m_cyl_; n <= m_cyl_; ++n)
      matrix_.row(row0 + n + m_cyl_) *= mie_[j].s_at(n);
  }
  matrix_ += MatrixXcd::Identity(dim, dim);

  if (dim > 0) lu_.compute(matrix_);
}

VectorXcd FoldyLaxSystem::stack(const std::vector<VectorXcd>& per_cylinder) const {
  const Eigen::Index block = block_size();
  VectorXcd out(block * static_cast<Eigen::Index>(cylinders_.size()));
  for (std::size_t j = 0; j < per_cylinder.size(); ++j)
    out.segment(static_cast<Eigen::Index>(j) * block, block) = per_cylinder[j];
  return out;
}

std::vector<VectorXcd> FoldyLaxSystem::unstack(const VectorXcd& stacked) const {
  const Eigen::Index block = block_size();
  std::vector<VectorXcd> out(cylinders_.size());
  for (std::size_t j = 0; j < cylinders_.size(); ++j)
    out[j] = stacked.segment(static_cast<Eigen::Index>(j) * block, block);
  return out;
}

MatrixXcd FoldyLaxSystem::solve_stacked(const MatrixXcd& incident_stacked, double* residual) const {
  const Eigen::Index block = block_size();
  if (incident_stacked.rows() != dimension())
    throw Error(Errc::invalid_argument, "solve_stacked: incident dimension mismatch");
  if (dimension() == 0) {
    if (residual) *residual = 0.0;
    return incident_stacked;
  }

  // right-hand side D a
  MatrixXcd rhs = incident_stacked;
  for (std::size_t j = 0; j < cylinders_.size(); ++j) {
    const Eigen::Index row0 = static_cast<Eigen::Index>(j) * block;
    for (int n = -m_cyl_; n <= m_cyl_; ++n) rhs.row(row0 + n + m_cyl_) *= mie_[j].s_at(n);
  }

  MatrixXcd b = lu_.solve(rhs);
  if (!b.allFinite()) {
    std::ostringstream msg;
    msg << "solve_stacked: singular coupled system at k = (" << k_.real() << ", " << k_.imag()
        << "); rcond = " << lu_.rcond();
    throw Error(Errc::solver_failure, msg.str());
  }

  const double rhs_norm = rhs.norm();
  double rel = 0.0;
  if (rhs_norm > 0.0) {
    MatrixXcd resid = rhs - matrix_ * b;
    rel = resid.norm() / rhs_norm;
    if (rel > 1e-12) {
      b += lu_.solve(resid);  // one refinement pass on the cached factorization
      resid = rhs - matrix_ * b;
      rel = resid.norm() / rhs_norm;
    }
  }
  if (residual) *residual = rel;
  return b;
}

LocalSolution FoldyLaxSystem::solve(const std::vector<VectorXcd>& incident,
                                    std::optional<PlaneWave> wave) const {
  if (incident.size() != cylinders_.size())
    throw Error(Errc::invalid_argument, "solve: one incident coefficient block per cylinder required");

  LocalSolution sol;
  sol.k = k_;
  sol.polarization = pol_;
  sol.m_cyl = m_cyl_;
  sol.cylinders = cylinders_;
  sol.incident_wave = wave;
  sol.incident = incident;
  if (cylinders_.empty()) return sol;

  const VectorXcd a = stack(incident);
  double rel = 0.0;
  const VectorXcd b = solve_stacked(a, &rel);
  sol.residual = rel;
  sol.outgoing = unstack(b);

  // interior coefficients from the total local regular field a + H b
  const VectorXcd total = a + coupling_ * b;
  sol.interior.resize(cylinders_.size());
  const Eigen::Index block = block_size();
  for (std::size_t j = 0; j < cylinders_.size(); ++j) {
    VectorXcd cj(block);
    for (int n = -m_cyl_; n <= m_cyl_; ++n)
      cj(n + m_cyl_) = mie_[j].c_at(n) * total(static_cast<Eigen::Index>(j) * block + n + m_cyl_);
    sol.interior[j] = std::move(cj);
  }
  return sol;
}

std::vector<VectorXcd> plane_wave_local_coeffs(Complex k, double angle,
                                               std::span<const Cylinder> cylinders, int m_cyl) {
  const Complex k_bg = cylinders.empty() ? k : k * std::sqrt(cylinders[0].eps_bg);
  const Complex i_unit(0.0, 1.0);
  std::vector<VectorXcd> coeffs;
  coeffs.reserve(cylinders.size());
  const double cos_a = std::cos(angle);
  const double sin_a = std::sin(angle);
  for (const auto& cyl : cylinders) {
    const Complex phase = std::exp(i_unit * (k_bg * (cos_a * cyl.center.x() + sin_a * cyl.center.y())));
    VectorXcd a(2 * m_cyl + 1);
    for (int n = -m_cyl; n <= m_cyl; ++n) {
      // i^n e^{-i n angle}, i^n applied exactly by quadrant
      Complex f = std::polar(1.0, -n * angle);
      const int q = ((n % 4) + 4) % 4;
      switch (q) {
        case 1: f = rotate_p90(f); break;
        case 2: f = -f; break;
        case 3: f = rotate_m90(f); break;
        default: break;
      }
      a(n + m_cyl) = phase * f;
    }
    coeffs.push_back(std::move(a));
  }
  return coeffs;
}

LocalSolution solve_plane_wave(Complex k, std::span<const Cylinder> cylinders, Polarization pol,
                               int m_cyl, double angle) {
  FoldyLaxSystem system(k, std::vector<Cylinder>(cylinders.begin(), cylinders.end()), pol, m_cyl);
  return system.solve(plane_wave_local_coeffs(k, angle, cylinders, m_cyl), PlaneWave{angle});
}

}  // namespace respole
