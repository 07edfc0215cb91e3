#include "respole/geometry.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "respole/errors.hpp"

namespace respole {

std::vector<Cylinder> build_crystal(const CrystalSpec& spec) {
  if (spec.nx < 1 || spec.ny < 1)
    throw Error(Errc::configuration, "build_crystal: nx and ny must be positive");
  if (!(spec.pitch > 0.0)) throw Error(Errc::configuration, "build_crystal: pitch must be positive");
  if (!(spec.radius > 0.0)) throw Error(Errc::configuration, "build_crystal: radius must be positive");
  if (spec.eps_rod.imag() < 0.0 || spec.eps_bg.imag() < 0.0)
    throw Error(Errc::configuration, "build_crystal: Im(eps) must be >= 0 under e^{-i omega t}");

  std::set<std::pair<int, int>> removed;
  for (const auto& site : spec.removed) {
    if (site.first < 0 || site.first >= spec.nx || site.second < 0 || site.second >= spec.ny) {
      std::ostringstream msg;
      msg << "build_crystal: removed site (" << site.first << ", " << site.second
          << ") outside [0, " << spec.nx << ") x [0, " << spec.ny << ")";
      throw Error(Errc::configuration, msg.str());
    }
    if (!removed.insert(site).second) {
      std::ostringstream msg;
      msg << "build_crystal: duplicate removed site (" << site.first << ", " << site.second << ")";
      throw Error(Errc::configuration, msg.str());
    }
  }

  const double x0 = 0.5 * (spec.nx - 1);
  const double y0 = 0.5 * (spec.ny - 1);
  std::vector<Cylinder> cylinders;
  cylinders.reserve(static_cast<std::size_t>(spec.nx) * static_cast<std::size_t>(spec.ny) - removed.size());
  for (int j = 0; j < spec.ny; ++j) {
    for (int i = 0; i < spec.nx; ++i) {
      if (removed.count({i, j})) continue;
      Cylinder c;
      c.center = Vec2((i - x0) * spec.pitch, (j - y0) * spec.pitch);
      c.radius = spec.radius;
      c.eps_rod = spec.eps_rod;
      c.eps_bg = spec.eps_bg;
      cylinders.push_back(c);
    }
  }
  return cylinders;
}

GeometryReport validate_geometry(std::span<const Cylinder> cylinders) {
  GeometryReport report;
  for (std::size_t a = 0; a < cylinders.size(); ++a) {
    for (std::size_t b = a + 1; b < cylinders.size(); ++b) {
      const double dist = (cylinders[a].center - cylinders[b].center).norm();
      const double sum = cylinders[a].radius + cylinders[b].radius;
      GeometryFinding finding;
      finding.first = a;
      finding.second = b;
      finding.distance = dist;
      std::ostringstream msg;
      if (dist < sum) {
        finding.severity = GeometryFinding::Severity::Error;
        msg << "cylinders " << a << " and " << b << " overlap: center distance " << dist
            << " < radii sum " << sum;
      } else if (dist <= sum * (1.0 + 1e-9)) {
        finding.severity = GeometryFinding::Severity::Warning;
        msg << "cylinders " << a << " and " << b << " touch: center distance " << dist
            << " within 1e-9 of radii sum " << sum;
      } else {
        continue;
      }
      finding.message = msg.str();
      report.findings.push_back(std::move(finding));
    }
  }
  return report;
}

}  // namespace respole
