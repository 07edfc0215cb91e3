#include "respole/translation.hpp"

#include <cmath>

#include "respole/bessel.hpp"
#include "respole/errors.hpp"

namespace respole {

MatrixXcd translation_matrix(TranslationKind kind, Complex k, const Vec2& shift, int rows_order,
                             int cols_order) {
  if (rows_order < 0 || cols_order < 0)
    throw Error(Errc::invalid_argument, "translation_matrix: orders must be >= 0");
  const double dist = shift.norm();
  if (kind == TranslationKind::OutgoingToRegular && !(dist > 0.0))
    throw Error(Errc::invalid_argument, "translation_matrix: outgoing-to-regular requires a nonzero shift");

  const BesselFamily fam = cyl_bessel_family(rows_order + cols_order, k * dist);
  const double phi = std::atan2(shift.y(), shift.x());

  const int nr = 2 * rows_order + 1;
  const int nc = 2 * cols_order + 1;
  MatrixXcd out(nr, nc);
  for (int m = -rows_order; m <= rows_order; ++m) {
    for (int n = -cols_order; n <= cols_order; ++n) {
      const int p = m - n;
      const Complex value = (kind == TranslationKind::OutgoingToRegular) ? fam.h1_at(p) : fam.j_at(p);
      out(m + rows_order, n + cols_order) = value * std::polar(1.0, p * phi);
    }
  }
  return out;
}

}  // namespace respole
