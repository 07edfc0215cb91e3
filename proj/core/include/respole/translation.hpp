#pragma once

#include "respole/types.hpp"

namespace respole {

/// Graf re-expansion of cylindrical waves about a shifted center.
///
/// `shift` is the vector from the target expansion center to the source
/// center (c_source - c_target). Entry (m, n), with row order m in
/// [-rows_order, rows_order] and column order n in [-cols_order, cols_order],
/// is F_{m-n}(k |shift|) e^{i (m-n) arg(shift)} where F is J for
/// regular-to-regular and outgoing-to-outgoing, and H^(1) for
/// outgoing-to-regular.
///
/// Validity regions (r measured from the target center):
///   outgoing-to-regular:  r < |shift|
///   outgoing-to-outgoing: r > |shift|
///   regular-to-regular:   everywhere
enum class TranslationKind { RegularToRegular, OutgoingToRegular, OutgoingToOutgoing };

MatrixXcd translation_matrix(TranslationKind kind, Complex k, const Vec2& shift, int rows_order,
                             int cols_order);

}  // namespace respole
