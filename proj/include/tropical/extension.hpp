#pragma once

// Extending an isomorphism g between spans over T to the spans they
// generate over TBar: g^((+inf) a (+) b) = (+inf) g(a) (+) g(b).

#include "tropical/convex.hpp"
#include "tropical/duality.hpp"

namespace tropical {

/// Evaluates the extension of g at p. The representatives of p must lie in
/// the source span of g; the result does not depend on which
/// representatives were chosen when g is a valid isomorphism.
inline ExtendedPair extend_iso_eval(const IsoDescriptor& g, const ExtendedPair& p) {
  if (p.dim() != g.source_dim) throw ShapeError("extend_iso_eval: pair dimension differs from source span");
  return extended_pair(apply_iso(g, p.a_rep), apply_iso(g, p.b_rep));
}

}  // namespace tropical
