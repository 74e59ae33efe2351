#pragma once

#include "cobz/backend.hpp"
#include "cobz/theta_spec.hpp"

namespace cobz {

/**
 * The categorical trace of an endomorphism f of the pair's object, computed
 * in any backend from the duality data alone:
 *
 *   coev ; (f (x) id_dual) ; braiding(object, dual) ; ev
 *
 * In the matrix backend this is the classical trace (as a 1x1 matrix); in
 * the diagram category it is the closure of f.
 */
template <SmcBackend B>
typename B::Morphism generic_trace(const DualizablePair<B>& p, const typename B::Morphism& f,
                                   const B& b) {
  auto m = b.compose(p.coev, b.tensor(f, b.identity(p.dual)));
  m = b.compose(m, b.braiding(p.object, p.dual));
  return b.compose(m, p.ev);
}

// Trace of the pair's own automorphism.
template <SmcBackend B>
typename B::Morphism generic_trace(const DualizablePair<B>& p, const B& b) {
  return generic_trace(p, p.automorphism, b);
}

/**
 * The trace strategy applied at a point: the scalar
 * Trace(a^{k1}) ; ... ; Trace(a^{kn}), exponents taken in ascending order
 * (scalars commute, so the order only fixes the computation, not the value).
 * The empty strategy yields the backend's unit scalar.
 */
template <SmcBackend B>
typename B::Morphism theta(const ThetaSpec& spec, const DualizablePair<B>& p, const B& b) {
  typename B::Morphism scalar = b.identity(b.unit_object());
  for (const Int& k : spec.exponents.labels())
    scalar = b.compose(scalar, generic_trace(p, power_of(p, k, b), b));
  return scalar;
}

}  // namespace cobz
