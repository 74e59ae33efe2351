#pragma once

#include <concepts>

#include "cobz/numbers.hpp"

namespace cobz {

/**
 * What the evaluator needs from a symmetric monoidal category: objects,
 * morphisms, strict tensor, composition in diagrammatic order ("f then g"),
 * identities, the braiding, and decidable equality of morphisms.
 */
template <typename B>
concept SmcBackend = requires(const B& b, const typename B::Object& x,
                              const typename B::Morphism& f) {
  { b.unit_object() } -> std::convertible_to<typename B::Object>;
  { b.tensor_object(x, x) } -> std::convertible_to<typename B::Object>;
  { b.identity(x) } -> std::convertible_to<typename B::Morphism>;
  { b.compose(f, f) } -> std::convertible_to<typename B::Morphism>;
  { b.tensor(f, f) } -> std::convertible_to<typename B::Morphism>;
  { b.braiding(x, x) } -> std::convertible_to<typename B::Morphism>;
  { b.equal(f, f) } -> std::convertible_to<bool>;
};

/**
 * A dualizable object with a chosen invertible endomorphism: everything the
 * universal property needs to interpret diagrams. ev and coev must satisfy
 * the zig-zag identities (checkable via zigzags_hold).
 *
 *   ev   : dual (x) object -> unit
 *   coev : unit -> object (x) dual
 */
template <typename B>
struct DualizablePair {
  typename B::Object object;
  typename B::Object dual;
  typename B::Morphism ev;
  typename B::Morphism coev;
  typename B::Morphism automorphism;
  typename B::Morphism inverse;
};

// k-th power of the pair's automorphism (binary, exact for huge exponents).
template <SmcBackend B>
typename B::Morphism power_of(const DualizablePair<B>& p, const Int& k, const B& b) {
  typename B::Morphism base = k >= 0 ? p.automorphism : p.inverse;
  Int e = k >= 0 ? k : Int(-k);
  typename B::Morphism result = b.identity(p.object);
  while (e > 0) {
    if ((e & 1) != 0) result = b.compose(result, base);
    e >>= 1;
    if (e > 0) base = b.compose(base, base);
  }
  return result;
}

// Both zig-zag identities, verified by backend equality:
//   (coev (x) id_x) ; (id_x (x) ev) == id_x
//   (id_y (x) coev) ; (ev (x) id_y) == id_y
template <SmcBackend B>
bool zigzags_hold(const DualizablePair<B>& p, const B& b) {
  const auto id_x = b.identity(p.object);
  const auto id_y = b.identity(p.dual);
  const auto zig = b.compose(b.tensor(p.coev, id_x), b.tensor(id_x, p.ev));
  const auto zag = b.compose(b.tensor(id_y, p.coev), b.tensor(p.ev, id_y));
  return b.equal(zig, id_x) && b.equal(zag, id_y);
}

}  // namespace cobz
