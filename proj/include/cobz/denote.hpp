#pragma once

#include "cobz/bordism.hpp"
#include "cobz/term.hpp"
#include "cobz/typecheck.hpp"

namespace cobz {

namespace detail {

inline Bordism denote_rec(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::id: return identity(t.obj_a().flatten());
    case Term::Kind::swap: return braiding(t.obj_a().flatten(), t.obj_b().flatten());
    case Term::Kind::ev: return cap(OrientationOrder::minus_plus);
    case Term::Kind::coev: return cup(OrientationOrder::plus_minus);
    case Term::Kind::alpha: return alpha(t.exponent());
    case Term::Kind::seq: return compose(denote_rec(t.lhs()), denote_rec(t.rhs()));
    case Term::Kind::par: return tensor(denote_rec(t.lhs()), denote_rec(t.rhs()));
  }
  throw Error("unreachable term kind");
}

}  // namespace detail

/**
 * The denotation of a well-typed term: structural recursion sending ';' to
 * composition and '*' to the tensor. Typechecks first, so a TypeError is
 * raised before any composition runs; the result is automatically canonical.
 * Two terms denote the same morphism iff their denotations compare equal,
 * which decides the equational theory.
 */
inline Bordism denote(const Term& t) {
  typecheck(t);
  return detail::denote_rec(t);
}

}  // namespace cobz
