#pragma once

#include <string>
#include <utility>

#include "cobz/boundary.hpp"
#include "cobz/errors.hpp"
#include "cobz/term.hpp"

namespace cobz {

// The boundary words a term consumes and produces.
struct TermType {
  BoundaryObject dom, cod;
};

/**
 * Infers the (dom, cod) boundary words of a term, or throws TypeError naming
 * the mismatched words and the offending subterm. Object expressions are
 * compared by their flattenings; only ';' can fail.
 */
inline TermType typecheck(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::id: {
      BoundaryObject w = t.obj_a().flatten();
      return {w, w};
    }
    case Term::Kind::swap: {
      BoundaryObject a = t.obj_a().flatten();
      BoundaryObject b = t.obj_b().flatten();
      return {a.tensor(b), b.tensor(a)};
    }
    case Term::Kind::ev:
      return {BoundaryObject({Sign::minus, Sign::plus}), BoundaryObject{}};
    case Term::Kind::coev:
      return {BoundaryObject{}, BoundaryObject({Sign::plus, Sign::minus})};
    case Term::Kind::alpha: {
      BoundaryObject pt = BoundaryObject::point(Sign::plus);
      return {pt, pt};
    }
    case Term::Kind::seq: {
      TermType lhs = typecheck(t.lhs());
      TermType rhs = typecheck(t.rhs());
      if (lhs.cod != rhs.dom)
        throw TypeError("type mismatch in ';': left side produces '" + lhs.cod.to_string() +
                        "' but right side consumes '" + rhs.dom.to_string() + "' in term '" +
                        t.to_string() + "'");
      return {std::move(lhs.dom), std::move(rhs.cod)};
    }
    case Term::Kind::par: {
      TermType lhs = typecheck(t.lhs());
      TermType rhs = typecheck(t.rhs());
      return {lhs.dom.tensor(rhs.dom), lhs.cod.tensor(rhs.cod)};
    }
  }
  throw TypeError("unreachable term kind");
}

}  // namespace cobz
