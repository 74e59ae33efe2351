#pragma once

#include <optional>
#include <vector>

#include "cobz/bordism.hpp"
#include "cobz/layered.hpp"
#include "cobz/term.hpp"

namespace cobz {

namespace detail {

// A cup term emitting the ordered sign pair (first, flipped(first)).
inline Term cup_term(Sign first) {
  if (first == Sign::plus) return Term::coev();
  return Term::seq(Term::coev(), Term::swap(ObjExpr::plus_pt(), ObjExpr::minus_pt()));
}

// A cap term consuming the ordered sign pair (first, flipped(first)).
inline Term cap_term(Sign first) {
  if (first == Sign::minus) return Term::ev();
  return Term::seq(Term::swap(ObjExpr::plus_pt(), ObjExpr::minus_pt()), Term::ev());
}

// A single strand of the given sign carrying label l. The (-) strand is the
// (+) generator bent around by a cup and a cap; gluing adds labels, so the
// label is carried over unchanged.
inline Term strand_term(Sign s, const Int& l) {
  if (l == 0) return Term::id(ObjExpr::of_point(s));
  if (s == Sign::plus) return Term::alpha(l);
  const ObjExpr minus = ObjExpr::minus_pt();
  Term bend_in = Term::par(Term::id(minus), Term::coev());
  Term labelled = Term::par(Term::par(Term::id(minus), Term::alpha(l)), Term::id(minus));
  Term bend_out = Term::par(Term::ev(), Term::id(minus));
  return Term::seq(Term::seq(bend_in, labelled), bend_out);
}

// A closed loop labelled l: coev ; (a^l * id(-)) ; swap(+,-) ; ev.
inline Term circle_term(const Int& l) {
  Term t = Term::seq(Term::coev(), Term::par(Term::alpha(l), Term::id(ObjExpr::minus_pt())));
  t = Term::seq(t, Term::swap(ObjExpr::plus_pt(), ObjExpr::minus_pt()));
  return Term::seq(t, Term::ev());
}

inline ObjExpr of_signs(const std::vector<Sign>& signs, std::size_t begin, std::size_t end) {
  std::vector<Sign> slice(signs.begin() + begin, signs.begin() + end);
  return ObjExpr::of_word(BoundaryObject(std::move(slice)));
}

}  // namespace detail

/**
 * A constructive inverse to denote: emits a term in a fixed serial shape
 * (cups, then labelled strands, then adjacent swaps, then caps, with circles
 * tensored on as closed loops). Stages that would be identities are omitted,
 * so e.g. quote(identity(+)) is literally id(+). The contract is the
 * round-trip: denote(quote(b)) == b for every canonical b.
 */
inline Term quote(const Bordism& b) {
  const LayeredForm lf = layered_form(b);
  std::optional<Term> result;
  auto append_stage = [&](Term stage) {
    result = result ? Term::seq(std::move(*result), std::move(stage)) : std::move(stage);
  };

  if (!lf.cups.empty()) {
    Term stage = Term::id(ObjExpr::of_word(lf.src));
    for (const auto& [first, second] : lf.cups) stage = Term::par(stage, detail::cup_term(first));
    append_stage(std::move(stage));
  }

  bool any_label = false;
  for (const Int& l : lf.labels) any_label = any_label || l != 0;
  if (any_label) {
    Term stage = detail::strand_term(lf.w1[0], lf.labels[0]);
    for (std::size_t i = 1; i < lf.w1.size(); ++i)
      stage = Term::par(stage, detail::strand_term(lf.w1[i], lf.labels[i]));
    append_stage(std::move(stage));
  }

  std::vector<Sign> word = lf.w1;
  for (std::size_t p : lf.transpositions) {
    Term layer = Term::swap(ObjExpr::of_point(word[p]), ObjExpr::of_point(word[p + 1]));
    if (p > 0) layer = Term::par(Term::id(detail::of_signs(word, 0, p)), std::move(layer));
    if (p + 2 < word.size())
      layer = Term::par(std::move(layer), Term::id(detail::of_signs(word, p + 2, word.size())));
    append_stage(std::move(layer));
    std::swap(word[p], word[p + 1]);
  }

  if (!lf.caps.empty()) {
    std::optional<Term> stage;
    for (const auto& [first, second] : lf.caps) {
      Term c = detail::cap_term(first);
      stage = stage ? Term::par(std::move(*stage), std::move(c)) : std::move(c);
    }
    if (!lf.tgt.empty()) stage = Term::par(std::move(*stage), Term::id(ObjExpr::of_word(lf.tgt)));
    append_stage(std::move(*stage));
  }

  if (!result) result = Term::id(ObjExpr::of_word(lf.src));
  for (const Int& l : lf.circles.labels()) result = Term::par(std::move(*result), detail::circle_term(l));
  return *result;
}

}  // namespace cobz
