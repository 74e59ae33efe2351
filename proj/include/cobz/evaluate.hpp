#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cobz/backend.hpp"
#include "cobz/bordism.hpp"
#include "cobz/layered.hpp"
#include "cobz/term.hpp"
#include "cobz/trace.hpp"
#include "cobz/typecheck.hpp"

namespace cobz {

namespace detail {

template <SmcBackend B>
typename B::Object sign_object(Sign s, const DualizablePair<B>& p) {
  return s == Sign::plus ? p.object : p.dual;
}

template <SmcBackend B>
typename B::Object object_of_signs(const std::vector<Sign>& signs, std::size_t begin,
                                   std::size_t end, const DualizablePair<B>& p, const B& b) {
  typename B::Object obj = b.unit_object();
  for (std::size_t i = begin; i < end; ++i) obj = b.tensor_object(obj, sign_object(signs[i], p));
  return obj;
}

// Cup emitting the pair (first, flipped(first)): the coevaluation, braided
// when the dual leg comes first. Forced by the zig-zag identities.
template <SmcBackend B>
typename B::Morphism cup_morphism(Sign first, const DualizablePair<B>& p, const B& b) {
  if (first == Sign::plus) return p.coev;
  return b.compose(p.coev, b.braiding(p.object, p.dual));
}

// Cap consuming the pair (first, flipped(first)): the evaluation, braided
// when the primal leg comes first.
template <SmcBackend B>
typename B::Morphism cap_morphism(Sign first, const DualizablePair<B>& p, const B& b) {
  if (first == Sign::minus) return p.ev;
  return b.compose(b.braiding(p.object, p.dual), p.ev);
}

// A single strand of sign s carrying label l: a power of the automorphism,
// transported through the duality when the strand is dual-oriented.
template <SmcBackend B>
typename B::Morphism strand_morphism(Sign s, const Int& l, const DualizablePair<B>& p,
                                     const B& b) {
  if (l == 0) return b.identity(sign_object(s, p));
  if (s == Sign::plus) return power_of(p, l, b);
  const auto id_dual = b.identity(p.dual);
  auto m = b.tensor(id_dual, p.coev);
  m = b.compose(m, b.tensor(b.tensor(id_dual, power_of(p, l, b)), id_dual));
  return b.compose(m, b.tensor(p.ev, id_dual));
}

}  // namespace detail

// The object a boundary word denotes: the tensor of the pair's object (for
// each +) and its dual (for each -).
template <SmcBackend B>
typename B::Object object_of_word(const BoundaryObject& w, const DualizablePair<B>& p,
                                  const B& b) {
  return detail::object_of_signs(w.signs(), 0, w.size(), p, b);
}

/**
 * The functor classified by a dualizable pair, applied to a bordism: the
 * canonical layered decomposition is replayed in the backend, stage by
 * stage, and each circle becomes the generic trace of the matching power of
 * the automorphism. Functorial: composition, tensor and identities are
 * preserved exactly.
 */
template <SmcBackend B>
typename B::Morphism evaluate(const Bordism& bordism, const DualizablePair<B>& p, const B& b) {
  const LayeredForm lf = layered_form(bordism);
  std::optional<typename B::Morphism> acc;
  auto append = [&](typename B::Morphism stage) {
    acc = acc ? b.compose(*acc, stage) : std::move(stage);
  };

  if (!lf.cups.empty()) {
    auto stage = b.identity(object_of_word(lf.src, p, b));
    for (const auto& [first, second] : lf.cups)
      stage = b.tensor(stage, detail::cup_morphism(first, p, b));
    append(std::move(stage));
  }

  bool any_label = false;
  for (const Int& l : lf.labels) any_label = any_label || l != 0;
  if (any_label) {
    auto stage = detail::strand_morphism(lf.w1[0], lf.labels[0], p, b);
    for (std::size_t i = 1; i < lf.w1.size(); ++i)
      stage = b.tensor(stage, detail::strand_morphism(lf.w1[i], lf.labels[i], p, b));
    append(std::move(stage));
  }

  std::vector<Sign> word = lf.w1;
  for (std::size_t pos : lf.transpositions) {
    auto layer = b.braiding(detail::sign_object(word[pos], p), detail::sign_object(word[pos + 1], p));
    if (pos > 0) layer = b.tensor(b.identity(detail::object_of_signs(word, 0, pos, p, b)), layer);
    if (pos + 2 < word.size())
      layer = b.tensor(layer,
                       b.identity(detail::object_of_signs(word, pos + 2, word.size(), p, b)));
    append(std::move(layer));
    std::swap(word[pos], word[pos + 1]);
  }

  if (!lf.caps.empty()) {
    std::optional<typename B::Morphism> stage;
    for (const auto& [first, second] : lf.caps) {
      auto c = detail::cap_morphism(first, p, b);
      stage = stage ? b.tensor(*stage, c) : std::move(c);
    }
    if (!lf.tgt.empty())
      stage = b.tensor(*stage, b.identity(object_of_word(lf.tgt, p, b)));
    append(std::move(*stage));
  }

  if (!acc) acc = b.identity(object_of_word(lf.src, p, b));
  for (const Int& l : lf.circles.labels())
    acc = b.tensor(*acc, generic_trace(p, power_of(p, l, b), b));
  return *acc;
}

/**
 * Direct structural interpretation of a term in the backend (typechecks
 * first). Agrees exactly with evaluate(denote(t), p, b) — the two paths
 * through the square commute — which the test suite checks.
 */
template <SmcBackend B>
typename B::Morphism evaluate_term(const Term& t, const DualizablePair<B>& p, const B& b) {
  typecheck(t);
  struct Rec {
    const DualizablePair<B>& p;
    const B& b;
    typename B::Morphism go(const Term& t) const {
      switch (t.kind()) {
        case Term::Kind::id: return b.identity(object_of_word(t.obj_a().flatten(), p, b));
        case Term::Kind::swap:
          return b.braiding(object_of_word(t.obj_a().flatten(), p, b),
                            object_of_word(t.obj_b().flatten(), p, b));
        case Term::Kind::ev: return p.ev;
        case Term::Kind::coev: return p.coev;
        case Term::Kind::alpha: return power_of(p, t.exponent(), b);
        case Term::Kind::seq: return b.compose(go(t.lhs()), go(t.rhs()));
        case Term::Kind::par: return b.tensor(go(t.lhs()), go(t.rhs()));
      }
      throw Error("unreachable term kind");
    }
  };
  return Rec{p, b}.go(t);
}

}  // namespace cobz
