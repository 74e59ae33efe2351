#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "cobz/bordism.hpp"
#include "cobz/matrix.hpp"
#include "cobz/scalar_multiset.hpp"
#include "cobz/term.hpp"
#include "cobz/theta_spec.hpp"

namespace cobz::gen {

/**
 * Deterministic splitmix64 generator. Self-contained so that seeded runs
 * (tests and the CLI check suites) are bit-stable across platforms and
 * standard libraries.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

inline BoundaryObject word(Rng& rng, std::size_t max_len) {
  const std::size_t len = rng.below(max_len + 1);
  std::vector<Sign> signs(len);
  for (Sign& s : signs) s = rng.coin() ? Sign::plus : Sign::minus;
  return BoundaryObject(std::move(signs));
}

// A word whose (+ count) - (- count) equals `charge`; needed because a
// bordism M -> N exists iff the two words have equal charge.
inline BoundaryObject word_with_charge(Rng& rng, std::int64_t charge, std::size_t max_extra_pairs) {
  std::vector<Sign> signs(static_cast<std::size_t>(charge < 0 ? -charge : charge),
                          charge >= 0 ? Sign::plus : Sign::minus);
  const std::size_t pairs = rng.below(max_extra_pairs + 1);
  for (std::size_t i = 0; i < pairs; ++i) {
    signs.push_back(Sign::plus);
    signs.push_back(Sign::minus);
  }
  for (std::size_t i = signs.size(); i > 1; --i)
    std::swap(signs[i - 1], signs[rng.below(i)]);
  return BoundaryObject(std::move(signs));
}

inline ScalarMultiset circles(Rng& rng, std::size_t max_count, std::int64_t max_label) {
  ScalarMultiset out;
  const std::size_t n = rng.below(max_count + 1);
  for (std::size_t i = 0; i < n; ++i) out.add(Int(rng.range(-max_label, max_label)));
  return out;
}

/**
 * A uniform-ish random bordism between two compatible words. Ports split
 * into two classes — {source +, target -} and {source -, target +} — and
 * every valid arc joins one port of each class, so any bijection between
 * the classes is a valid diagram.
 */
inline Bordism bordism_between(Rng& rng, const BoundaryObject& src, const BoundaryObject& tgt,
                               std::int64_t max_label, ScalarMultiset with_circles = {}) {
  std::vector<Port> outflow, inflow;
  for (std::size_t i = 0; i < src.size(); ++i)
    (src.sign(i) == Sign::plus ? outflow : inflow).push_back(Port{Side::source, i});
  for (std::size_t j = 0; j < tgt.size(); ++j)
    (tgt.sign(j) == Sign::minus ? outflow : inflow).push_back(Port{Side::target, j});
  for (std::size_t i = inflow.size(); i > 1; --i)
    std::swap(inflow[i - 1], inflow[rng.below(i)]);
  std::vector<Arc> arcs;
  arcs.reserve(outflow.size());
  for (std::size_t i = 0; i < outflow.size(); ++i)
    arcs.emplace_back(outflow[i], inflow[i], Int(rng.range(-max_label, max_label)));
  return Bordism::make(src, tgt, std::move(arcs), std::move(with_circles));
}

inline Bordism endomorphism(Rng& rng, std::size_t max_len, std::int64_t max_label,
                            std::size_t max_circles = 2) {
  const BoundaryObject w = word(rng, max_len);
  return bordism_between(rng, w, w, max_label, circles(rng, max_circles, max_label));
}

inline Bordism any_bordism(Rng& rng, std::size_t max_len, std::int64_t max_label,
                           std::size_t max_circles = 3) {
  const std::int64_t charge = rng.range(-2, 2);
  const BoundaryObject src = word_with_charge(rng, charge, max_len / 2);
  const BoundaryObject tgt = word_with_charge(rng, charge, max_len / 2);
  return bordism_between(rng, src, tgt, max_label, circles(rng, max_circles, max_label));
}

// f ; g composable, with random circles on each.
inline std::pair<Bordism, Bordism> composable_pair(Rng& rng, std::size_t max_len,
                                                   std::int64_t max_label) {
  const std::int64_t charge = rng.range(-2, 2);
  const BoundaryObject m = word_with_charge(rng, charge, max_len / 2);
  const BoundaryObject n = word_with_charge(rng, charge, max_len / 2);
  const BoundaryObject l = word_with_charge(rng, charge, max_len / 2);
  return {bordism_between(rng, m, n, max_label, circles(rng, 2, max_label)),
          bordism_between(rng, n, l, max_label, circles(rng, 2, max_label))};
}

// f : M -> N and g : N -> M, so both composites are endomorphisms.
inline std::pair<Bordism, Bordism> cyclic_pair(Rng& rng, std::size_t max_len,
                                               std::int64_t max_label) {
  const std::int64_t charge = rng.range(-2, 2);
  const BoundaryObject m = word_with_charge(rng, charge, max_len / 2);
  const BoundaryObject n = word_with_charge(rng, charge, max_len / 2);
  return {bordism_between(rng, m, n, max_label, circles(rng, 2, max_label)),
          bordism_between(rng, n, m, max_label, circles(rng, 2, max_label))};
}

// A labelled sign-preserving permutation on the given word.
inline Bordism invertible_on(Rng& rng, const BoundaryObject& w, std::int64_t max_label) {
  std::vector<std::size_t> plus_slots, minus_slots;
  for (std::size_t i = 0; i < w.size(); ++i)
    (w.sign(i) == Sign::plus ? plus_slots : minus_slots).push_back(i);
  auto shuffled = [&](std::vector<std::size_t> v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    return v;
  };
  const std::vector<std::size_t> plus_to = shuffled(plus_slots);
  const std::vector<std::size_t> minus_to = shuffled(minus_slots);
  std::vector<Arc> arcs;
  arcs.reserve(w.size());
  for (std::size_t i = 0; i < plus_slots.size(); ++i)
    arcs.emplace_back(Port{Side::source, plus_slots[i]}, Port{Side::target, plus_to[i]},
                      Int(rng.range(-max_label, max_label)));
  for (std::size_t i = 0; i < minus_slots.size(); ++i)
    arcs.emplace_back(Port{Side::source, minus_slots[i]}, Port{Side::target, minus_to[i]},
                      Int(rng.range(-max_label, max_label)));
  return Bordism::make(w, w, std::move(arcs));
}

inline Bordism invertible(Rng& rng, std::size_t max_len, std::int64_t max_label) {
  return invertible_on(rng, word(rng, max_len), max_label);
}

inline ThetaSpec theta_spec(Rng& rng, std::size_t max_n, std::int64_t max_abs) {
  ThetaSpec spec;
  const std::size_t n = rng.below(max_n + 1);
  for (std::size_t i = 0; i < n; ++i) spec.exponents.add(Int(rng.range(-max_abs, max_abs)));
  return spec;
}

// --- terms ------------------------------------------------------------

inline ObjExpr arbitrary_obj(Rng& rng, int depth) {
  if (depth <= 0 || rng.below(4) != 0) {
    switch (rng.below(3)) {
      case 0: return ObjExpr::unit();
      case 1: return ObjExpr::plus_pt();
      default: return ObjExpr::minus_pt();
    }
  }
  return ObjExpr::tensor(arbitrary_obj(rng, depth - 1), arbitrary_obj(rng, depth - 1));
}

// Grammatically arbitrary term (possibly ill-typed); for printer/parser tests.
inline Term arbitrary_term(Rng& rng, int depth) {
  const std::uint64_t roll = depth <= 0 ? rng.below(5) : rng.below(7);
  switch (roll) {
    case 0: return Term::id(arbitrary_obj(rng, 2));
    case 1: return Term::swap(arbitrary_obj(rng, 1), arbitrary_obj(rng, 1));
    case 2: return Term::ev();
    case 3: return Term::coev();
    case 4: return Term::alpha(Int(rng.range(-9, 9)));
    case 5: return Term::seq(arbitrary_term(rng, depth - 1), arbitrary_term(rng, depth - 1));
    default: return Term::par(arbitrary_term(rng, depth - 1), arbitrary_term(rng, depth - 1));
  }
}

struct TypedTerm {
  Term term;
  BoundaryObject cod;
};

// A random well-typed term with the given domain word.
inline TypedTerm typed_term(Rng& rng, const BoundaryObject& dom, int depth) {
  if (depth > 0) {
    switch (rng.below(3)) {
      case 0: {
        TypedTerm f = typed_term(rng, dom, depth - 1);
        TypedTerm g = typed_term(rng, f.cod, depth - 1);
        return {Term::seq(f.term, g.term), std::move(g.cod)};
      }
      case 1: {
        const std::size_t cut = rng.below(dom.size() + 1);
        std::vector<Sign> l(dom.signs().begin(), dom.signs().begin() + cut);
        std::vector<Sign> r(dom.signs().begin() + cut, dom.signs().end());
        TypedTerm f = typed_term(rng, BoundaryObject(std::move(l)), depth - 1);
        TypedTerm g = typed_term(rng, BoundaryObject(std::move(r)), depth - 1);
        return {Term::par(f.term, g.term), f.cod.tensor(g.cod)};
      }
      default: break;  // fall through to an atom
    }
  }
  // Atoms keyed on the domain's shape; id always fits.
  if (dom == BoundaryObject({Sign::minus, Sign::plus}) && rng.coin())
    return {Term::ev(), BoundaryObject{}};
  if (dom.empty() && rng.coin())
    return {Term::coev(), BoundaryObject({Sign::plus, Sign::minus})};
  if (dom == BoundaryObject::point(Sign::plus) && rng.coin()) {
    return {Term::alpha(Int(rng.range(-9, 9))), dom};
  }
  if (dom.size() >= 2 && rng.coin()) {
    const std::size_t cut = rng.below(dom.size() + 1);
    std::vector<Sign> l(dom.signs().begin(), dom.signs().begin() + cut);
    std::vector<Sign> r(dom.signs().begin() + cut, dom.signs().end());
    BoundaryObject a(std::move(l)), b(std::move(r));
    return {Term::swap(ObjExpr::of_word(a), ObjExpr::of_word(b)), b.tensor(a)};
  }
  return {Term::id(ObjExpr::of_word(dom)), dom};
}

// --- matrices ----------------------------------------------------------

inline Rational rational(Rng& rng, std::int64_t max_num, std::int64_t max_den) {
  return Rational(Int(rng.range(-max_num, max_num))) / Rational(Int(rng.range(1, max_den)));
}

inline MatrixMorphism matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t max_num,
                             std::int64_t max_den = 3) {
  MatrixMorphism m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rational(rng, max_num, max_den);
  return m;
}

// P * L * U with unit-triangular L and nonzero U diagonal: invertible by
// construction, with bounded entries.
inline MatrixMorphism invertible_matrix(Rng& rng, std::size_t n, std::int64_t max_num = 3) {
  MatrixMorphism l = MatrixMorphism::identity(n);
  MatrixMorphism u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) l.at(i, j) = Rational(Int(rng.range(-max_num, max_num)));
    for (std::size_t j = i + 1; j < n; ++j)
      u.at(i, j) = Rational(Int(rng.range(-max_num, max_num)));
    const std::int64_t d = rng.range(1, max_num);
    u.at(i, i) = Rational(Int(rng.coin() ? d : -d));
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  MatrixMorphism p(n, n);
  for (std::size_t i = 0; i < n; ++i) p.at(perm[i], i) = 1;
  return mat_mul(p, mat_mul(l, u));
}

}  // namespace cobz::gen
