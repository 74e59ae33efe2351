#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cobz/cob_backend.hpp"
#include "cobz/denote.hpp"
#include "cobz/evaluate.hpp"
#include "cobz/gen.hpp"
#include "cobz/matrix_backend.hpp"
#include "cobz/parse.hpp"
#include "cobz/quote.hpp"
#include "cobz/trace_ops.hpp"

namespace cobz {

/**
 * Result of one seeded property suite. Every failed case records a minimal
 * reproducer (the case index plus the serialized inputs), so a failure can
 * be replayed with the same seed.
 */
struct CheckReport {
  std::string suite;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> details;

  void fail(std::size_t case_index, const std::string& what) {
    ++failures;
    if (details.size() < 10)
      details.push_back("case " + std::to_string(case_index) + ": " + what);
  }
};

namespace detail {

// Independent stream per case so any failing case replays in isolation.
inline gen::Rng case_rng(std::uint64_t seed, std::size_t case_index) {
  return gen::Rng(seed ^ (0x9e3779b97f4a7c15ull * (case_index + 1)));
}

}  // namespace detail

// Category, tensor, symmetry and scalar-monoid laws on random diagrams.
inline CheckReport check_laws(std::uint64_t seed, std::size_t cases) {
  CheckReport report;
  report.suite = "laws";
  for (std::size_t i = 0; i < cases; ++i) {
    gen::Rng rng = detail::case_rng(seed, i);
    report.cases++;
    const std::int64_t charge = rng.range(-2, 2);
    auto w = [&] { return gen::word_with_charge(rng, charge, 3); };
    const BoundaryObject m = w(), n = w(), l = w(), o = w();
    const Bordism f = gen::bordism_between(rng, m, n, 9, gen::circles(rng, 2, 9));
    const Bordism g = gen::bordism_between(rng, n, l, 9, gen::circles(rng, 2, 9));
    const Bordism h = gen::bordism_between(rng, l, o, 9, gen::circles(rng, 2, 9));

    if (compose(compose(f, g), h) != compose(f, compose(g, h)))
      report.fail(i, "associativity: f=" + f.to_string() + " g=" + g.to_string() +
                         " h=" + h.to_string());
    if (compose(identity(f.source()), f) != f || compose(f, identity(f.target())) != f)
      report.fail(i, "identity laws: f=" + f.to_string());

    // Interchange: (f (x) f2) ; (g (x) g2) == (f ; g) (x) (f2 ; g2).
    const Bordism f2 = gen::any_bordism(rng, 4, 9);
    const Bordism g2b = gen::bordism_between(rng, f2.target(), f2.target(), 9);
    if (compose(tensor(f, f2), tensor(g, g2b)) != tensor(compose(f, g), compose(f2, g2b)))
      report.fail(i, "interchange: f=" + f.to_string() + " g=" + g.to_string() +
                         " f2=" + f2.to_string() + " g2=" + g2b.to_string());

    // Symmetry: natural in both arguments and involutive.
    if (compose(tensor(f, f2), braiding(f.target(), f2.target())) !=
        compose(braiding(f.source(), f2.source()), tensor(f2, f)))
      report.fail(i, "braiding naturality: f=" + f.to_string() + " g=" + f2.to_string());
    if (compose(braiding(m, n), braiding(n, m)) != identity(m.tensor(n)))
      report.fail(i, "braiding involution: a=" + m.to_string() + " b=" + n.to_string());

    // Scalars: closed diagrams form a commutative monoid under union, and
    // composing them is the same as tensoring them.
    const Bordism c1 = Bordism::make({}, {}, {}, gen::circles(rng, 3, 9));
    const Bordism c2 = Bordism::make({}, {}, {}, gen::circles(rng, 3, 9));
    if (compose(c1, c2) != tensor(c1, c2) || compose(c1, c2) != compose(c2, c1) ||
        compose(c1, identity(BoundaryObject{})) != c1)
      report.fail(i, "scalar monoid: c1=" + c1.to_string() + " c2=" + c2.to_string());
    if (classify_scalar(compose(c1, c2)) != c1.circles().united(c2.circles()))
      report.fail(i, "scalar classification: c1=" + c1.to_string() + " c2=" + c2.to_string());
  }
  return report;
}

// Trace cyclicity in both the diagram category and the matrix backend.
inline CheckReport check_cyclicity(std::uint64_t seed, std::size_t cases) {
  CheckReport report;
  report.suite = "cyclicity";
  for (std::size_t i = 0; i < cases; ++i) {
    gen::Rng rng = detail::case_rng(seed, i);
    report.cases++;
    const auto [f, g] = gen::cyclic_pair(rng, 6, 9);
    if (trace_close(compose(f, g)) != trace_close(compose(g, f)))
      report.fail(i, "diagram cyclicity: f=" + f.to_string() + " g=" + g.to_string());

    const std::size_t v = 1 + rng.below(4), w = 1 + rng.below(4);
    const MatrixMorphism a = gen::matrix(rng, w, v, 5);
    const MatrixMorphism b = gen::matrix(rng, v, w, 5);
    if (classical_trace(mat_mul(b, a)) != classical_trace(mat_mul(a, b)))
      report.fail(i, "matrix cyclicity: a=" + a.to_string() + " b=" + b.to_string());
  }
  return report;
}

// evaluate commutes with closing a diagram: the image of the closure equals
// the generic trace of the image. Also checks the identity-functor point.
inline CheckReport check_naturality(std::uint64_t seed, std::size_t cases) {
  CheckReport report;
  report.suite = "naturality";
  const MatrixBackend mb{};
  const CobBackend cb{};
  const DualizablePair<CobBackend> id_point = plus_point_pair();
  for (std::size_t i = 0; i < cases; ++i) {
    gen::Rng rng = detail::case_rng(seed, i);
    report.cases++;
    // Keep dim^(2 * word length) small so exact arithmetic stays fast.
    static constexpr std::size_t max_len_for_dim[] = {6, 6, 3, 2, 1};
    const std::size_t dim = 1 + rng.below(4);
    const Bordism b = gen::endomorphism(rng, max_len_for_dim[dim], 3, 1);
    const DualizablePair<MatrixBackend> pair =
        dualizable_from_matrix(gen::invertible_matrix(rng, dim));

    const MatrixMorphism image = evaluate(b, pair, mb);
    const MatrixMorphism closed = evaluate(trace_close(b), pair, mb);
    const DualizablePair<MatrixBackend> ambient =
        dualizable_from_matrix(MatrixMorphism::identity(image.rows()));
    if (closed != generic_trace(ambient, image, mb))
      report.fail(i, "matrix naturality: b=" + b.to_string() +
                         " matrix=" + pair.automorphism.to_string());

    if (evaluate(b, id_point, cb) != b)
      report.fail(i, "identity-functor point: b=" + b.to_string());
  }
  return report;
}

// quote inverts denote; printing inverts parsing.
inline CheckReport check_roundtrip(std::uint64_t seed, std::size_t cases) {
  CheckReport report;
  report.suite = "roundtrip";
  for (std::size_t i = 0; i < cases; ++i) {
    gen::Rng rng = detail::case_rng(seed, i);
    report.cases++;
    const Bordism b = gen::any_bordism(rng, 6, 9);
    if (denote(quote(b)) != b) report.fail(i, "denote(quote(b)) != b: b=" + b.to_string());

    const Term t = gen::arbitrary_term(rng, 3);
    if (!(parse_term(t.to_string()) == t))
      report.fail(i, "parse(print(t)) != t: t=" + t.to_string());
  }
  return report;
}

// Trace strategies read off their own exponents at the canonical point;
// witnesses exist exactly where generation by closures allows.
inline CheckReport check_classify(std::uint64_t seed, std::size_t cases, std::size_t bound) {
  CheckReport report;
  report.suite = "classify";
  const AutomorphismPoint canonical(BoundaryObject::point(Sign::plus), alpha(Int(1)));
  for (std::size_t i = 0; i < cases; ++i) {
    gen::Rng rng = detail::case_rng(seed, i);
    report.cases++;
    const ThetaSpec spec = gen::theta_spec(rng, 6, 8);
    if (act_on_theta(canonical, spec) != spec.exponents)
      report.fail(i, "canonical point: spec=" + spec.to_string());

    // Conjugation invariance of the action.
    const Bordism a = gen::invertible(rng, 4, 5);
    const Bordism u = gen::invertible_on(rng, a.source(), 5);
    const AutomorphismPoint p1(a.source(), a);
    const AutomorphismPoint p2(a.source(), compose(compose(inverse_of(u), a), u));
    const ThetaSpec small = gen::theta_spec(rng, 3, 3);
    if (act_on_theta(p1, small) != act_on_theta(p2, small))
      report.fail(i, "conjugation invariance: a=" + a.to_string() + " u=" + u.to_string() +
                         " spec=" + small.to_string());

    // theta[1] and theta[-1] reach every bounded target.
    const ScalarMultiset target =
        gen::circles(rng, bound, static_cast<std::int64_t>(bound));
    ThetaSpec plus_one, minus_one, two, one_one;
    plus_one.exponents.add(Int(1));
    minus_one.exponents.add(Int(-1));
    two.exponents.add(Int(2));
    one_one.exponents.add(Int(1), 2);
    if (!is_generating_witness(plus_one, target, bound))
      report.fail(i, "missing theta[1] witness: target=" + target.to_string());
    if (!is_generating_witness(minus_one, target, bound))
      report.fail(i, "missing theta[-1] witness: target=" + target.to_string());

    // A reachable non-unit strategy case and the two obstructions.
    ScalarMultiset doubled;
    doubled.add(Int(2 * rng.range(-2, 2)));
    if (!is_generating_witness(two, doubled, bound))
      report.fail(i, "missing theta[2] witness: target=" + doubled.to_string());
    ScalarMultiset one, three;
    one.add(Int(1));
    three.add(Int(3));
    if (is_generating_witness(two, one, bound))
      report.fail(i, "theta[2] must miss {1} (divisibility)");
    if (is_generating_witness(one_one, three, bound))
      report.fail(i, "theta[1,1] must miss {3} (component count)");
  }
  return report;
}

}  // namespace cobz
