// Acceptance runner: nine fixed criteria, one pass/fail line each, with the
// time budgets pinned below next to the criterion they govern. Exits nonzero
// if any line fails. All randomness is seeded, so runs are reproducible.

#include <chrono>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cobz/cobz.hpp"
#include "oracles.hpp"

using namespace cobz;

namespace {

// Time budgets in milliseconds; zero means the criterion is exact-only.
constexpr double kBudgetFigureMs = 1.0;
constexpr double kBudgetClassificationMs = 1000.0;
constexpr double kBudgetProductFormulaMs = 1000.0;
constexpr double kBudgetCyclicityMs = 5000.0;
constexpr double kBudgetWitnessMs = 10000.0;
constexpr double kBudgetLawSuiteMs = 30000.0;

// A criterion returns nullopt on success or a one-phrase failure reason.
using Verdict = std::optional<std::string>;

BoundaryObject W(const char* text) { return BoundaryObject::parse(text); }

Arc arc(Side a, std::size_t i, Side b, std::size_t j, long label) {
  return Arc(Port{a, i}, Port{b, j}, Int(label));
}

MatrixMorphism diagonal(const std::vector<Rational>& values) {
  MatrixMorphism m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.at(i, i) = values[i];
  return m;
}

// 1. The worked gluing figure: a strand keeping label 2 and a cup keeping
//    label 1 survive; the chain pinched off in the middle closes to one
//    circle labelled -1.
Verdict criterion_figure() {
  const Bordism f = Bordism::make(W("+"), W("++-"),
                                  {arc(Side::source, 0, Side::target, 0, 2),
                                   arc(Side::target, 1, Side::target, 2, -1)});
  const Bordism g = Bordism::make(W("++-"), W("++-"),
                                  {arc(Side::source, 0, Side::target, 0, 0),
                                   arc(Side::source, 1, Side::source, 2, 0),
                                   arc(Side::target, 1, Side::target, 2, 1)});
  const Bordism expected = Bordism::make(W("+"), W("++-"),
                                         {arc(Side::source, 0, Side::target, 0, 2),
                                          arc(Side::target, 1, Side::target, 2, 1)},
                                         [] {
                                           ScalarMultiset c;
                                           c.add(Int(-1));
                                           return c;
                                         }());
  if (compose(f, g) != expected)
    return "composite differs from the figure: got " + compose(f, g).to_string();
  return std::nullopt;
}

// 2. Closing the k-th powers of the canonical labelled point reads back any
//    exponent family exactly.
Verdict criterion_classification() {
  gen::Rng rng(9102);
  const AutomorphismPoint canonical(BoundaryObject::point(Sign::plus), alpha(Int(1)));
  for (int i = 0; i < 200; ++i) {
    const ThetaSpec spec = gen::theta_spec(rng, 8, 10);
    if (act_on_theta(canonical, spec) != spec.exponents)
      return "spec " + spec.to_string() + " did not read back at the canonical point";
  }
  return std::nullopt;
}

// 3. Matrix-model products of traces against an independent direct product
//    formula, at diag(1, lambda) for three exact eigenvalues.
Verdict criterion_product_formula() {
  const MatrixBackend mb{};
  const std::vector<Rational> lambdas = {Rational(2), Rational(3) / Rational(2),
                                         Rational(-5)};
  gen::Rng rng(9103);
  for (const Rational& lambda : lambdas) {
    const DualizablePair<MatrixBackend> pair =
        dualizable_from_matrix(diagonal({Rational(1), lambda}));
    for (int i = 0; i < 100; ++i) {
      const ThetaSpec spec = gen::theta_spec(rng, 8, 10);
      const MatrixMorphism expected =
          MatrixMorphism::scalar(oracle::product_formula(lambda, spec.exponents.labels()));
      if (theta(spec, pair, mb) != expected)
        return "spec " + spec.to_string() + " at lambda " + to_string(lambda) +
               " disagrees with the product formula";
    }
  }
  return std::nullopt;
}

// 4. Closure is cyclic: both composition orders of a cyclic pair close to
//    the same multiset; matrix traces agree on both composite orders.
Verdict criterion_cyclicity() {
  gen::Rng rng(9104);
  for (int i = 0; i < 1000; ++i) {
    const auto [f, g] = gen::cyclic_pair(rng, 6, 10);
    if (trace_close(compose(f, g)) != trace_close(compose(g, f)))
      return "closure order mismatch at case " + std::to_string(i) + ": f=" +
             f.to_string() + " g=" + g.to_string();
  }
  for (int i = 0; i < 500; ++i) {
    const std::size_t m = 1 + rng.below(4), n = 1 + rng.below(4);
    const MatrixMorphism a = gen::matrix(rng, n, m, 5);
    const MatrixMorphism b = gen::matrix(rng, m, n, 5);
    if (classical_trace(mat_mul(a, b)) != classical_trace(mat_mul(b, a)))
      return "matrix trace cyclicity failed at case " + std::to_string(i);
  }
  return std::nullopt;
}

// 5. Naturality of closure: evaluating a closed-up bordism equals taking the
//    categorical trace of the evaluated open bordism.
Verdict criterion_naturality() {
  const MatrixBackend mb{};
  gen::Rng rng(9105);
  // Object dimension is dim^(word length); cap the word as the base grows.
  static constexpr std::size_t max_len_for_dim[] = {0, 6, 3, 2, 1};
  for (int i = 0; i < 500; ++i) {
    const std::size_t dim = 1 + rng.below(4);
    const Bordism b = gen::endomorphism(rng, max_len_for_dim[dim], 3, 1);
    const DualizablePair<MatrixBackend> pair =
        dualizable_from_matrix(gen::invertible_matrix(rng, dim));
    const MatrixMorphism closed = evaluate(trace_close(b), pair, mb);
    const MatrixMorphism image = evaluate(b, pair, mb);
    const DualizablePair<MatrixBackend> ambient =
        dualizable_from_matrix(MatrixMorphism::identity(image.rows()));
    if (closed != generic_trace(ambient, image, mb))
      return "trace naturality failed at case " + std::to_string(i) + ": b=" +
             b.to_string();
  }
  return std::nullopt;
}

// 6. Zig-zag collapse: exhaustively over every sign word of length <= 6 in
//    the diagram model, and at matrix dims <= 4.
Verdict criterion_zigzag() {
  const CobBackend cb{};
  for (std::size_t len = 0; len <= 6; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::vector<Sign> signs(len);
      for (std::size_t i = 0; i < len; ++i)
        signs[i] = (bits >> i) & 1 ? Sign::minus : Sign::plus;
      const BoundaryObject w{std::move(signs)};
      if (!zigzags_hold(cob_pair(w, identity(w)), cb))
        return "zig-zag failed on word " + w.to_string();
    }
  }
  const MatrixBackend mb{};
  gen::Rng rng(9106);
  for (std::size_t dim = 1; dim <= 4; ++dim)
    for (int i = 0; i < 25; ++i)
      if (!zigzags_hold(dualizable_from_matrix(gen::invertible_matrix(rng, dim)), mb))
        return "matrix zig-zag failed at dim " + std::to_string(dim);
  return std::nullopt;
}

// 7. Generation at bounded scale: the exponent families {1} and {-1} hit
//    every multiset with <= 5 circles and labels in [-5,5]; {2} misses {1}
//    by divisibility and {1,1} misses {3} by component count.
Verdict criterion_witnesses() {
  const ThetaSpec plus_one = ThetaSpec::parse("theta[1]");
  const ThetaSpec minus_one = ThetaSpec::parse("theta[-1]");
  std::size_t targets = 0;
  std::vector<Int> labels;
  // Enumerates nondecreasing label sequences of each size, i.e. multisets.
  std::function<Verdict(std::size_t, long)> visit = [&](std::size_t size,
                                                        long lowest) -> Verdict {
    if (labels.size() == size) {
      ++targets;
      ScalarMultiset target;
      for (const Int& l : labels) target.add(l);
      for (const ThetaSpec* spec : {&plus_one, &minus_one}) {
        const auto witness = is_generating_witness(*spec, target, 5);
        if (!witness)
          return "no witness for " + spec->to_string() + " on " + target.to_string();
        if (act_on_theta(*witness, *spec) != target)
          return "witness for " + spec->to_string() + " on " + target.to_string() +
                 " fails validation";
      }
      return std::nullopt;
    }
    for (long v = lowest; v <= 5; ++v) {
      labels.push_back(Int(v));
      if (Verdict bad = visit(size, v)) return bad;
      labels.pop_back();
    }
    return std::nullopt;
  };
  for (std::size_t size = 0; size <= 5; ++size)
    if (Verdict bad = visit(size, -5)) return bad;
  if (targets != 4368)
    return "expected 4368 target multisets, enumerated " + std::to_string(targets);

  ScalarMultiset one, three;
  one.add(Int(1));
  three.add(Int(3));
  if (is_generating_witness(ThetaSpec::parse("theta[2]"), one, 5))
    return "theta[2] must not reach {1}";
  if (is_generating_witness(ThetaSpec::parse("theta[1,1]"), three, 5))
    return "theta[1,1] must not reach {3}";
  return std::nullopt;
}

// 8. Composition agrees with the path-following port-graph oracle, and
//    denotation inverts quotation, on random diagrams.
Verdict criterion_oracles() {
  gen::Rng rng(9108);
  for (int i = 0; i < 1000; ++i) {
    const auto [f, g] = gen::composable_pair(rng, 6, 9);
    if (compose(f, g) != oracle::compose_by_path_following(f, g))
      return "compose disagrees with the port-graph oracle: f=" + f.to_string() +
             " g=" + g.to_string();
  }
  for (int i = 0; i < 1000; ++i) {
    const Bordism b = gen::any_bordism(rng, 6, 9);
    if (denote(quote(b)) != b)
      return "denote(quote(b)) != b for b=" + b.to_string();
  }
  return std::nullopt;
}

// 9. The algebraic-law suite: associativity, interchange, units, symmetry
//    naturality and involutivity, and the scalar monoid laws, 1000 cases.
Verdict criterion_laws() {
  const CheckReport report = check_laws(9109, 1000);
  if (report.failures != 0)
    return std::to_string(report.failures) + " law failures; first: " +
           (report.details.empty() ? std::string("(none recorded)") : report.details.front());
  return std::nullopt;
}

struct Criterion {
  std::string name;
  double budget_ms;  // 0 = no time budget
  Verdict (*body)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"worked gluing example", kBudgetFigureMs, criterion_figure},
      {"classification at the canonical point", kBudgetClassificationMs,
       criterion_classification},
      {"trace products vs direct rational arithmetic", kBudgetProductFormulaMs,
       criterion_product_formula},
      {"cyclicity of closure and matrix trace", kBudgetCyclicityMs, criterion_cyclicity},
      {"naturality of closure under evaluation", 0.0, criterion_naturality},
      {"zig-zag collapse, diagram and matrix models", 0.0, criterion_zigzag},
      {"generating witnesses at bound 5", kBudgetWitnessMs, criterion_witnesses},
      {"oracle equivalence for compose and quote", 0.0, criterion_oracles},
      {"algebraic-law suite, 1000 cases per law", kBudgetLawSuiteMs, criterion_laws},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    const Verdict verdict = c.body();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    const bool in_budget = c.budget_ms == 0.0 || ms < c.budget_ms;
    const bool pass = !verdict && in_budget;
    if (!pass) ++failures;

    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << c.name << "  ["
         << std::fixed << std::setprecision(2) << ms << " ms";
    if (c.budget_ms != 0.0)
      line << ", budget " << std::setprecision(0) << c.budget_ms << " ms";
    line << "]";
    if (verdict) line << "  -- " << *verdict;
    if (!verdict && !in_budget) line << "  -- over time budget";
    std::cout << line.str() << "\n";
  }

  if (failures == 0)
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " of " << criteria.size()
              << " criteria FAILED\n";
  return failures == 0 ? 0 : 1;
}
