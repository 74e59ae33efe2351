#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cobz/bordism.hpp"
#include "cobz/cob_backend.hpp"
#include "cobz/theta_spec.hpp"
#include "cobz/trace.hpp"

namespace cobz {

/**
 * A boundary word together with an invertible endomorphism of it: the data
 * at which a trace strategy can be applied. Validated on construction.
 */
class AutomorphismPoint {
 public:
  AutomorphismPoint(BoundaryObject object, Bordism automorphism)
      : object_(std::move(object)), automorphism_(std::move(automorphism)) {
    if (automorphism_.source() != object_ || automorphism_.target() != object_)
      throw NotEndomorphism("point: automorphism boundaries '" +
                            automorphism_.source().to_string() + "' -> '" +
                            automorphism_.target().to_string() + "' do not match the object '" +
                            object_.to_string() + "'");
    if (!is_invertible(automorphism_))
      throw NotInvertible("point: '" + automorphism_.to_string() +
                          "' is not a labelled permutation");
  }

  const BoundaryObject& object() const { return object_; }
  const Bordism& automorphism() const { return automorphism_; }

 private:
  BoundaryObject object_;
  Bordism automorphism_;
};

// The class of a closed diagram in N[Z]: just its circle multiset.
inline ScalarMultiset classify_scalar(const Bordism& b) {
  if (!b.arcs().empty())
    throw NotClosed("classify: '" + b.to_string() + "' still has boundary arcs");
  return b.circles();
}

// The trace strategy applied at a point of the diagram category itself,
// read off as a multiset of circle labels.
inline ScalarMultiset act_on_theta(const AutomorphismPoint& point, const ThetaSpec& spec) {
  const CobBackend backend{};
  const DualizablePair<CobBackend> pair = cob_pair(point.object(), point.automorphism());
  return classify_scalar(theta(spec, pair, backend));
}

namespace detail {

// A disjoint union of labelled cyclic permutations on all-plus points; the
// shape is a multiset of (cycle length, cycle label sum). Closing the k-th
// power of a cycle (m, S) yields gcd(m, k) circles labelled (k/gcd) * S, so
// these shapes exhaust what any automorphism can contribute to a trace.
struct CycleShape {
  std::size_t length;
  Int label_sum;
};

inline AutomorphismPoint realize_cycles(const std::vector<CycleShape>& cycles, const Int& bound) {
  std::size_t total = 0;
  for (const CycleShape& c : cycles) total += c.length;
  BoundaryObject word(std::vector<Sign>(total, Sign::plus));
  std::vector<Arc> arcs;
  arcs.reserve(total);
  std::size_t offset = 0;
  for (const CycleShape& c : cycles) {
    // Distribute the sum over the strands so no label exceeds the bound.
    Int remaining = c.label_sum;
    for (std::size_t i = 0; i < c.length; ++i) {
      Int piece = remaining;
      if (piece > bound) piece = bound;
      if (piece < -bound) piece = -bound;
      remaining -= piece;
      arcs.emplace_back(Port{Side::source, offset + i},
                        Port{Side::target, offset + (i + 1) % c.length}, std::move(piece));
    }
    offset += c.length;
  }
  Bordism automorphism = Bordism::make(word, word, std::move(arcs));
  return AutomorphismPoint(std::move(word), std::move(automorphism));
}

// Depth-first enumeration of nondecreasing (length, sum) sequences with the
// given total strand budget; first hit wins, so the search is deterministic.
template <typename Visit>
bool enumerate_shapes(std::vector<CycleShape>& acc, std::size_t budget, std::size_t min_length,
                      const Int& min_sum_at_min_length, std::size_t bound, Visit&& visit) {
  if (!acc.empty() && visit(acc)) return true;
  for (std::size_t m = min_length; m <= budget; ++m) {
    const Int lo = -Int(m) * Int(bound);
    const Int hi = Int(m) * Int(bound);
    for (Int s = (m == min_length ? min_sum_at_min_length : lo); s <= hi; ++s) {
      acc.push_back(CycleShape{m, s});
      if (enumerate_shapes(acc, budget - m, m, s, bound, visit)) return true;
      acc.pop_back();
    }
  }
  return false;
}

}  // namespace detail

/**
 * Searches for a point witnessing that the strategy `spec` reaches `target`:
 * a point p with act_on_theta(p, spec) == target, or nullopt.
 *
 * For the singleton strategies theta[1] / theta[-1] the witness is written
 * down directly (one strand per requested circle) — these strategies reach
 * everything. Otherwise two obstructions are checked first:
 *
 *   - component count: a nonempty target needs at least one circle per
 *     exponent, since every trace over a nonempty word closes something;
 *   - divisibility: a single-circle target of theta[k] forces a single cycle
 *     whose closure label is a multiple of k (all labels 0 when k = 0).
 *
 * Anything else falls to exhaustive bounded search over cycle shapes (total
 * strands and per-strand label magnitudes at most search_bound); only the
 * multiset of (cycle length, label sum) pairs can affect a trace, so the
 * search space is complete up to the bound. Deterministic throughout.
 */
/**
 * Names the obstruction when the target is provably unreachable by traces
 * over the given exponent family, independent of any search bound. Returns
 * nothing when no known obstruction applies (a witness may or may not exist).
 */
inline std::optional<std::string> generation_obstruction(const ThetaSpec& spec,
                                                         const ScalarMultiset& target) {
  if (target.empty()) return std::nullopt;  // the empty point reaches the empty target
  const std::vector<Int> exponents = spec.exponents.labels();
  const std::size_t n = exponents.size();
  if (n == 0) return "the empty family only produces the empty scalar";
  if (target.size() < n)
    return "component count: every output has at least " + std::to_string(n) +
           " circles, target has " + std::to_string(target.size());
  if (n == 1) {
    const Int& k = exponents[0];
    if (k == 0 && target.size() != target.count(Int(0)))
      return "divisibility: exponent 0 only produces circles labelled 0";
    if (k != 0 && target.size() == 1 && target.labels()[0] % k != 0)
      return "divisibility: a single output circle must carry a multiple of " + to_string(k);
  }
  return std::nullopt;
}

inline std::optional<AutomorphismPoint> is_generating_witness(const ThetaSpec& spec,
                                                              const ScalarMultiset& target,
                                                              std::size_t search_bound) {
  auto validated = [&](AutomorphismPoint point) -> std::optional<AutomorphismPoint> {
    if (act_on_theta(point, spec) == target) return point;
    return std::nullopt;
  };

  // The empty point: every trace of the empty endomorphism is empty.
  if (target.empty())
    return validated(AutomorphismPoint(BoundaryObject{}, identity(BoundaryObject{})));
  if (spec.exponents.empty()) return std::nullopt;  // unit scalar never reaches a nonempty target

  const std::vector<Int> exponents = spec.exponents.labels();
  const std::size_t n = exponents.size();

  // theta[1] / theta[-1]: one strand per target circle, labelled to match.
  if (n == 1 && (exponents[0] == 1 || exponents[0] == -1)) {
    const std::vector<Int> labels = target.labels();
    BoundaryObject word(std::vector<Sign>(labels.size(), Sign::plus));
    std::vector<Arc> arcs;
    arcs.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      arcs.emplace_back(Port{Side::source, i}, Port{Side::target, i},
                        exponents[0] == 1 ? labels[i] : Int(-labels[i]));
    return validated(AutomorphismPoint(word, Bordism::make(word, word, std::move(arcs))));
  }

  // Component-count and divisibility obstructions prune before any search.
  if (generation_obstruction(spec, target)) return std::nullopt;

  std::optional<AutomorphismPoint> found;
  std::vector<detail::CycleShape> acc;
  detail::enumerate_shapes(acc, search_bound, 1, -Int(search_bound), search_bound,
                           [&](const std::vector<detail::CycleShape>& cycles) {
                             AutomorphismPoint candidate =
                                 detail::realize_cycles(cycles, Int(search_bound));
                             if (act_on_theta(candidate, spec) == target) {
                               found = std::move(candidate);
                               return true;
                             }
                             return false;
                           });
  return found;
}

}  // namespace cobz
