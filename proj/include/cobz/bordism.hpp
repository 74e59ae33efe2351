#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cobz/boundary.hpp"
#include "cobz/errors.hpp"
#include "cobz/numbers.hpp"
#include "cobz/scalar_multiset.hpp"

namespace cobz {

// Which boundary word a port belongs to. Source ports precede target ports
// in the canonical total order, so the enum order is load-bearing.
enum class Side : unsigned char { source, target };

struct Port {
  Side side;
  std::size_t index;

  friend bool operator==(const Port&, const Port&) = default;
  friend auto operator<=>(const Port&, const Port&) = default;
};

inline std::string to_string(const Port& p) {
  return (p.side == Side::source ? "s" : "t") + std::to_string(p.index);
}

/**
 * An unordered pair of distinct boundary ports carrying an integer label:
 * one interval component of a diagram. Stored with endpoints ordered, so a
 * sorted arc list is a canonical form.
 */
class Arc {
 public:
  Arc(Port p, Port q, Int label) : lo_(p), hi_(q), label_(std::move(label)) {
    if (hi_ < lo_) std::swap(lo_, hi_);
    if (lo_ == hi_) throw Error("arc endpoints must be distinct ports");
  }

  const Port& lo() const { return lo_; }
  const Port& hi() const { return hi_; }
  const Int& label() const { return label_; }

  friend bool operator==(const Arc&, const Arc&) = default;
  // Canonical order: by endpoints, then by label. (Int lacks <=>.)
  friend bool operator<(const Arc& x, const Arc& y) {
    if (x.lo_ != y.lo_) return x.lo_ < y.lo_;
    if (x.hi_ != y.hi_) return x.hi_ < y.hi_;
    return x.label_ < y.label_;
  }

 private:
  Port lo_, hi_;
  Int label_;
};

inline std::string to_string(const Arc& a) {
  return "(" + to_string(a.lo()) + "," + to_string(a.hi()) + "," + to_string(a.label()) + ")";
}

/**
 * A morphism of the category: a perfect matching of the boundary ports of
 * src and tgt by labelled arcs, together with a multiset of labelled circles
 * (closed components). Only constructible in canonical form via make(), which
 * validates the matching and the sign discipline:
 *
 *   - a source-target arc joins ports of equal sign (a through strand),
 *   - a source-source arc joins ports of opposite sign (a cap),
 *   - a target-target arc joins ports of opposite sign (a cup).
 *
 * Equality of canonical values is equality of morphisms.
 */
class Bordism {
 public:
  static Bordism make(BoundaryObject src, BoundaryObject tgt, std::vector<Arc> arcs,
                      ScalarMultiset circles = {}) {
    std::sort(arcs.begin(), arcs.end());
    validate(src, tgt, arcs);
    return Bordism(std::move(src), std::move(tgt), std::move(arcs), std::move(circles));
  }

  const BoundaryObject& source() const { return src_; }
  const BoundaryObject& target() const { return tgt_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const ScalarMultiset& circles() const { return circles_; }

  // Canonical serialization; byte equality of these strings is morphism equality.
  std::string to_string() const {
    std::string out = "src=" + src_.to_string() + "; tgt=" + tgt_.to_string() + "; arcs=[";
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      if (i > 0) out += ",";
      out += cobz::to_string(arcs_[i]);
    }
    out += "]; circles=[";
    const std::vector<Int> labels = circles_.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i > 0) out += ",";
      out += cobz::to_string(labels[i]);
    }
    out += "]";
    return out;
  }

  friend bool operator==(const Bordism&, const Bordism&) = default;

 private:
  Bordism(BoundaryObject src, BoundaryObject tgt, std::vector<Arc> arcs, ScalarMultiset circles)
      : src_(std::move(src)), tgt_(std::move(tgt)), arcs_(std::move(arcs)),
        circles_(std::move(circles)) {}

  static void validate(const BoundaryObject& src, const BoundaryObject& tgt,
                       const std::vector<Arc>& arcs) {
    if (arcs.size() * 2 != src.size() + tgt.size())
      throw Error("bordism: arcs do not form a perfect matching of the boundary ports");
    std::vector<bool> seen_src(src.size(), false), seen_tgt(tgt.size(), false);
    auto visit = [&](const Port& p) {
      std::vector<bool>& seen = p.side == Side::source ? seen_src : seen_tgt;
      const std::size_t limit = p.side == Side::source ? src.size() : tgt.size();
      if (p.index >= limit) throw Error("bordism: arc endpoint out of range");
      if (seen[p.index]) throw Error("bordism: port matched twice");
      seen[p.index] = true;
    };
    auto sign_of = [&](const Port& p) {
      return p.side == Side::source ? src.sign(p.index) : tgt.sign(p.index);
    };
    for (const Arc& a : arcs) {
      visit(a.lo());
      visit(a.hi());
      const bool through = a.lo().side != a.hi().side;
      const bool signs_equal = sign_of(a.lo()) == sign_of(a.hi());
      if (through != signs_equal)
        throw Error("bordism: arc " + cobz::to_string(a) + " violates the sign discipline");
    }
  }

  BoundaryObject src_, tgt_;
  std::vector<Arc> arcs_;
  ScalarMultiset circles_;
};

// ---------------------------------------------------------------------------
// Structural operations
// ---------------------------------------------------------------------------

inline Bordism identity(const BoundaryObject& x) {
  std::vector<Arc> arcs;
  arcs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    arcs.emplace_back(Port{Side::source, i}, Port{Side::target, i}, Int(0));
  return Bordism::make(x, x, std::move(arcs));
}

/**
 * Sequential composition in diagrammatic order: "f then g". Target ports of f
 * are glued positionally onto source ports of g; labels add along each glued
 * chain (the sign discipline guarantees orientations agree, so no label is
 * negated). Chains with both ends free become arcs of the composite; closed
 * chains become circles labelled by their total.
 */
inline Bordism compose(const Bordism& f, const Bordism& g) {
  if (f.target() != g.source())
    throw BoundaryMismatch("compose: target '" + f.target().to_string() +
                           "' of the first morphism does not match source '" +
                           g.source().to_string() + "' of the second");

  const std::size_t fs = f.source().size();
  const std::size_t ft = f.target().size();
  const std::size_t gt = g.target().size();
  // Node layout: [0,fs) source ports of f; [fs,fs+ft) the glued middle ports
  // (target i of f identified with source i of g); [fs+ft, fs+ft+gt) target
  // ports of g. Every arc of f or g becomes an edge; middle nodes get degree
  // two, outer nodes degree one, so components are paths or cycles.
  struct Edge {
    std::size_t a, b;
    const Int* label;
  };
  std::vector<Edge> edges;
  edges.reserve(f.arcs().size() + g.arcs().size());
  auto f_node = [&](const Port& p) { return p.side == Side::source ? p.index : fs + p.index; };
  auto g_node = [&](const Port& p) {
    return p.side == Side::source ? fs + p.index : fs + ft + p.index;
  };
  for (const Arc& a : f.arcs()) edges.push_back({f_node(a.lo()), f_node(a.hi()), &a.label()});
  for (const Arc& a : g.arcs()) edges.push_back({g_node(a.lo()), g_node(a.hi()), &a.label()});

  const std::size_t node_count = fs + ft + gt;
  std::vector<std::array<int, 2>> at(node_count, {-1, -1});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t node : {edges[e].a, edges[e].b}) {
      std::array<int, 2>& slots = at[node];
      slots[slots[0] < 0 ? 0 : 1] = static_cast<int>(e);
    }
  }

  auto is_outer = [&](std::size_t node) { return node < fs || node >= fs + ft; };
  auto outer_port = [&](std::size_t node) {
    return node < fs ? Port{Side::source, node} : Port{Side::target, node - fs - ft};
  };
  auto other_end = [&](const Edge& e, std::size_t from) { return e.a == from ? e.b : e.a; };

  std::vector<bool> walked(edges.size(), false);
  std::vector<Arc> arcs;
  arcs.reserve((fs + gt) / 2);
  // Paths: walk inward from each free end, accumulating labels.
  for (std::size_t start = 0; start < node_count; ++start) {
    if (!is_outer(start)) continue;
    int e = at[start][0];
    if (walked[e]) continue;
    std::size_t node = start;
    Int total(0);
    while (true) {
      walked[e] = true;
      total += *edges[e].label;
      node = other_end(edges[e], node);
      if (is_outer(node)) break;
      e = at[node][0] == e ? at[node][1] : at[node][0];
    }
    arcs.emplace_back(outer_port(start), outer_port(node), std::move(total));
  }
  // Cycles: whatever edges remain lie on closed chains through middle nodes.
  ScalarMultiset circles = f.circles().united(g.circles());
  for (std::size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (walked[e0]) continue;
    std::size_t node = edges[e0].a;
    int e = static_cast<int>(e0);
    Int total(0);
    while (!walked[e]) {
      walked[e] = true;
      total += *edges[e].label;
      node = other_end(edges[e], node);
      e = at[node][0] == e ? at[node][1] : at[node][0];
    }
    circles.add(total);
  }

  return Bordism::make(f.source(), g.target(), std::move(arcs), std::move(circles));
}

// Disjoint union placed side by side: g's ports are shifted past f's.
inline Bordism tensor(const Bordism& f, const Bordism& g) {
  const std::size_t ds = f.source().size();
  const std::size_t dt = f.target().size();
  auto shift = [&](const Port& p) {
    return Port{p.side, p.index + (p.side == Side::source ? ds : dt)};
  };
  std::vector<Arc> arcs = f.arcs();
  arcs.reserve(arcs.size() + g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.emplace_back(shift(a.lo()), shift(a.hi()), a.label());
  return Bordism::make(f.source().tensor(g.source()), f.target().tensor(g.target()),
                       std::move(arcs), f.circles().united(g.circles()));
}

// The symmetry a (x) b -> b (x) a: crossing strands, all labels 0.
inline Bordism braiding(const BoundaryObject& a, const BoundaryObject& b) {
  std::vector<Arc> arcs;
  arcs.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    arcs.emplace_back(Port{Side::source, i}, Port{Side::target, b.size() + i}, Int(0));
  for (std::size_t j = 0; j < b.size(); ++j)
    arcs.emplace_back(Port{Side::source, a.size() + j}, Port{Side::target, j}, Int(0));
  return Bordism::make(a.tensor(b), b.tensor(a), std::move(arcs));
}

// The order in which the two opposite signs appear, left to right.
enum class OrientationOrder : unsigned char { minus_plus, plus_minus };

// Evaluation arc: joins the two source points of an oppositely-signed pair.
inline Bordism cap(OrientationOrder order) {
  const Sign first = order == OrientationOrder::minus_plus ? Sign::minus : Sign::plus;
  BoundaryObject src({first, flipped(first)});
  return Bordism::make(std::move(src), BoundaryObject{},
                       {Arc(Port{Side::source, 0}, Port{Side::source, 1}, Int(0))});
}

// Coevaluation arc: births an oppositely-signed pair in the target.
inline Bordism cup(OrientationOrder order) {
  const Sign first = order == OrientationOrder::minus_plus ? Sign::minus : Sign::plus;
  BoundaryObject tgt({first, flipped(first)});
  return Bordism::make(BoundaryObject{}, std::move(tgt),
                       {Arc(Port{Side::target, 0}, Port{Side::target, 1}, Int(0))});
}

// The generating automorphism of the + point: a single strand labelled k.
inline Bordism alpha(Int k) {
  const BoundaryObject pt = BoundaryObject::point(Sign::plus);
  return Bordism::make(pt, pt, {Arc(Port{Side::source, 0}, Port{Side::target, 0}, std::move(k))});
}

/**
 * Duality data for a boundary word x: the dual object together with the
 * evaluation dual() (x) x -> 1 and coevaluation 1 -> x (x) dual(). Arcs are
 * nested ("rainbow"): point i of x pairs with point (n-1-i) of the dual, so
 * no crossings are needed and both zig-zag identities hold on the nose.
 */
struct DualityData {
  BoundaryObject dual;
  Bordism ev;
  Bordism coev;
};

inline DualityData duality_data(const BoundaryObject& x) {
  const std::size_t n = x.size();
  BoundaryObject dual = x.dual();
  std::vector<Arc> ev_arcs, coev_arcs;
  ev_arcs.reserve(n);
  coev_arcs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ev_arcs.emplace_back(Port{Side::source, n - 1 - i}, Port{Side::source, n + i}, Int(0));
    coev_arcs.emplace_back(Port{Side::target, i}, Port{Side::target, 2 * n - 1 - i}, Int(0));
  }
  Bordism ev = Bordism::make(dual.tensor(x), BoundaryObject{}, std::move(ev_arcs));
  Bordism coev = Bordism::make(BoundaryObject{}, x.tensor(dual), std::move(coev_arcs));
  return DualityData{std::move(dual), std::move(ev), std::move(coev)};
}

/**
 * Closes an endomorphism into a scalar diagram by the categorical trace:
 * coev ; (f (x) id_dual) ; braiding ; ev. Equivalent to gluing each target
 * port directly back onto the matching source port.
 */
inline Bordism trace_close(const Bordism& f) {
  if (f.source() != f.target())
    throw NotEndomorphism("trace: requires source == target, got '" + f.source().to_string() +
                          "' -> '" + f.target().to_string() + "'");
  const DualityData dd = duality_data(f.source());
  Bordism m = compose(dd.coev, tensor(f, identity(dd.dual)));
  m = compose(m, braiding(f.source(), dd.dual));
  return compose(m, dd.ev);
}

// Invertible means: a pure labelled permutation. No circles, every arc a
// through strand (the sign discipline then forces sign preservation).
inline bool is_invertible(const Bordism& f) {
  if (!f.circles().empty()) return false;
  for (const Arc& a : f.arcs())
    if (a.lo().side == a.hi().side) return false;
  return true;
}

// Inverse permutation with negated labels; compose(f, inverse_of(f)) == identity.
inline Bordism inverse_of(const Bordism& f) {
  if (!is_invertible(f))
    throw NotInvertible("inverse: '" + f.to_string() + "' is not a labelled permutation");
  std::vector<Arc> arcs;
  arcs.reserve(f.arcs().size());
  for (const Arc& a : f.arcs())
    arcs.emplace_back(Port{Side::source, a.hi().index}, Port{Side::target, a.lo().index},
                      -a.label());
  return Bordism::make(f.target(), f.source(), std::move(arcs));
}

// k-th power of an endomorphism; k = 0 gives the identity, negative k
// requires invertibility. Binary so huge exponents stay cheap.
inline Bordism power(const Bordism& f, const Int& k) {
  if (f.source() != f.target())
    throw NotEndomorphism("power: requires source == target, got '" + f.source().to_string() +
                          "' -> '" + f.target().to_string() + "'");
  if (k < 0) return power(inverse_of(f), Int(-k));
  Bordism result = identity(f.source());
  Bordism base = f;
  Int e = k;
  while (e > 0) {
    if ((e & 1) != 0) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

}  // namespace cobz
