#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cobz/bordism.hpp"

namespace cobz {

/**
 * A canonical serial decomposition of a bordism into four generator stages
 * plus circles:
 *
 *   stage A: id(src) (x) one cup per target-target arc   src -> w1
 *   stage B: one labelled strand per w1 position          w1 -> w1
 *   stage C: adjacent transpositions                      w1 -> w2
 *   stage D: one cap per source-source arc (x) id(tgt)    w2 -> tgt
 *
 * where w1 = src . (cup pairs) and w2 = (cap slots) . tgt. Composing the
 * stages back together (in any symmetric monoidal category with the relevant
 * duals) reproduces the bordism. Both the term quoter and the backend
 * evaluator consume this one decomposition, so they agree by construction.
 */
struct LayeredForm {
  BoundaryObject src, tgt;
  std::vector<std::pair<Sign, Sign>> cups;  // per target-target arc, canonical order
  std::vector<std::pair<Sign, Sign>> caps;  // per source-source arc, canonical order
  std::vector<Sign> w1;                     // signs of the word after stage A
  std::vector<Int> labels;                  // stage B: label carried at each w1 position
  std::vector<std::size_t> transpositions;  // stage C: swap (p, p+1), applied left to right
  ScalarMultiset circles;
};

inline LayeredForm layered_form(const Bordism& b) {
  LayeredForm lf;
  lf.src = b.source();
  lf.tgt = b.target();
  lf.circles = b.circles();

  const std::size_t m = b.source().size();
  // Split the canonical arc list by shape, preserving canonical order.
  std::vector<const Arc*> through, caps, cups;
  for (const Arc& a : b.arcs()) {
    if (a.lo().side != a.hi().side) through.push_back(&a);
    else if (a.lo().side == Side::source) caps.push_back(&a);
    else cups.push_back(&a);
  }

  lf.w1.assign(b.source().signs().begin(), b.source().signs().end());
  for (const Arc* a : cups) {
    lf.w1.push_back(b.target().sign(a->lo().index));
    lf.w1.push_back(b.target().sign(a->hi().index));
    lf.cups.emplace_back(b.target().sign(a->lo().index), b.target().sign(a->hi().index));
  }
  for (const Arc* a : caps)
    lf.caps.emplace_back(b.source().sign(a->lo().index), b.source().sign(a->hi().index));

  // Route every w1 strand to its slot in w2 = (cap slots) . tgt. The arc's
  // label rides on the strand of its lower endpoint.
  const std::size_t cap_slots = 2 * caps.size();
  std::vector<std::size_t> dest(lf.w1.size());
  lf.labels.assign(lf.w1.size(), Int(0));
  for (const Arc* a : through) {
    dest[a->lo().index] = cap_slots + a->hi().index;
    lf.labels[a->lo().index] = a->label();
  }
  for (std::size_t q = 0; q < caps.size(); ++q) {
    dest[caps[q]->lo().index] = 2 * q;
    dest[caps[q]->hi().index] = 2 * q + 1;
    lf.labels[caps[q]->lo().index] = caps[q]->label();
  }
  for (std::size_t r = 0; r < cups.size(); ++r) {
    dest[m + 2 * r] = cap_slots + cups[r]->lo().index;
    dest[m + 2 * r + 1] = cap_slots + cups[r]->hi().index;
    lf.labels[m + 2 * r] = cups[r]->label();
  }

  // Bubble sort; the recorded swaps are the canonical transposition sequence.
  for (std::size_t pass = 0; pass + 1 < dest.size(); ++pass) {
    for (std::size_t p = 0; p + 1 < dest.size(); ++p) {
      if (dest[p] > dest[p + 1]) {
        std::swap(dest[p], dest[p + 1]);
        lf.transpositions.push_back(p);
      }
    }
  }
  return lf;
}

}  // namespace cobz
