#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cobz/numbers.hpp"

namespace cobz {

/**
 * A finite multiset of integers: the commutative monoid N[Z] of closed
 * diagrams (disjoint unions of labelled circles). The monoid operation is
 * multiset union; the unit is the empty multiset. Immutable in spirit:
 * mutating helpers are only used while a value is being built.
 */
class ScalarMultiset {
 public:
  ScalarMultiset() = default;

  explicit ScalarMultiset(const std::vector<Int>& labels) {
    for (const Int& l : labels) add(l);
  }

  void add(const Int& label, std::size_t multiplicity = 1) {
    if (multiplicity > 0) counts_[label] += multiplicity;
  }

  // Multiset union (the monoid operation).
  ScalarMultiset united(const ScalarMultiset& other) const {
    ScalarMultiset out = *this;
    for (const auto& [label, count] : other.counts_) out.counts_[label] += count;
    return out;
  }

  bool empty() const { return counts_.empty(); }

  // Total number of circles, counted with multiplicity.
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [label, count] : counts_) n += count;
    return n;
  }

  std::size_t count(const Int& label) const {
    auto it = counts_.find(label);
    return it == counts_.end() ? 0 : it->second;
  }

  // Labels in ascending order, repeated per multiplicity.
  std::vector<Int> labels() const {
    std::vector<Int> out;
    out.reserve(size());
    for (const auto& [label, count] : counts_)
      for (std::size_t i = 0; i < count; ++i) out.push_back(label);
    return out;
  }

  const std::map<Int, std::size_t>& counts() const { return counts_; }

  // Canonical text form: "{k1,k2,...}" ascending with repetition; "{}" if empty.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [label, count] : counts_) {
      for (std::size_t i = 0; i < count; ++i) {
        if (!first) out += ",";
        out += cobz::to_string(label);
        first = false;
      }
    }
    out += "}";
    return out;
  }

  friend bool operator==(const ScalarMultiset&, const ScalarMultiset&) = default;

 private:
  std::map<Int, std::size_t> counts_;
};

}  // namespace cobz
