#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cobz/errors.hpp"

namespace cobz {

// Orientation sign of a single boundary point.
enum class Sign : unsigned char { plus, minus };

constexpr Sign flipped(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/**
 * A finite word over {+,-}: the objects of the category. The empty word is
 * the tensor unit and prints as "1". Immutable value type.
 */
class BoundaryObject {
 public:
  BoundaryObject() = default;
  explicit BoundaryObject(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  // Parses a word like "++-"; "1" (alone) denotes the empty word.
  static BoundaryObject parse(std::string_view text) {
    if (text == "1") return BoundaryObject{};
    if (text.empty()) throw SyntaxError(1, {"1", "+", "-"}, "empty boundary word");
    std::vector<Sign> signs;
    signs.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '+') signs.push_back(Sign::plus);
      else if (text[i] == '-') signs.push_back(Sign::minus);
      else throw SyntaxError(i + 1, {"+", "-"}, "invalid sign character in boundary word");
    }
    return BoundaryObject{std::move(signs)};
  }

  static BoundaryObject point(Sign s) { return BoundaryObject{{s}}; }

  std::size_t size() const { return signs_.size(); }
  bool empty() const { return signs_.empty(); }
  Sign sign(std::size_t i) const { return signs_[i]; }
  const std::vector<Sign>& signs() const { return signs_; }

  // Tensor product of objects is concatenation.
  BoundaryObject tensor(const BoundaryObject& other) const {
    std::vector<Sign> out = signs_;
    out.insert(out.end(), other.signs_.begin(), other.signs_.end());
    return BoundaryObject{std::move(out)};
  }

  // The dual object: reverse the word and flip every sign.
  BoundaryObject dual() const {
    std::vector<Sign> out(signs_.rbegin(), signs_.rend());
    for (Sign& s : out) s = flipped(s);
    return BoundaryObject{std::move(out)};
  }

  // The empty word prints as "1" so serialized fields are never blank.
  std::string to_string() const {
    if (signs_.empty()) return "1";
    std::string out;
    out.reserve(signs_.size());
    for (Sign s : signs_) out.push_back(sign_char(s));
    return out;
  }

  friend bool operator==(const BoundaryObject&, const BoundaryObject&) = default;
  friend auto operator<=>(const BoundaryObject& a, const BoundaryObject& b) {
    return std::lexicographical_compare_three_way(a.signs_.begin(), a.signs_.end(),
                                                  b.signs_.begin(), b.signs_.end());
  }

 private:
  std::vector<Sign> signs_;
};

}  // namespace cobz
