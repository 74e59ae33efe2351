#pragma once

#include <cassert>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cobz/boundary.hpp"
#include "cobz/numbers.hpp"

namespace cobz {

/**
 * Object expressions of the term language: formal tensor trees over the unit
 * and the two point generators. Two ObjExprs denote the same object iff their
 * flattenings agree; operator== implements that judgment, while same_tree()
 * compares the trees themselves (used by the parser round-trip).
 * Immutable; cheap to copy (shared structure).
 */
class ObjExpr {
 public:
  enum class Kind : unsigned char { unit, plus_pt, minus_pt, tensor };

  ObjExpr() : node_(leaf(Kind::unit)) {}

  static ObjExpr unit() { return ObjExpr(leaf(Kind::unit)); }
  static ObjExpr plus_pt() { return ObjExpr(leaf(Kind::plus_pt)); }
  static ObjExpr minus_pt() { return ObjExpr(leaf(Kind::minus_pt)); }
  static ObjExpr tensor(ObjExpr l, ObjExpr r) {
    return ObjExpr(std::make_shared<const Node>(Node{Kind::tensor, l.node_, r.node_}));
  }

  // Left-associated tensor chain spelling out a word; the empty word is the unit.
  static ObjExpr of_word(const BoundaryObject& w) {
    if (w.empty()) return unit();
    ObjExpr e = of_point(w.sign(0));
    for (std::size_t i = 1; i < w.size(); ++i) e = tensor(e, of_point(w.sign(i)));
    return e;
  }

  static ObjExpr of_point(Sign s) { return s == Sign::plus ? plus_pt() : minus_pt(); }

  Kind kind() const { return node_->kind; }
  ObjExpr left() const { assert(kind() == Kind::tensor); return ObjExpr(node_->l); }
  ObjExpr right() const { assert(kind() == Kind::tensor); return ObjExpr(node_->r); }

  BoundaryObject flatten() const {
    std::vector<Sign> signs;
    flatten_into(node_.get(), signs);
    return BoundaryObject(std::move(signs));
  }

  // Minimal-parentheses form; '*' is left-associative.
  std::string to_string() const { return print(node_.get(), 0); }

  bool same_tree(const ObjExpr& other) const { return same(node_.get(), other.node_.get()); }

  // Judgmental equality: equal flattenings.
  friend bool operator==(const ObjExpr& a, const ObjExpr& b) { return a.flatten() == b.flatten(); }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> l, r;
  };

  explicit ObjExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::shared_ptr<const Node> leaf(Kind k) {
    return std::make_shared<const Node>(Node{k, nullptr, nullptr});
  }

  static void flatten_into(const Node* n, std::vector<Sign>& out) {
    switch (n->kind) {
      case Kind::unit: return;
      case Kind::plus_pt: out.push_back(Sign::plus); return;
      case Kind::minus_pt: out.push_back(Sign::minus); return;
      case Kind::tensor:
        flatten_into(n->l.get(), out);
        flatten_into(n->r.get(), out);
        return;
    }
  }

  static std::string print(const Node* n, int min_prec) {
    switch (n->kind) {
      case Kind::unit: return "1";
      case Kind::plus_pt: return "+";
      case Kind::minus_pt: return "-";
      case Kind::tensor: {
        std::string s = print(n->l.get(), 0) + "*" + print(n->r.get(), 1);
        return min_prec > 0 ? "(" + s + ")" : s;
      }
    }
    return {};  // unreachable
  }

  static bool same(const Node* a, const Node* b) {
    if (a->kind != b->kind) return false;
    if (a->kind != Kind::tensor) return true;
    return same(a->l.get(), b->l.get()) && same(a->r.get(), b->r.get());
  }

  std::shared_ptr<const Node> node_;
};

/**
 * Terms of the diagram language. ';' is sequential composition read left to
 * right ("f ; g" = f then g), '*' is the tensor; '*' binds tighter and both
 * associate left. Immutable trees with shared structure.
 */
class Term {
 public:
  enum class Kind : unsigned char { id, swap, ev, coev, alpha, seq, par };

  static Term id(ObjExpr x) { return Term(node(Kind::id, std::move(x), {}, 0, nullptr, nullptr)); }
  static Term swap(ObjExpr a, ObjExpr b) {
    return Term(node(Kind::swap, std::move(a), std::move(b), 0, nullptr, nullptr));
  }
  static Term ev() { return Term(node(Kind::ev, {}, {}, 0, nullptr, nullptr)); }
  static Term coev() { return Term(node(Kind::coev, {}, {}, 0, nullptr, nullptr)); }
  static Term alpha(Int k) { return Term(node(Kind::alpha, {}, {}, std::move(k), nullptr, nullptr)); }
  static Term seq(Term f, Term g) {
    return Term(node(Kind::seq, {}, {}, 0, std::move(f.node_), std::move(g.node_)));
  }
  static Term par(Term f, Term g) {
    return Term(node(Kind::par, {}, {}, 0, std::move(f.node_), std::move(g.node_)));
  }

  Kind kind() const { return node_->kind; }
  const ObjExpr& obj_a() const { return node_->a; }
  const ObjExpr& obj_b() const { return node_->b; }
  const Int& exponent() const { return node_->k; }
  Term lhs() const { assert(is_binary()); return Term(node_->l); }
  Term rhs() const { assert(is_binary()); return Term(node_->r); }
  bool is_binary() const { return kind() == Kind::seq || kind() == Kind::par; }

  std::string to_string() const { return print(node_.get(), 0); }

  // Structural equality (object subtrees compared as trees).
  friend bool operator==(const Term& a, const Term& b) { return same(a.node_.get(), b.node_.get()); }

 private:
  struct Node {
    Kind kind;
    ObjExpr a, b;  // id uses a; swap uses a and b
    Int k;         // alpha only
    std::shared_ptr<const Node> l, r;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> node(Kind kind, ObjExpr a, ObjExpr b, Int k,
                                          std::shared_ptr<const Node> l,
                                          std::shared_ptr<const Node> r) {
    return std::make_shared<const Node>(
        Node{kind, std::move(a), std::move(b), std::move(k), std::move(l), std::move(r)});
  }

  // Precedence: seq 0 < par 1 < atoms 2; left-associative, so the right
  // operand is printed at one level higher.
  static std::string print(const Node* n, int min_prec) {
    switch (n->kind) {
      case Kind::id: return "id(" + n->a.to_string() + ")";
      case Kind::swap: return "swap(" + n->a.to_string() + "," + n->b.to_string() + ")";
      case Kind::ev: return "ev";
      case Kind::coev: return "coev";
      case Kind::alpha: return "a^" + cobz::to_string(n->k);
      case Kind::seq: {
        std::string s = print(n->l.get(), 0) + " ; " + print(n->r.get(), 1);
        return min_prec > 0 ? "(" + s + ")" : s;
      }
      case Kind::par: {
        std::string s = print(n->l.get(), 1) + " * " + print(n->r.get(), 2);
        return min_prec > 1 ? "(" + s + ")" : s;
      }
    }
    return {};  // unreachable
  }

  static bool same(const Node* a, const Node* b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::id: return a->a.same_tree(b->a);
      case Kind::swap: return a->a.same_tree(b->a) && a->b.same_tree(b->b);
      case Kind::ev:
      case Kind::coev: return true;
      case Kind::alpha: return a->k == b->k;
      case Kind::seq:
      case Kind::par: return same(a->l.get(), b->l.get()) && same(a->r.get(), b->r.get());
    }
    return false;  // unreachable
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace cobz
