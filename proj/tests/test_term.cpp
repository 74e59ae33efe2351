#include <catch2/catch_amalgamated.hpp>

#include "cobz/denote.hpp"
#include "cobz/gen.hpp"
#include "cobz/parse.hpp"
#include "cobz/term.hpp"
#include "cobz/typecheck.hpp"

using namespace cobz;

TEST_CASE("atoms parse to the expected syntax trees", "[parse]") {
  CHECK(parse_term("a^3") == Term::alpha(Int(3)));
  CHECK(parse_term("a^-12") == Term::alpha(Int(-12)));
  CHECK(parse_term("ev") == Term::ev());
  CHECK(parse_term("coev") == Term::coev());
  CHECK(parse_term("id(1)") == Term::id(ObjExpr::unit()));
  CHECK(parse_term("id(+)") == Term::id(ObjExpr::plus_pt()));
  CHECK(parse_term("swap(+,-)") == Term::swap(ObjExpr::plus_pt(), ObjExpr::minus_pt()));
}

TEST_CASE("composition is lowest precedence, tensor binds tighter, both left-associative",
          "[parse]") {
  // a ; b * c ; d  ==  (a ; (b * c)) ; d
  const Term t = parse_term("a^1 ; a^2 * ev ; a^3");
  const Term expected = Term::seq(Term::seq(Term::alpha(Int(1)), Term::par(Term::alpha(Int(2)), Term::ev())),
                                  Term::alpha(Int(3)));
  CHECK(t == expected);
  CHECK(parse_term("a^1 * a^2 * a^3") ==
        Term::par(Term::par(Term::alpha(Int(1)), Term::alpha(Int(2))), Term::alpha(Int(3))));
  CHECK(parse_term("(coev * id(+)) ; (id(+) * ev)") ==
        Term::seq(Term::par(Term::coev(), Term::id(ObjExpr::plus_pt())),
                  Term::par(Term::id(ObjExpr::plus_pt()), Term::ev())));
}

TEST_CASE("whitespace never matters", "[parse]") {
  CHECK(parse_term("  a^2;a^3 ") == parse_term("a^2 ; a^3"));
  CHECK(parse_term("swap( + , - )") == parse_term("swap(+,-)"));
  CHECK(parse_term("id( + * ( - * + ) )") == parse_term("id(+*(-*+))"));
}

TEST_CASE("object expressions keep their parse shape but compare by flattening",
          "[parse][objects]") {
  const ObjExpr left = parse_term("id((+*-)*+)").obj_a();
  const ObjExpr right = parse_term("id(+*(-*+))").obj_a();
  CHECK(left == right);                 // same boundary word
  CHECK(!left.same_tree(right));        // different trees
  CHECK(left.flatten() == BoundaryObject::parse("+-+"));
  CHECK(parse_term("id(1*+)").obj_a().flatten() == BoundaryObject::parse("+"));
}

TEST_CASE("syntax errors carry one-based positions and expected tokens", "[parse][errors]") {
  const auto position_of = [](const char* text) {
    try {
      parse_term(text);
    } catch (const SyntaxError& e) {
      return e.position;
    }
    return std::size_t{0};
  };
  CHECK(position_of("ev ;; id(1)") == 5);   // the second ';' starts an empty factor
  CHECK(position_of("") == 1);
  CHECK(position_of("a^") == 3);            // missing integer literal
  CHECK(position_of("a^5x") == 4);          // trailing junk
  CHECK(position_of("id(++)") == 5);        // '+' '+' needs an explicit '*'
  CHECK(position_of("swap(+)") == 7);       // missing second object
  CHECK(position_of("(a^1 ; a^2") == 11);   // unclosed parenthesis
  CHECK(position_of("foo") == 1);

  try {
    parse_term("ev ;; id(1)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    CHECK(!e.expected.empty());
  }
}

TEST_CASE("printing inverts parsing on random terms", "[print]") {
  gen::Rng rng(301);
  for (int i = 0; i < 500; ++i) {
    const Term t = gen::arbitrary_term(rng, 4);
    INFO("term: " << t.to_string());
    CHECK(parse_term(t.to_string()) == t);
  }
}

TEST_CASE("known types infer for the generator atoms", "[typecheck]") {
  const auto type_of = [](const char* text) { return typecheck(parse_term(text)); };
  CHECK(type_of("a^3").dom == BoundaryObject::parse("+"));
  CHECK(type_of("a^3").cod == BoundaryObject::parse("+"));
  CHECK(type_of("ev").dom == BoundaryObject::parse("-+"));
  CHECK(type_of("ev").cod == BoundaryObject{});
  CHECK(type_of("coev").dom == BoundaryObject{});
  CHECK(type_of("coev").cod == BoundaryObject::parse("+-"));
  CHECK(type_of("swap(+,-)").dom == BoundaryObject::parse("+-"));
  CHECK(type_of("swap(+,-)").cod == BoundaryObject::parse("-+"));
  CHECK(type_of("coev ; swap(+,-)").dom == BoundaryObject{});
  CHECK(type_of("coev ; swap(+,-)").cod == BoundaryObject::parse("-+"));
  CHECK(type_of("id(1)").dom == BoundaryObject{});
  // Sequencing composes left to right; tensor concatenates.
  CHECK(type_of("ev ; coev").dom == BoundaryObject::parse("-+"));
  CHECK(type_of("ev ; coev").cod == BoundaryObject::parse("+-"));
  CHECK(type_of("a^1 * ev").dom == BoundaryObject::parse("+-+"));
}

TEST_CASE("type errors name the mismatched words and the offending subterm",
          "[typecheck][errors]") {
  CHECK_THROWS_AS(typecheck(parse_term("ev ; ev")), TypeError);
  CHECK_THROWS_AS(typecheck(parse_term("a^1 ; ev")), TypeError);
  try {
    typecheck(parse_term("ev ; ev"));
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    const std::string message = e.what();
    CHECK(message.find("1") != std::string::npos);    // produced: the empty word
    CHECK(message.find("-+") != std::string::npos);   // consumed: the word -+
    CHECK(message.find("ev") != std::string::npos);   // offender appears in the message
  }
}

TEST_CASE("well-typed generated terms always denote", "[typecheck][denote]") {
  gen::Rng rng(302);
  for (int i = 0; i < 300; ++i) {
    const BoundaryObject dom = gen::word(rng, 4);
    const auto [term, cod] = gen::typed_term(rng, dom, 3);
    INFO("term: " << term.to_string());
    const TermType type = typecheck(term);
    CHECK(type.dom == dom);
    CHECK(type.cod == cod);
    const Bordism b = denote(term);
    CHECK(b.source() == dom);
    CHECK(b.target() == cod);
  }
}

TEST_CASE("denotation decides the categorical equalities", "[denote]") {
  const auto D = [](const char* text) { return denote(parse_term(text)); };
  // The zig-zag collapses to the identity strand.
  CHECK(D("(coev * id(+)) ; (id(+) * ev)") == identity(BoundaryObject::parse("+")));
  CHECK(D("(id(-) * coev) ; (ev * id(-))") == identity(BoundaryObject::parse("-")));
  // Labels add under gluing.
  CHECK(D("a^2 ; a^3") == D("a^5"));
  // A closed loop through the generator is a labelled circle.
  CHECK(D("coev ; (a^2 * id(-)) ; swap(+,-) ; ev").to_string() ==
        "src=1; tgt=1; arcs=[]; circles=[2]");
  CHECK(D("coev ; swap(+,-) ; ev").to_string() == "src=1; tgt=1; arcs=[]; circles=[0]");
  // Interchange and symmetry naturality are invisible after normalization.
  CHECK(D("(a^1 ; a^2) * (a^3 ; a^4)") == D("(a^1 * a^3) ; (a^2 * a^4)"));
  CHECK(D("(a^1 * a^2) ; swap(+,+)") == D("swap(+,+) ; (a^2 * a^1)"));
  // Distinct normal forms stay distinct.
  CHECK(D("a^1") != D("a^2"));
  CHECK(D("swap(+,+)") != D("id(+*+)"));
}

TEST_CASE("denoting an ill-typed term throws and denotes nothing", "[denote][errors]") {
  CHECK_THROWS_AS(denote(parse_term("ev ; ev")), TypeError);
  CHECK_THROWS_AS(denote(parse_term("coev ; ev")), TypeError);  // (+,-) vs (-,+)
}
