#include <catch2/catch_amalgamated.hpp>

#include "cobz/bordism.hpp"
#include "cobz/gen.hpp"

using namespace cobz;

namespace {

BoundaryObject W(const char* s) { return BoundaryObject::parse(s); }

Arc arc(Side sa, std::size_t ia, Side sb, std::size_t ib, long label) {
  return Arc(Port{sa, ia}, Port{sb, ib}, Int(label));
}

}  // namespace

TEST_CASE("identity diagrams are zero-labelled parallel strands", "[bordism]") {
  CHECK(identity(BoundaryObject{}).to_string() == "src=1; tgt=1; arcs=[]; circles=[]");
  CHECK(identity(W("+")).to_string() == "src=+; tgt=+; arcs=[(s0,t0,0)]; circles=[]");
  CHECK(identity(W("+-")).to_string() ==
        "src=+-; tgt=+-; arcs=[(s0,t0,0),(s1,t1,0)]; circles=[]");
}

TEST_CASE("construction validates the matching and the sign discipline", "[bordism]") {
  // A through strand must join equal signs.
  CHECK_THROWS_AS(Bordism::make(W("+"), W("-"), {arc(Side::source, 0, Side::target, 0, 0)}),
                  Error);
  // A cap (source-source) must join opposite signs.
  CHECK_THROWS_AS(Bordism::make(W("++"), BoundaryObject{},
                                {arc(Side::source, 0, Side::source, 1, 0)}),
                  Error);
  CHECK_NOTHROW(Bordism::make(W("-+"), BoundaryObject{},
                              {arc(Side::source, 0, Side::source, 1, 0)}));
  // A cup (target-target) must join opposite signs.
  CHECK_THROWS_AS(Bordism::make(BoundaryObject{}, W("--"),
                                {arc(Side::target, 0, Side::target, 1, 0)}),
                  Error);
  // Every port appears exactly once.
  CHECK_THROWS_AS(Bordism::make(W("+"), W("+"), {}), Error);
  CHECK_THROWS_AS(Bordism::make(W("++"), W("++"),
                                {arc(Side::source, 0, Side::target, 0, 0),
                                 arc(Side::source, 0, Side::target, 1, 0)}),
                  Error);
  // Port indices must stay within the boundary words.
  CHECK_THROWS_AS(Bordism::make(W("+"), W("+"), {arc(Side::source, 0, Side::target, 1, 0)}),
                  Error);
  // Arcs are unordered pairs of distinct ports.
  CHECK_THROWS_AS(Arc(Port{Side::source, 0}, Port{Side::source, 0}, Int(1)), Error);
}

TEST_CASE("equality is canonical-form equality, insensitive to input order", "[bordism]") {
  const Bordism a = Bordism::make(
      W("++"), W("++"),
      {arc(Side::source, 1, Side::target, 0, 3), arc(Side::source, 0, Side::target, 1, 2)});
  const Bordism b = Bordism::make(
      W("++"), W("++"),
      {arc(Side::target, 1, Side::source, 0, 2), arc(Side::source, 1, Side::target, 0, 3)});
  CHECK(a == b);
  CHECK(a.to_string() == "src=++; tgt=++; arcs=[(s0,t1,2),(s1,t0,3)]; circles=[]");
}

TEST_CASE("the worked gluing example composes to two arcs and a circle", "[compose]") {
  const Bordism f = Bordism::make(
      W("+"), W("++-"),
      {arc(Side::source, 0, Side::target, 0, 2), arc(Side::target, 1, Side::target, 2, -1)});
  const Bordism g = Bordism::make(
      W("++-"), W("++-"),
      {arc(Side::source, 0, Side::target, 0, 0), arc(Side::source, 1, Side::source, 2, 0),
       arc(Side::target, 1, Side::target, 2, 1)});
  const Bordism expected = Bordism::make(
      W("+"), W("++-"),
      {arc(Side::source, 0, Side::target, 0, 2), arc(Side::target, 1, Side::target, 2, 1)},
      [] {
        ScalarMultiset c;
        c.add(Int(-1));
        return c;
      }());
  CHECK(compose(f, g) == expected);
  CHECK(compose(f, g).to_string() ==
        "src=+; tgt=++-; arcs=[(s0,t0,2),(t1,t2,1)]; circles=[-1]");
}

TEST_CASE("labels add along glued strands", "[compose]") {
  CHECK(compose(alpha(Int(2)), alpha(Int(3))) == alpha(Int(5)));
  CHECK(compose(alpha(Int(2)), alpha(Int(-2))) == identity(W("+")));
}

TEST_CASE("composition demands matching boundary words", "[compose]") {
  CHECK_THROWS_AS(compose(identity(W("+")), identity(W("-"))), BoundaryMismatch);
  CHECK_THROWS_AS(compose(identity(W("++")), identity(W("+"))), BoundaryMismatch);
}

TEST_CASE("identities are two-sided units for composition", "[compose]") {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Bordism f = gen::any_bordism(rng, 6, 9);
    CHECK(compose(identity(f.source()), f) == f);
    CHECK(compose(f, identity(f.target())) == f);
  }
}

TEST_CASE("tensor shifts the right factor and unions circles", "[tensor]") {
  const Bordism left = alpha(Int(1));
  const Bordism right = Bordism::make(W("-+"), BoundaryObject{},
                                      {arc(Side::source, 0, Side::source, 1, 4)});
  CHECK(tensor(left, right).to_string() ==
        "src=+-+; tgt=+; arcs=[(s0,t0,1),(s1,s2,4)]; circles=[]");

  ScalarMultiset c1, c2;
  c1.add(Int(1));
  c2.add(Int(2));
  const Bordism s1 = Bordism::make(BoundaryObject{}, BoundaryObject{}, {}, c1);
  const Bordism s2 = Bordism::make(BoundaryObject{}, BoundaryObject{}, {}, c2);
  CHECK(tensor(s1, s2).circles().to_string() == "{1,2}");
}

TEST_CASE("the braiding swaps blocks and is natural and involutive", "[braiding]") {
  CHECK(braiding(W("+"), W("-")).to_string() ==
        "src=+-; tgt=-+; arcs=[(s0,t1,0),(s1,t0,0)]; circles=[]");
  CHECK(braiding(BoundaryObject{}, W("+")) == identity(W("+")));

  gen::Rng rng(12);
  for (int i = 0; i < 150; ++i) {
    const BoundaryObject a = gen::word(rng, 4), b = gen::word(rng, 4);
    CHECK(compose(braiding(a, b), braiding(b, a)) == identity(a.tensor(b)));
    const Bordism f = gen::bordism_between(rng, a, gen::word_with_charge(rng, 0, 2).tensor(a), 5);
    const Bordism g = gen::bordism_between(rng, b, b, 5);
    CHECK(compose(tensor(f, g), braiding(f.target(), g.target())) ==
          compose(braiding(f.source(), g.source()), tensor(g, f)));
  }
}

TEST_CASE("caps and cups join opposite signs in both orientation orders", "[duality]") {
  CHECK(cap(OrientationOrder::minus_plus).to_string() ==
        "src=-+; tgt=1; arcs=[(s0,s1,0)]; circles=[]");
  CHECK(cap(OrientationOrder::plus_minus).to_string() ==
        "src=+-; tgt=1; arcs=[(s0,s1,0)]; circles=[]");
  CHECK(cup(OrientationOrder::plus_minus).to_string() ==
        "src=1; tgt=+-; arcs=[(t0,t1,0)]; circles=[]");
  CHECK(cup(OrientationOrder::minus_plus).to_string() ==
        "src=1; tgt=-+; arcs=[(t0,t1,0)]; circles=[]");
}

TEST_CASE("duality data satisfies both zig-zag identities on every word", "[duality]") {
  // Exhaustively over all words of length <= 6.
  for (std::size_t len = 0; len <= 6; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::vector<Sign> signs(len);
      for (std::size_t i = 0; i < len; ++i)
        signs[i] = (bits >> i) & 1 ? Sign::minus : Sign::plus;
      const BoundaryObject x(signs);
      const DualityData d = duality_data(x);
      CHECK(d.dual == x.dual());

      // (coev (x) id) ; (id (x) ev) = id, and its mirror on the dual side.
      const Bordism zig =
          compose(tensor(d.coev, identity(x)), tensor(identity(x), d.ev));
      const Bordism zag =
          compose(tensor(identity(d.dual), d.coev), tensor(d.ev, identity(d.dual)));
      CHECK(zig == identity(x));
      CHECK(zag == identity(d.dual));
    }
  }
}

TEST_CASE("closing an endomorphism produces the expected circles", "[trace]") {
  CHECK(trace_close(alpha(Int(7))).to_string() == "src=1; tgt=1; arcs=[]; circles=[7]");
  CHECK(trace_close(identity(W("+"))).circles().to_string() == "{0}");
  CHECK(trace_close(identity(W("-+"))).circles().to_string() == "{0,0}");
  // A transposition closes into a single loop carrying the sum of labels.
  const Bordism swap2 = Bordism::make(
      W("++"), W("++"),
      {arc(Side::source, 0, Side::target, 1, 3), arc(Side::source, 1, Side::target, 0, 4)});
  CHECK(trace_close(swap2).circles().to_string() == "{7}");
  CHECK_THROWS_AS(trace_close(cap(OrientationOrder::minus_plus)), NotEndomorphism);
}

TEST_CASE("inverses exist exactly for circle-free permutation diagrams", "[inverse]") {
  CHECK(is_invertible(identity(W("+-"))));
  CHECK(!is_invertible(cup(OrientationOrder::plus_minus)));
  CHECK(!is_invertible(trace_close(alpha(Int(1)))));  // a circle is not invertible
  const Bordism bent = compose(tensor(cup(OrientationOrder::plus_minus), identity(W("+"))),
                               tensor(identity(W("+")), cap(OrientationOrder::minus_plus)));
  CHECK(bent == identity(W("+")));  // sanity: zig-zag collapses back to a strand

  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const Bordism u = gen::invertible(rng, 6, 9);
    REQUIRE(is_invertible(u));
    CHECK(compose(u, inverse_of(u)) == identity(u.source()));
    CHECK(compose(inverse_of(u), u) == identity(u.source()));
  }
}

TEST_CASE("powers multiply labels along cycles and respect signs", "[power]") {
  CHECK(power(alpha(Int(2)), Int(5)) == alpha(Int(10)));
  CHECK(power(alpha(Int(2)), Int(0)) == identity(W("+")));
  CHECK(power(alpha(Int(2)), Int(-3)) == alpha(Int(-6)));
  CHECK_THROWS_AS(power(cap(OrientationOrder::minus_plus), Int(2)), NotEndomorphism);
  CHECK_THROWS_AS(power(cup(OrientationOrder::plus_minus), Int(-1)), NotEndomorphism);

  gen::Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const Bordism u = gen::invertible(rng, 5, 5);
    CHECK(power(u, Int(3)) == compose(u, compose(u, u)));
    CHECK(power(u, Int(-2)) == inverse_of(compose(u, u)));
  }
}
