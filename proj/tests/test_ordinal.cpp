#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "ordmach/ordinal.hpp"

using namespace ordmach;

namespace {
Ordinal O(const char* lit) { return parse_ordinal(lit); }
}  // namespace

TEST_CASE("ordinal literals round-trip") {
  for (const char* lit : {"0", "1", "42", "w", "w+1", "w*2+1", "w^2*3+w+5", "w^w",
                          "w^(w+1)*4+1", "w^w^2+w^3*7+2", "w^(w^2+w)+w"}) {
    Ordinal o = O(lit);
    CHECK(to_string(o) == lit);
    CHECK(parse_ordinal(to_string(o)) == o);
  }
  CHECK(to_string(O("1+w")) == "w");       // literals normalize
  CHECK(to_string(O("w+w")) == "w*2");
  CHECK_THROWS_AS(O("w^"), SyntaxError);
  CHECK_THROWS_AS(O(""), SyntaxError);
  CHECK_THROWS_AS(O("3+"), SyntaxError);
  CHECK_THROWS_AS(O("w*0"), SyntaxError);
}

TEST_CASE("ord_compare basics") {
  CHECK(ord_compare(O("0"), O("0")) == std::strong_ordering::equal);
  CHECK(ord_compare(O("w"), O("3")) == std::strong_ordering::greater);
  CHECK(ord_compare(O("w*2+1"), O("w^2")) == std::strong_ordering::less);
  CHECK(O("w+1") < O("w+2"));
  CHECK(O("w^2") < O("w^2+1"));
  CHECK(O("w^w") > O("w^5*9+w^2"));
}

TEST_CASE("ord_add basics") {
  CHECK(ord_add(O("w"), O("1")) == O("w+1"));
  CHECK(ord_add(O("1"), O("w")) == O("w"));
  CHECK(ord_add(O("w^2+w"), O("w*3")) == O("w^2+w*4"));
  CHECK(ord_add(O("w+5"), O("w")) == O("w*2"));
}

TEST_CASE("ord_mul basics") {
  CHECK(ord_mul(O("2"), O("w")) == O("w"));
  CHECK(ord_mul(O("w"), O("2")) == O("w*2"));
  CHECK(ord_mul(O("w+1"), O("w")) == O("w^2"));
  CHECK(ord_mul(O("w+1"), O("w+1")) == O("w^2+w+1"));
  CHECK(ord_mul(O("w^2*3+1"), O("w*2+3")) == O("w^3*2+w^2*9+1"));
  CHECK(ord_mul(O("3"), O("4")) == O("12"));
}

TEST_CASE("ord_sub_left inverts addition") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Ordinal a = oracles::random_cnf(rng, 4);
    Ordinal b = oracles::random_cnf(rng, 4);
    Ordinal s = ord_add(a, b);
    CHECK(ord_add(a, ord_sub_left(s, a)) == s);
  }
  CHECK_THROWS_AS(ord_sub_left(O("w"), O("w+1")), OrdinalOverflow);
}

TEST_CASE("ordinal arithmetic laws on random samples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    Ordinal a = oracles::random_cnf(rng, 5);
    Ordinal b = oracles::random_cnf(rng, 5);
    Ordinal c = oracles::random_cnf(rng, 5);
    // trichotomy
    int rel = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (a > b ? 1 : 0);
    REQUIRE(rel == 1);
    // associativity of addition
    REQUIRE(ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c)));
    // identity
    REQUIRE(ord_add(a, Ordinal()) == a);
    REQUIRE(ord_add(Ordinal(), a) == a);
    // left distributivity
    REQUIRE(ord_mul(a, ord_add(b, c)) == ord_add(ord_mul(a, b), ord_mul(a, c)));
  }
  // transitivity on sampled triples
  for (int i = 0; i < 2000; ++i) {
    Ordinal a = oracles::random_cnf(rng, 4);
    Ordinal b = oracles::random_cnf(rng, 4);
    Ordinal c = oracles::random_cnf(rng, 4);
    if (a <= b && b <= c) REQUIRE(a <= c);
  }
}

TEST_CASE("arithmetic agrees with the below-w^2 oracle") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 4000; ++i) {
    oracles::OmegaSq x{rng() % 30, rng() % 30};
    oracles::OmegaSq y{rng() % 30, rng() % 30};
    Ordinal ox = oracles::osq_to_ordinal(x), oy = oracles::osq_to_ordinal(y);
    REQUIRE(ord_add(ox, oy) == oracles::osq_to_ordinal(oracles::osq_add(x, y)));
    if (oracles::osq_mul_defined(x, y))
      REQUIRE(ord_mul(ox, oy) == oracles::osq_to_ordinal(oracles::osq_mul(x, y)));
  }
}

TEST_CASE("godel_pair matches the brute-force enumeration below 64") {
  oracles::BrutePairTable table(64);
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; ++b) {
      Ordinal p = godel_pair(Ordinal(a), Ordinal(b));
      REQUIRE(p.is_natural());
      REQUIRE(p.natural_value() == table.at(a, b));
    }
}

TEST_CASE("godel_pair frozen examples") {
  CHECK(godel_pair(O("0"), O("0")) == O("0"));
  CHECK(godel_pair(O("1"), O("1")) == O("3"));
  CHECK(godel_pair(O("0"), O("2")) == O("4"));
  CHECK(godel_unpair(O("0")) == std::pair{O("0"), O("0")});
  CHECK(godel_unpair(O("3")) == std::pair{O("1"), O("1")});
  CHECK(godel_unpair(O("4")) == std::pair{O("0"), O("2")});
}

TEST_CASE("godel_pair initial-segment law") {
  for (std::uint64_t n = 1; n <= 64; ++n)
    for (std::uint64_t a = 0; a < n + 8; ++a)
      for (std::uint64_t b = 0; b < n + 8; ++b) {
        bool below = std::max(a, b) < n;
        bool pairBelow = godel_pair(Ordinal(a), Ordinal(b)) < Ordinal(n * n);
        REQUIRE(below == pairBelow);
      }
}

TEST_CASE("godel pairing round-trips on random CNF ordinals") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    Ordinal a = oracles::random_cnf(rng, 4);
    Ordinal b = oracles::random_cnf(rng, 4);
    auto [x, y] = godel_unpair(godel_pair(a, b));
    REQUIRE(x == a);
    REQUIRE(y == b);
  }
  // surjectivity: pair(unpair(c)) = c
  for (int i = 0; i < 1000; ++i) {
    Ordinal c = oracles::random_cnf(rng, 6, 20);
    auto [a, b] = godel_unpair(c);
    REQUIRE(godel_pair(a, b) == c);
  }
}

TEST_CASE("godel_pair is monotone in the pair order") {
  std::mt19937_64 rng(23);
  auto pair_order_less = [](const Ordinal& a, const Ordinal& b, const Ordinal& c,
                            const Ordinal& d) {
    const Ordinal& m1 = ord_max(a, b);
    const Ordinal& m2 = ord_max(c, d);
    if (m1 != m2) return m1 < m2;
    if (a != c) return a < c;
    return b < d;
  };
  for (int i = 0; i < 2000; ++i) {
    Ordinal a = oracles::random_cnf(rng, 3);
    Ordinal b = oracles::random_cnf(rng, 3);
    Ordinal c = oracles::random_cnf(rng, 3);
    Ordinal d = oracles::random_cnf(rng, 3);
    if (a == c && b == d) continue;
    bool lt = pair_order_less(a, b, c, d);
    REQUIRE(lt == (godel_pair(a, b) < godel_pair(c, d)));
  }
}

TEST_CASE("tail_liminf frozen examples") {
  // alternation with shift 0: the minimum
  CHECK(tail_liminf({O("0"), {O("0"), O("1")}, O("0")}) == O("0"));
  // 0,1,2,...: the supremum w
  CHECK(tail_liminf({O("0"), {O("0")}, O("1")}) == O("w"));
  // w+0, w+2, w+2+0, ...: sup w*2
  CHECK(tail_liminf({O("w"), {O("0"), O("2")}, O("2")}) == O("w*2"));
}

TEST_CASE("tail_liminf properties") {
  std::mt19937_64 rng(29);
  // shift 0: equals the min of base + period, exhaustively over small periods
  for (int i = 0; i < 300; ++i) {
    OrdinalTailDescription d;
    d.base = oracles::random_cnf(rng, 3);
    std::size_t len = 1 + rng() % 4;
    for (std::size_t j = 0; j < len; ++j) d.period.push_back(oracles::random_cnf(rng, 3));
    d.shift = Ordinal();
    Ordinal expect = ord_add(d.base, d.period[0]);
    for (const auto& p : d.period) expect = ord_min(expect, ord_add(d.base, p));
    REQUIRE(tail_liminf(d) == expect);
  }
  // positive finite shift: equals base + w
  for (int i = 0; i < 300; ++i) {
    OrdinalTailDescription d;
    d.base = oracles::random_cnf(rng, 3);
    std::size_t len = 1 + rng() % 3;
    for (std::size_t j = 0; j < len; ++j) d.period.push_back(Ordinal(rng() % 50));
    d.shift = Ordinal(1 + rng() % 5);
    REQUIRE(tail_liminf(d) == ord_add(d.base, Ordinal::omega()));
  }
  // sampled values never undercut the liminf bound, and grow past probes
  for (int i = 0; i < 100; ++i) {
    OrdinalTailDescription d;
    d.base = oracles::random_cnf(rng, 2);
    d.period = {Ordinal(rng() % 10), Ordinal(rng() % 10)};
    d.shift = Ordinal(1 + rng() % 3);
    Ordinal lim = tail_liminf(d);
    Ordinal probe = ord_add(d.base, Ordinal(rng() % 1000));
    bool exceeded = false;
    for (std::uint64_t k = 0; k < 3000; ++k) {
      Ordinal v = d.value_at(k);
      REQUIRE(v < lim);
      if (v > probe) exceeded = true;
    }
    REQUIRE(exceeded);
  }
  CHECK_THROWS_AS(tail_liminf({O("0"), {O("w")}, O("1")}), InvalidEvidence);
  CHECK_THROWS_AS(tail_liminf({O("0"), {}, O("0")}), InvalidEvidence);
}

TEST_CASE("godel_pair on transfinite frozen spot checks") {
  // layer structure: pair(0, w) = sq(w) = w; pair(w, 0) = w*2; pair(w, w) = w*3
  CHECK(godel_pair(O("0"), O("w")) == O("w"));
  CHECK(godel_pair(O("w"), O("0")) == O("w*2"));
  CHECK(godel_pair(O("w"), O("w")) == O("w*3"));
  // sq(w+1) = w*3+1, so pair(0, w+1) = w*3+1
  CHECK(godel_pair(O("0"), O("w+1")) == O("w*3+1"));
  CHECK(godel_unpair(O("w*2")) == std::pair{O("w"), O("0")});
}
