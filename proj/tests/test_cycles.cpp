#include <doctest.h>

#include <algorithm>

#include "scl/cayley.hpp"
#include "scl/error.hpp"
#include "scl/families.hpp"
#include "scl/oracles.hpp"

using namespace scl;

TEST_SUITE("cycles") {
  TEST_CASE("isometric cycle checks") {
    const auto& sa = MarkedAlphabet::standard();
    const auto& tw = MarkedAlphabet::twisted();
    DistanceOracle std_oracle(sa);
    DistanceOracle tw_oracle(tw);

    CHECK(is_isometric_cycle(std_oracle, sa.parse("acAC")).is_isometric);
    CHECK(is_isometric_cycle(tw_oracle, tw.parse("t2cT2at2CT2A")).is_isometric);

    const CycleReport bad = is_isometric_cycle(std_oracle, sa.parse("aAcC"));
    CHECK_FALSE(bad.is_isometric);
    REQUIRE(bad.violation);
    CHECK(*bad.violation == Violation{0, 2, 2, 0});

    // a^2 c a^-2 c^-1: a and c commute, so g_1 = a and g_4 = a c are adjacent
    const CycleReport flat = is_isometric_cycle(std_oracle, sa.parse("a2cA2C"));
    CHECK_FALSE(flat.is_isometric);
    REQUIRE(flat.violation);
    CHECK(flat.violation->actual < flat.violation->expected);

    // [t^n c t^-n, b]: t and b commute, so this loop has shortcuts
    for (std::size_t n = 1; n <= 3; ++n) {
      const Word x = power(tw.symbols(), 't', static_cast<long>(n)) + tw.parse("c") +
                     power(tw.symbols(), 't', -static_cast<long>(n));
      const Word w = commutator(x, tw.parse("b"));
      REQUIRE(eval(w, tw).is_identity());
      CHECK_FALSE(is_isometric_cycle(tw_oracle, w).is_isometric);
    }
  }

  TEST_CASE("cycle check errors") {
    DistanceOracle oracle(MarkedAlphabet::standard());
    CHECK_THROWS_AS(is_isometric_cycle(oracle, MarkedAlphabet::standard().parse("ab")), Error);
    CHECK_THROWS_AS(is_isometric_cycle(oracle, Word(std_symbols())), Error);
  }

  TEST_CASE("w_n agrees with a plain ball") {
    const auto& tw = MarkedAlphabet::twisted();
    const auto ball = oracle::reference_ball(tw, 4);
    for (std::size_t n = 0; n <= 1; ++n) {
      const Word w = w_n(n);
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          CHECK(ball.lookup(eval(w.subword(i, j - i), tw)) == std::min(j - i, w.size() - (j - i)));
        }
      }
    }
  }

  TEST_CASE("canonical form") {
    const auto& tw = MarkedAlphabet::twisted();
    const Word w1 = w_n(1);
    const Word c = canonical_cycle(w1);
    CHECK(format_word(c) == "atcTAtCT");
    for (std::size_t i = 0; i < w1.size(); ++i) {
      CHECK(canonical_cycle(cyclic_conjugate(w1, i)) == c);
      CHECK(canonical_cycle(invert_word(cyclic_conjugate(w1, i))) == c);
    }
    CHECK(format_word(canonical_cycle(tw.parse("CAca"))) == "acAC");
  }

  TEST_CASE("enumeration over std") {
    DistanceOracle oracle(MarkedAlphabet::standard());
    CHECK(enumerate_isometric_cycles(oracle, 3).empty());
    const auto cycles = enumerate_isometric_cycles(oracle, 8);
    CHECK(cycles.size() == 4);
    for (const Word& w : cycles) CHECK(w.size() == 4);
    CHECK(format_word(cycles.front()) == "acAC");
  }

  TEST_CASE("pruned enumeration matches brute force at length 6") {
    for (const MarkedAlphabet* a : {&MarkedAlphabet::standard(), &MarkedAlphabet::twisted()}) {
      DistanceOracle oracle(*a);
      const auto ball = oracle::reference_ball(*a, 3);
      CHECK(enumerate_isometric_cycles(oracle, 6) == oracle::brute_force_isometric_cycles(*a, 6, ball));
    }
  }

  TEST_CASE("enumeration over twisted finds w_1") {
    DistanceOracle oracle(MarkedAlphabet::twisted());
    const auto cycles = enumerate_isometric_cycles(oracle, 8);
    CHECK(std::find(cycles.begin(), cycles.end(), canonical_cycle(w_n(1))) != cycles.end());
    CHECK(std::is_sorted(cycles.begin(), cycles.end(), [](const Word& x, const Word& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }));
  }

  TEST_CASE("enumeration cap") {
    DistanceOracle oracle(MarkedAlphabet::standard());
    try {
      enumerate_isometric_cycles(oracle, 10, 8);
      FAIL("expected CapExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kCapExceeded);
    }
  }
}
