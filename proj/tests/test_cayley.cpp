#include <doctest.h>

#include <algorithm>
#include <random>

#include "scl/cayley.hpp"
#include "scl/error.hpp"
#include "scl/families.hpp"
#include "scl/oracles.hpp"

using namespace scl;

namespace {

NormalForm random_element(const MarkedAlphabet& alphabet, std::mt19937_64& rng, std::size_t max_len) {
  Word w(alphabet.symbols());
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back(Letter{static_cast<std::uint8_t>(rng() % alphabet.size()), static_cast<std::int8_t>(rng() % 2 ? 1 : -1)});
  }
  return eval(w, alphabet);
}

}  // namespace

TEST_SUITE("cayley") {
  TEST_CASE("small distances") {
    DistanceOracle std_oracle(MarkedAlphabet::standard());
    CHECK(std_oracle.distance(NormalForm(), NormalForm()) == 0);
    CHECK(std_oracle.distance_from_identity(std_element(parse_word("dB", std_symbols()))) == 2);

    const auto& tw = MarkedAlphabet::twisted();
    DistanceOracle tw_oracle(tw);
    CHECK(tw_oracle.distance_from_identity(eval(tw.parse("b3t2"), tw)) == 5);
    // d = t b
    CHECK(tw_oracle.distance_from_identity(std_element(parse_word("d", std_symbols()))) == 2);
    CHECK(tw_oracle.distance_from_identity(std_element(parse_word("dB", std_symbols()))) == 1);
  }

  TEST_CASE("std distance is the l1 length of the normal form") {
    DistanceOracle oracle(MarkedAlphabet::standard(), 6);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
      const NormalForm g = random_element(MarkedAlphabet::standard(), rng, 12);
      CHECK(oracle.distance_from_identity(g) == g.reduced_length());
    }
  }

  TEST_CASE("bidirectional search agrees with a plain ball") {
    for (const MarkedAlphabet* a : {&MarkedAlphabet::standard(), &MarkedAlphabet::twisted()}) {
      const oracle::ReferenceBall ball = oracle::reference_ball(*a, 5);
      // cap 3 forces every query of length >= 4 through the meet logic
      DistanceOracle fast(*a, 3);
      for (std::size_t r = 0; r <= 5; ++r) {
        std::size_t step = std::max<std::size_t>(1, ball.spheres[r].size() / 400);
        for (std::size_t i = 0; i < ball.spheres[r].size(); i += step) {
          CHECK(fast.distance_from_identity(ball.spheres[r][i]) == r);
        }
      }
    }
  }

  TEST_CASE("metric axioms on random twisted elements") {
    const auto& tw = MarkedAlphabet::twisted();
    DistanceOracle oracle(tw, 6);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
      const NormalForm g = random_element(tw, rng, 5);
      const NormalForm h = random_element(tw, rng, 5);
      const NormalForm k = random_element(tw, rng, 5);
      const std::size_t gh = oracle.distance(g, h);
      CHECK(gh == oracle.distance(h, g));
      CHECK((gh == 0) == (g == h));
      CHECK(gh <= oracle.distance(g, k) + oracle.distance(k, h));
    }
  }

  TEST_CASE("geodesic witnesses") {
    const auto& tw = MarkedAlphabet::twisted();
    DistanceOracle oracle(tw);
    CHECK(oracle.geodesic_witness(NormalForm()).empty());
    CHECK(format_word(DistanceOracle(MarkedAlphabet::standard()).geodesic_witness(std_element(parse_word("a", std_symbols())))) == "a");

    const NormalForm g = eval(u_family({3, 1, Variant::kPlain}), tw);
    const Word v = oracle.geodesic_witness(g);
    CHECK(v.size() == 8);
    CHECK(eval(v, tw) == g);
    const auto count = [&](char c, int sign) {
      const Letter l{*tw.symbols().index_of(c), static_cast<std::int8_t>(sign)};
      return std::count(v.begin(), v.end(), l);
    };
    CHECK(count('a', 1) == 1);
    CHECK(count('c', 1) == 1);
    CHECK(count('a', -1) == 0);
    CHECK(count('c', -1) == 0);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
      const NormalForm h = random_element(tw, rng, 7);
      const Word w = oracle.geodesic_witness(h);
      CHECK(eval(w, tw) == h);
      CHECK(w.size() == oracle.distance_from_identity(h));
    }
  }

  TEST_CASE("geodesic words") {
    DistanceOracle std_oracle(MarkedAlphabet::standard());
    CHECK_FALSE(std_oracle.is_geodesic(parse_word("aA", std_symbols())));
    CHECK(std_oracle.is_geodesic(parse_word("ab", std_symbols())));

    DistanceOracle tw_oracle(MarkedAlphabet::twisted());
    for (std::size_t n = 0; n <= 5; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (Variant v : kAllVariants) {
          CHECK(tw_oracle.is_geodesic(u_family({n, k, v})));
        }
      }
    }
    CHECK(tw_oracle.is_geodesic(MarkedAlphabet::twisted().parse("tb")));
    CHECK_FALSE(tw_oracle.is_geodesic(MarkedAlphabet::twisted().parse("btB")));
  }

  TEST_CASE("ball profiles") {
    DistanceOracle std_oracle(MarkedAlphabet::standard());
    const auto p1 = std_oracle.ball_profile(1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0] == SphereRow{0, 1, 1});
    CHECK(p1[1] == SphereRow{1, 8, 9});
    CHECK(std_oracle.ball_profile(2)[2].sphere == 40);

    DistanceOracle tw_oracle(MarkedAlphabet::twisted());
    CHECK(tw_oracle.ball_profile(1)[1].sphere == 8);

    for (const MarkedAlphabet* a : {&MarkedAlphabet::standard(), &MarkedAlphabet::twisted()}) {
      const auto ref = oracle::reference_ball(*a, 4);
      DistanceOracle o(*a);
      const auto rows = o.ball_profile(4);
      std::size_t total = 0;
      for (std::size_t r = 0; r <= 4; ++r) {
        total += ref.spheres[r].size();
        CHECK(rows[r].sphere == ref.spheres[r].size());
        CHECK(rows[r].ball == total);
      }
    }
    CHECK_THROWS_AS(std_oracle.ball_profile(9), Error);
  }

  TEST_CASE("radius cap") {
    DistanceOracle oracle(MarkedAlphabet::standard(), 2);
    CHECK(oracle.distance_from_identity(std_element(parse_word("a2c2", std_symbols()))) == 4);
    try {
      oracle.distance_from_identity(std_element(parse_word("a3c2", std_symbols())));
      FAIL("expected RadiusExhausted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kRadiusExhausted);
      CHECK(e.is_resource_limit());
    }
    CHECK_THROWS_AS(DistanceOracle(MarkedAlphabet::standard(), 65), Error);
  }
}
