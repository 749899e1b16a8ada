#include <doctest.h>

#include <algorithm>
#include <random>

#include "scl/error.hpp"
#include "scl/oracles.hpp"
#include "scl/shortcut_free.hpp"

using namespace scl;

namespace {

Word fw(std::string_view text) { return parse_word(text, Alphabet::from_text(text)); }

// u = a^m A^2m a^m b^m B^m: the pieces are forced, so floor(|u|/3) is optimal.
Word sharpness_word(std::size_t m) {
  const Alphabet ab = ab_symbols();
  const long k = static_cast<long>(m);
  return power(ab, 'a', k) + power(ab, 'a', -2 * k) + power(ab, 'a', k) + power(ab, 'b', k) + power(ab, 'b', -k);
}

Word random_free_null(std::size_t pairs, std::mt19937_64& rng) {
  const auto dyck = random_dyck_word(pairs, rng);
  std::vector<Letter> stack;
  Word w(ab_symbols());
  for (bool open : dyck) {
    if (open) {
      const Letter l{static_cast<std::uint8_t>(rng() % 2), static_cast<std::int8_t>(rng() % 2 ? 1 : -1)};
      stack.push_back(l);
      w.push_back(l);
    } else {
      w.push_back(stack.back().inverse());
      stack.pop_back();
    }
  }
  return w;
}

}  // namespace

TEST_SUITE("shortcut_free") {
  TEST_CASE("cancellation trees") {
    const CancellationTree one(fw("aA"));
    CHECK(one.vertex_count() == 2);
    CHECK(one.edge_count() == 1);
    REQUIRE(one.walk().size() == 2);
    CHECK(one.walk()[0].from == 0);
    CHECK(one.walk()[0].to == 1);
    CHECK(one.walk()[1].to == 0);

    const CancellationTree star(fw("aAaA"));
    CHECK(star.vertex_count() == 3);
    CHECK(star.neighbors(star.base()).size() == 2);
    CHECK(star.parent(star.base()) == CancellationTree::kNoParent);

    CHECK_THROWS_AS(CancellationTree(fw("ab")), Error);
    CHECK_THROWS_AS(CancellationTree(fw("a")), Error);
  }

  TEST_CASE("walk reads the word back") {
    std::mt19937_64 rng(1);
    for (std::size_t pairs = 1; pairs < 40; ++pairs) {
      const Word u = random_free_null(pairs, rng);
      const CancellationTree t = cancellation_tree(u);
      CHECK(t.read_walk() == u);
      CHECK(t.vertex_count() == pairs + 1);
      CHECK(t.walk().back().to == t.base());
    }
  }

  TEST_CASE("centroids") {
    CHECK(centroid(CancellationTree(fw("aA"))) == 0);
    // path 0 - 1 - 2
    const CancellationTree path(fw("abBA"));
    CHECK(centroid(path) == 1);
    // star with the base as centre
    CHECK(centroid(CancellationTree(fw("aAbBaA"))) == 0);
    // star whose centre is not the base: leaves hang off vertex 1
    const CancellationTree hub(fw("abBbBbBA"));
    CHECK(centroid(hub) == 1);

    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
      const CancellationTree t(random_free_null(1 + rng() % 50, rng));
      const auto sizes = t.component_sizes(centroid(t));
      for (std::size_t s : sizes) CHECK(2 * s <= t.vertex_count());
    }
  }

  TEST_CASE("split examples") {
    const FreeSplit tiny = split_null_word(fw("aA"));
    CHECK(tiny.rotation == 0);
    CHECK(format_word(tiny.u1) == "aA");
    CHECK(tiny.u2.empty());

    const FreeSplit sharp = split_null_word(fw("aAAabB"));
    CHECK(std::min(sharp.u1.size(), sharp.u2.size()) == 2);
    CHECK(oracle::best_cyclic_split(fw("aAAabB")) == 2);

    const Word m2 = fw("a2A4a2b2B2");
    const FreeSplit split = split_null_word(m2);
    CHECK(std::min(split.u1.size(), split.u2.size()) >= 4);
    CHECK(oracle::best_cyclic_split(m2) == 4);

    const FreeSplit none = split_null_word(Word(ab_symbols()));
    CHECK(none.u1.empty());
    CHECK(none.u2.empty());
  }

  TEST_CASE("sharpness family") {
    for (std::size_t m = 1; m <= 3; ++m) {
      const Word u = sharpness_word(m);
      const FreeSplit s = split_null_word(u);
      CHECK(std::min(s.u1.size(), s.u2.size()) == u.size() / 3);
      CHECK(oracle::best_cyclic_split(u) == u.size() / 3);
    }
  }

  TEST_CASE("split bound on random null words") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 400; ++i) {
      const Word u = random_free_null(1 + rng() % 100, rng);
      const FreeSplit s = split_null_word(u);
      CHECK(s.u1 + s.u2 == cyclic_conjugate(u, s.rotation));
      CHECK(free_reduce(s.u1).empty());
      CHECK(free_reduce(s.u2).empty());
      CHECK(std::min(s.u1.size(), s.u2.size()) >= u.size() / 3);
    }
  }

  TEST_CASE("split never beats the exhaustive optimum") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 60; ++i) {
      const Word u = random_free_null(1 + rng() % 8, rng);
      const FreeSplit s = split_null_word(u);
      const std::size_t best = oracle::best_cyclic_split(u);
      CHECK(std::min(s.u1.size(), s.u2.size()) <= best);
      CHECK(best >= u.size() / 3);
    }
  }

  TEST_CASE("dot output") {
    const CancellationTree t(fw("abBA"));
    const std::string dot = t.to_dot(1);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 2);
  }
}
