#include <doctest.h>

#include "scl/error.hpp"
#include "scl/families.hpp"
#include "scl/group.hpp"

using namespace scl;

namespace {

NormalForm nf(std::string_view ab, std::string_view cd) {
  return NormalForm(parse_word(ab, ab_symbols()), parse_word(cd, cd_symbols()));
}

NormalForm std_eval(std::string_view text) { return eval(parse_word(text, std_symbols()), MarkedAlphabet::standard()); }

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("evaluation") {
    CHECK(std_eval("aA").is_identity());
    const auto& tw = MarkedAlphabet::twisted();
    CHECK(eval(tw.parse("t"), tw) == nf("B", "d"));
    CHECK(eval(tw.parse("tcTatCTA"), tw).is_identity());
    CHECK(to_string(eval(tw.parse("t"), tw)) == "Bd");
    CHECK(to_string(NormalForm()) == "1");
    CHECK_THROWS_AS(eval(parse_word("ab", ab_symbols()), tw), Error);
  }

  TEST_CASE("multiply and inverse") {
    const NormalForm g = nf("ab", "c");
    CHECK(multiply(NormalForm(), g) == g);
    CHECK(multiply(nf("a", ""), nf("A", "")).is_identity());
    CHECK(multiply(nf("ab", "c"), nf("B", "c")) == nf("a", "c2"));
    CHECK(inverse(NormalForm()).is_identity());
    CHECK(inverse(nf("a", "")) == nf("A", ""));
    CHECK(inverse(nf("ab", "cd")) == nf("BA", "DC"));
    CHECK(multiply(nf("ab", "cd"), inverse(nf("ab", "cd"))).is_identity());
  }

  TEST_CASE("eval is a homomorphism") {
    const auto& tw = MarkedAlphabet::twisted();
    const char* words[] = {"", "a", "tcT", "b3t2", "TTaBc", "atbABT", "t5cT5at5CT5A", "cCtb"};
    for (const char* x : words) {
      for (const char* y : words) {
        const Word wx = tw.parse(x);
        const Word wy = tw.parse(y);
        CHECK(eval(wx + wy, tw) == multiply(eval(wx, tw), eval(wy, tw)));
      }
      CHECK(eval(invert_word(tw.parse(x)), tw) == inverse(eval(tw.parse(x), tw)));
    }
  }

  TEST_CASE("marked alphabets") {
    CHECK(MarkedAlphabet::standard().name() == "std");
    CHECK(MarkedAlphabet::twisted().name() == "twisted");
    CHECK(MarkedAlphabet::standard().has_parity());
    CHECK(MarkedAlphabet::twisted().has_parity());
    CHECK_FALSE(MarkedAlphabet::from_spec("a=a,b=b,c=c,d=d,e=ac").has_parity());

    const MarkedAlphabet custom = MarkedAlphabet::from_spec("a=a,b=b,c=c,t=dB");
    CHECK(custom.images() == MarkedAlphabet::twisted().images());
    CHECK_THROWS_AS(MarkedAlphabet::from_spec("a=aA"), Error);
    CHECK_THROWS_AS(MarkedAlphabet::from_spec("bogus"), Error);
    CHECK_THROWS_AS(MarkedAlphabet::from_generators("a=x"), Error);
  }

  TEST_CASE("automorphisms") {
    const Word a = MarkedAlphabet::twisted().parse("a");
    CHECK(format_word(apply_automorphism(Automorphism::kPhi, a)) == "A");
    const Word abt = MarkedAlphabet::twisted().parse("abt");
    CHECK(apply_automorphism(Automorphism::kPsi, abt) == abt);
    const Word w3 = w_n(3);
    CHECK(apply_automorphism(Automorphism::kPhi, apply_automorphism(Automorphism::kPhi, w3)) == w3);
    CHECK_THROWS_AS(apply_automorphism(Automorphism::kPhi, parse_word("a", std_symbols())), Error);
  }

  TEST_CASE("relators") {
    const auto rel = twisted_presentation_relators();
    REQUIRE(rel.size() == 4);
    CHECK(format_word(rel[0]) == "acAC");
    CHECK(check_relators(MarkedAlphabet::twisted(), rel) == std::vector<bool>{true, true, true, true});
    const auto& sa = MarkedAlphabet::standard();
    CHECK(check_relators(sa, {sa.parse("acAC")}) == std::vector<bool>{true});
    CHECK(check_relators(sa, {sa.parse("ab")}) == std::vector<bool>{false});
  }

  TEST_CASE("commutator") {
    const auto& sa = MarkedAlphabet::standard();
    CHECK(format_word(commutator(sa.parse("a"), sa.parse("c"))) == "acAC");
    CHECK_FALSE(eval(commutator(sa.parse("a"), sa.parse("b")), sa).is_identity());
  }
}
