#include <doctest.h>

#include <algorithm>

#include "scl/error.hpp"
#include "scl/group.hpp"
#include "scl/shortcut_product.hpp"

using namespace scl;

namespace {

Word sw(std::string_view text) { return parse_word(text, std_symbols()); }

}  // namespace

TEST_SUITE("shortcut_product") {
  TEST_CASE("worked example") {
    const Word w = sw("acACacAC");
    const ShortcutCertificate cert = shortcut(w);
    CHECK(cert.factor == Factor::kAB);
    CHECK(cert.rotation == 0);
    CHECK(format_word(cert.w1) == "acA");
    CHECK(format_word(cert.w2) == "CacAC");
    CHECK(format_word(cert.mu) == "c");
    CHECK(cert.loop1_length == 4);
    CHECK(cert.loop2_length == 6);
    CHECK(cert.deleted_positions == std::vector<std::size_t>{0, 2});
    CHECK(verify_certificate(w, cert));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(shortcut(sw("abc")), Error);
    CHECK_THROWS_AS(shortcut(sw("aA").subword(0, 0)), Error);
    CHECK_THROWS_AS(shortcut(MarkedAlphabet::twisted().parse("tT")), Error);
  }

  TEST_CASE("forged certificates are rejected") {
    const Word w = sw("acACacAC");
    const ShortcutCertificate good = shortcut(w);

    ShortcutCertificate bad_mu = good;
    bad_mu.mu = sw("a");
    CHECK(verify_certificate(w, bad_mu).reason == VerifyReason::kElementMismatch);

    ShortcutCertificate bad_split = good;
    bad_split.split = 4;
    CHECK(verify_certificate(w, bad_split).reason == VerifyReason::kRotationMismatch);

    ShortcutCertificate bad_rotation = good;
    bad_rotation.rotation = 1;
    CHECK(verify_certificate(w, bad_rotation).reason == VerifyReason::kRotationMismatch);

    ShortcutCertificate bad_loop = good;
    bad_loop.loop2_length = 5;
    CHECK(verify_certificate(w, bad_loop).reason == VerifyReason::kLoopLengthMismatch);

    CHECK(verify_certificate(sw("ab"), good).reason == VerifyReason::kNotNull);
    CHECK(verify_certificate(MarkedAlphabet::twisted().parse("tT"), good).reason == VerifyReason::kWrongAlphabet);
  }

  TEST_CASE("shortcut bound on random null words") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const std::size_t len = 24 + 2 * (seed % 100);
      const Word w = random_null_word(len, 0.2 + 0.6 * static_cast<double>(seed % 5) / 4, seed);
      const ShortcutCertificate cert = shortcut(w);
      const VerifyResult r = verify_certificate(w, cert);
      CHECK_MESSAGE(r, format_word(w), " ", to_string(r.reason));
      const std::size_t bound = w.size() - w.size() / 6;
      CHECK(cert.loop1_length <= bound);
      CHECK(cert.loop2_length <= bound);
      CHECK(cert.w1.size() + cert.w2.size() == w.size());
      CHECK(std_element(cert.w1) == std_element(cert.mu));
      if (w.size() >= kLambdaFormThreshold) {
        CHECK(7 * cert.mu.size() <= 6 * cert.w1.size());
        CHECK(w.size() <= 7 * cert.w1.size());
        CHECK(cert.w1.size() <= cert.w2.size());
      }
    }
  }

  TEST_CASE("length 120") {
    const Word w = random_null_word(120, 0.5, 99);
    const ShortcutCertificate cert = shortcut(w);
    CHECK(cert.loop1_length <= 100);
    CHECK(cert.loop2_length <= 100);
    CHECK(verify_certificate(w, cert));
  }

  TEST_CASE("single-factor words") {
    const Word w = sw("a3A3b4B4");
    const ShortcutCertificate cert = shortcut(w);
    CHECK(cert.mu.empty());
    CHECK(verify_certificate(w, cert));
    const Word cd = sw("c2D3d3C2");
    CHECK(shortcut(cd).factor == Factor::kCD);
  }

  TEST_CASE("json round trip") {
    const Word w = random_null_word(60, 0.5, 4);
    const ShortcutCertificate cert = shortcut(w);
    const std::string json = to_json(cert);
    CHECK(json.find('\n') == std::string::npos);
    CHECK(json.rfind("{\"rotation\":", 0) == 0);
    const ShortcutCertificate back = certificate_from_json(json);
    CHECK(back.rotation == cert.rotation);
    CHECK(back.split == cert.split);
    CHECK(back.w1 == cert.w1);
    CHECK(back.w2 == cert.w2);
    CHECK(back.mu == cert.mu);
    CHECK(back.factor == cert.factor);
    CHECK(back.deleted_positions == cert.deleted_positions);
    CHECK(verify_certificate(w, back));
    CHECK_THROWS_AS(certificate_from_json("{\"rotation\":1}"), Error);
    CHECK_THROWS_AS(certificate_from_json("not json"), Error);
  }
}
