#include "scl/shortcut_product.hpp"

#include <nlohmann/json.hpp>

#include "scl/error.hpp"
#include "scl/group.hpp"
#include "scl/shortcut_free.hpp"

namespace scl {

namespace {

bool in_factor(Letter l, Factor f) { return f == Factor::kAB ? l.symbol < 2 : l.symbol >= 2; }

struct Arc {
  std::size_t start = 0;
  std::size_t length = 0;
};

}  // namespace

std::string_view to_string(Factor f) { return f == Factor::kAB ? "ab" : "cd"; }

std::string_view to_string(VerifyReason r) {
  switch (r) {
    case VerifyReason::kOk: return "ok";
    case VerifyReason::kWrongAlphabet: return "wrong alphabet";
    case VerifyReason::kNotNull: return "loop is not null";
    case VerifyReason::kRotationMismatch: return "rotation mismatch";
    case VerifyReason::kElementMismatch: return "element mismatch";
    case VerifyReason::kDeletionMismatch: return "deletion mismatch";
    case VerifyReason::kLoopLengthMismatch: return "loop length mismatch";
    case VerifyReason::kShortcutBoundViolated: return "shortcut bound violated";
    case VerifyReason::kLambdaFormViolated: return "lambda bound violated";
  }
  return "unknown";
}

ShortcutCertificate shortcut(const Word& w) {
  if (w.alphabet() != std_symbols()) {
    throw Error(ErrorCode::kUnknownGenerator, "shortcut certificates are built over the alphabet 'abcd'");
  }
  if (w.size() < 2) throw Error(ErrorCode::kInvalidSpec, "loop must have at least 2 letters");
  if (!std_element(w).is_identity()) {
    throw Error(ErrorCode::kNotNull, "'" + format_word(w) + "' does not represent the identity");
  }

  std::size_t ab_count = 0;
  for (Letter l : w) ab_count += l.symbol < 2 ? 1 : 0;
  const Factor factor = 2 * ab_count >= w.size() ? Factor::kAB : Factor::kCD;
  const std::uint8_t offset = factor == Factor::kAB ? 0 : 2;

  // u: the projection onto the majority factor; positions[k] is where u[k] sits in w.
  std::vector<std::size_t> positions;
  Word u(factor == Factor::kAB ? ab_symbols() : cd_symbols());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (in_factor(w[i], factor)) {
      positions.push_back(i);
      u.push_back(Letter{static_cast<std::uint8_t>(w[i].symbol - offset), w[i].sign});
    }
  }

  const FreeSplit split = split_null_word(u);
  const std::size_t nu = u.size();
  const std::size_t nw = w.size();
  auto arc_of = [&](std::size_t first, std::size_t count) -> std::optional<Arc> {
    if (count == 0) return std::nullopt;
    const std::size_t begin = positions[first % nu];
    const std::size_t end = positions[(first + count - 1) % nu];
    return Arc{begin, (end + nw - begin) % nw + 1};
  };
  const auto arc1 = arc_of(split.rotation, split.u1.size());
  const auto arc2 = arc_of(split.rotation + split.u1.size(), split.u2.size());

  Arc chosen;
  if (arc1 && arc2) {
    chosen = arc2->length < arc1->length ? *arc2 : *arc1;
  } else {
    chosen = arc1 ? *arc1 : *arc2;
  }

  ShortcutCertificate cert;
  cert.factor = factor;
  cert.rotation = chosen.start;
  cert.split = chosen.length;
  const Word rotated = cyclic_conjugate(w, chosen.start);
  cert.w1 = rotated.subword(0, chosen.length);
  cert.w2 = rotated.subword(chosen.length, nw - chosen.length);
  cert.mu = Word(std_symbols());
  for (std::size_t i = 0; i < cert.w1.size(); ++i) {
    if (in_factor(cert.w1[i], factor)) {
      cert.deleted_positions.push_back(i);
    } else {
      cert.mu.push_back(cert.w1[i]);
    }
  }
  cert.loop1_length = cert.w1.size() + cert.mu.size();
  cert.loop2_length = cert.mu.size() + cert.w2.size();
  return cert;
}

VerifyResult verify_certificate(const Word& w, const ShortcutCertificate& cert) {
  auto fail = [](VerifyReason r) { return VerifyResult{r}; };
  const Alphabet& abcd = std_symbols();
  for (const Word* x : {&w, &cert.w1, &cert.w2, &cert.mu}) {
    if (x->alphabet() != abcd && !x->empty()) return fail(VerifyReason::kWrongAlphabet);
  }
  if (!std_element(w).is_identity()) return fail(VerifyReason::kNotNull);

  if (cert.rotation > w.size() || cert.split != cert.w1.size() ||
      cert.w1.size() + cert.w2.size() != w.size()) {
    return fail(VerifyReason::kRotationMismatch);
  }
  const Word rotated = cyclic_conjugate(w, cert.rotation);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter expected = i < cert.w1.size() ? cert.w1[i] : cert.w2[i - cert.w1.size()];
    if (!(rotated[i] == expected)) return fail(VerifyReason::kRotationMismatch);
  }

  if (!(std_element(cert.mu) == std_element(cert.w1))) return fail(VerifyReason::kElementMismatch);

  // mu must be w1 with exactly the listed positions removed.
  std::size_t k = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < cert.w1.size(); ++i) {
    if (k < cert.deleted_positions.size() && cert.deleted_positions[k] == i) {
      ++k;
      continue;
    }
    if (m >= cert.mu.size() || !(cert.mu[m] == cert.w1[i])) return fail(VerifyReason::kDeletionMismatch);
    ++m;
  }
  if (m != cert.mu.size() || k != cert.deleted_positions.size()) return fail(VerifyReason::kDeletionMismatch);

  if (cert.loop1_length != cert.w1.size() + cert.mu.size() ||
      cert.loop2_length != cert.mu.size() + cert.w2.size()) {
    return fail(VerifyReason::kLoopLengthMismatch);
  }

  const std::size_t n = w.size();
  if (n >= kShortcutLengthThreshold) {
    const std::size_t bound = n - n / 6;
    if (cert.loop1_length > bound || cert.loop2_length > bound) return fail(VerifyReason::kShortcutBoundViolated);
  }
  if (n >= kLambdaFormThreshold) {
    const std::size_t w1 = cert.w1.size();
    const bool lower = (kLambdaDenominator - kLambdaNumerator) * n <= kLambdaDenominator * w1;
    const bool ordered = w1 <= cert.w2.size();
    const bool short_mu = kLambdaDenominator * cert.mu.size() <= kLambdaNumerator * w1;
    if (!(lower && ordered && short_mu)) return fail(VerifyReason::kLambdaFormViolated);
  }
  return VerifyResult{};
}

std::string to_json(const ShortcutCertificate& cert) {
  nlohmann::ordered_json j;
  j["rotation"] = cert.rotation;
  j["split"] = cert.split;
  j["w1"] = format_word(cert.w1);
  j["w2"] = format_word(cert.w2);
  j["mu"] = format_word(cert.mu);
  j["factor"] = std::string(to_string(cert.factor));
  j["loop1"] = cert.loop1_length;
  j["loop2"] = cert.loop2_length;
  return j.dump();
}

ShortcutCertificate certificate_from_json(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    ShortcutCertificate cert;
    cert.rotation = j.at("rotation").get<std::size_t>();
    cert.split = j.at("split").get<std::size_t>();
    cert.w1 = parse_word(j.at("w1").get<std::string>(), std_symbols());
    cert.w2 = parse_word(j.at("w2").get<std::string>(), std_symbols());
    cert.mu = parse_word(j.at("mu").get<std::string>(), std_symbols());
    const auto factor = j.at("factor").get<std::string>();
    if (factor != "ab" && factor != "cd") throw Error(ErrorCode::kInvalidSpec, "factor must be 'ab' or 'cd'");
    cert.factor = factor == "ab" ? Factor::kAB : Factor::kCD;
    cert.loop1_length = j.at("loop1").get<std::size_t>();
    cert.loop2_length = j.at("loop2").get<std::size_t>();
    for (std::size_t i = 0; i < cert.w1.size(); ++i) {
      if (in_factor(cert.w1[i], cert.factor)) cert.deleted_positions.push_back(i);
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidSpec, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace scl
