#pragma once

// Strong-shortcut certificates for loops in Cay(F(a,b) x F(c,d), {a,b,c,d}).
//
// Given a null word w, take the factor contributing at least half the letters
// and project w onto it: u, with |u| >= |w|/2. Split u cyclically as u1 u2
// (both null, each of length >= floor(|u|/3) >= floor(|w|/6)). Each u_i
// occupies a cyclic arc of w; the arcs are disjoint, so the shorter one, w1,
// has |w1| <= |w|/2. Deleting the u_i letters from w1 leaves mu, equal to w1
// in G because a null word of one factor commutes past the other factor.
//
// Bounds, with s = floor(|w|/6) <= |u_i|:
//   loop1 = |w1| + |mu| = 2|w1| - |u_i| <= |w| - s
//   loop2 = |mu| + |w2| = |w| - |u_i|    <= |w| - s
// For |w| >= 42 (in fact >= 35) s >= |w|/7, which gives the form with
// lambda = 6/7:
//   (1 - lambda)|w| = |w|/7 <= s <= |u_i| <= |w1| <= |w2|
//   |mu| = |w1| - |u_i| <= |w1| - |w|/7 <= |w1| - |w1|/7 = lambda |w1|

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scl/words.hpp"

namespace scl {

enum class Factor { kAB, kCD };

std::string_view to_string(Factor f);

inline constexpr std::size_t kShortcutLengthThreshold = 24;  // loops <= |w| - floor(|w|/6)
inline constexpr std::size_t kLambdaFormThreshold = 42;       // L
inline constexpr std::size_t kLambdaNumerator = 6;           // lambda = 6/7
inline constexpr std::size_t kLambdaDenominator = 7;

struct ShortcutCertificate {
  std::size_t rotation = 0;
  std::size_t split = 0;  // |w1|
  Word w1;
  Word w2;
  Word mu;
  Factor factor = Factor::kAB;
  std::vector<std::size_t> deleted_positions;  // within w1
  std::size_t loop1_length = 0;                 // |w1| + |mu|
  std::size_t loop2_length = 0;                 // |mu| + |w2|
};

// Requires w over std_symbols(), null in G, |w| >= 2. Throws NotNull.
ShortcutCertificate shortcut(const Word& w);

enum class VerifyReason {
  kOk,
  kWrongAlphabet,
  kNotNull,
  kRotationMismatch,
  kElementMismatch,
  kDeletionMismatch,
  kLoopLengthMismatch,
  kShortcutBoundViolated,
  kLambdaFormViolated,
};

std::string_view to_string(VerifyReason r);

struct VerifyResult {
  VerifyReason reason = VerifyReason::kOk;
  explicit operator bool() const { return reason == VerifyReason::kOk; }
};

// Re-checks every certificate invariant from scratch, plus the length
// guarantees that apply at |w|.
VerifyResult verify_certificate(const Word& w, const ShortcutCertificate& cert);

// Single-line JSON record with fields in the order
// rotation, split, w1, w2, mu, factor, loop1, loop2.
std::string to_json(const ShortcutCertificate& cert);

// Inverse of to_json. deleted_positions are recovered as the positions of
// the certificate factor's letters in w1. Throws InvalidSpec on bad input.
ShortcutCertificate certificate_from_json(std::string_view json);

}  // namespace scl
