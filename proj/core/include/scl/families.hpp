#pragma once

// The word families over the twisted alphabet {a, b, c, t}:
//
//   w_n    = [t^n c t^-n, a] = t^n c t^-n a t^n c^-1 t^-n a^-1   (length 4n + 4)
//   u_k    = t^(n-k)  c    t^-n a    t^k
//   u'_k   = t^-(n-k) a    t^n  c^-1 t^-k
//   u''_k  = t^(n-k)  c^-1 t^-n a^-1 t^k
//   u'''_k = t^-(n-k) a^-1 t^n  c    t^-k
//
// The u words, 0 <= k <= n, are exactly the length-(2n + 2) windows of the
// cyclic word w_n. All four variants are built from these formulas directly.

#include <cstddef>
#include <string_view>
#include <vector>

#include "scl/cayley.hpp"
#include "scl/words.hpp"

namespace scl {

enum class Variant { kPlain, kPrime, kDoublePrime, kTriplePrime };

inline constexpr Variant kAllVariants[] = {Variant::kPlain, Variant::kPrime, Variant::kDoublePrime,
                                           Variant::kTriplePrime};

std::string_view to_string(Variant v);
// "plain", "prime", "dprime", "tprime". Throws InvalidSpec.
Variant parse_variant(std::string_view name);

struct FamilySpec {
  std::size_t n = 0;
  std::size_t k = 0;
  Variant variant = Variant::kPlain;
};

Word w_n(std::size_t n);

// Throws InvalidSpec when k > n.
Word u_family(const FamilySpec& spec);

// For every 0 <= k <= n: u'_{n-k} = phi(u_k^-1), u''_k = phi(psi(u_k)),
// u'''_{n-k} = psi(u_k^-1) letter for letter, and u_k u''_k is a cyclic
// conjugate of w_n.
bool verify_variant_identities(std::size_t n);

// w_n rewritten over {a, b, c, d} via t^n c t^-n = d^n c d^-n.
Word w_n_over_std(std::size_t n);

struct Z2Row {
  long m = 0;
  long l = 0;
  std::size_t expected = 0;  // |m| + |l|
  std::size_t actual = 0;
  bool ok() const { return expected == actual; }
};

// d(1, b^m t^l) in the twisted Cayley graph for all |m|, |l| <= bound.
std::vector<Z2Row> z2_distance_table(std::size_t bound, DistanceOracle& twisted_oracle);

}  // namespace scl
