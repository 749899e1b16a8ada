#include "scl/families.hpp"

#include <string>

#include "scl/error.hpp"
#include "scl/group.hpp"

namespace scl {

namespace {

const Alphabet& twisted_symbols() { return MarkedAlphabet::twisted().symbols(); }

Word t_power(long n) { return power(twisted_symbols(), 't', n); }
Word letter(char c, long sign) { return power(twisted_symbols(), c, sign); }

bool is_cyclic_conjugate(const Word& x, const Word& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i <= x.size(); ++i) {
    if (cyclic_conjugate(x, i) == y) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kPlain: return "plain";
    case Variant::kPrime: return "prime";
    case Variant::kDoublePrime: return "dprime";
    case Variant::kTriplePrime: return "tprime";
  }
  return "plain";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : kAllVariants) {
    if (to_string(v) == name) return v;
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown variant '" + std::string(name) + "'");
}

Word w_n(std::size_t n) {
  const auto m = static_cast<long>(n);
  return t_power(m) + letter('c', 1) + t_power(-m) + letter('a', 1) + t_power(m) + letter('c', -1) + t_power(-m) +
         letter('a', -1);
}

Word u_family(const FamilySpec& spec) {
  if (spec.k > spec.n) {
    throw Error(ErrorCode::kInvalidSpec,
                "k = " + std::to_string(spec.k) + " exceeds n = " + std::to_string(spec.n));
  }
  const auto n = static_cast<long>(spec.n);
  const auto k = static_cast<long>(spec.k);
  switch (spec.variant) {
    case Variant::kPlain:
      return t_power(n - k) + letter('c', 1) + t_power(-n) + letter('a', 1) + t_power(k);
    case Variant::kPrime:
      return t_power(-(n - k)) + letter('a', 1) + t_power(n) + letter('c', -1) + t_power(-k);
    case Variant::kDoublePrime:
      return t_power(n - k) + letter('c', -1) + t_power(-n) + letter('a', -1) + t_power(k);
    case Variant::kTriplePrime:
      return t_power(-(n - k)) + letter('a', -1) + t_power(n) + letter('c', 1) + t_power(-k);
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown variant");
}

bool verify_variant_identities(std::size_t n) {
  const Word cycle = w_n(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const Word u = u_family({n, k, Variant::kPlain});
    const Word u_inv = invert_word(u);
    if (u_family({n, n - k, Variant::kPrime}) != apply_automorphism(Automorphism::kPhi, u_inv)) return false;
    if (u_family({n, k, Variant::kDoublePrime}) !=
        apply_automorphism(Automorphism::kPhi, apply_automorphism(Automorphism::kPsi, u))) {
      return false;
    }
    if (u_family({n, n - k, Variant::kTriplePrime}) != apply_automorphism(Automorphism::kPsi, u_inv)) return false;
    if (!is_cyclic_conjugate(cycle, u + u_family({n, k, Variant::kDoublePrime}))) return false;
  }
  return true;
}

Word w_n_over_std(std::size_t n) {
  const Alphabet& abcd = std_symbols();
  const auto m = static_cast<long>(n);
  // d^n c d^-n a d^n c^-1 d^-n a^-1
  return power(abcd, 'd', m) + power(abcd, 'c', 1) + power(abcd, 'd', -m) + power(abcd, 'a', 1) +
         power(abcd, 'd', m) + power(abcd, 'c', -1) + power(abcd, 'd', -m) + power(abcd, 'a', -1);
}

std::vector<Z2Row> z2_distance_table(std::size_t bound, DistanceOracle& twisted_oracle) {
  const MarkedAlphabet& alphabet = twisted_oracle.alphabet();
  if (alphabet.symbols() != twisted_symbols()) {
    throw Error(ErrorCode::kInvalidAlphabet, "z2 table requires the twisted alphabet");
  }
  const auto b = static_cast<long>(bound);
  std::vector<Z2Row> rows;
  for (long m = -b; m <= b; ++m) {
    for (long l = -b; l <= b; ++l) {
      const Word w = power(twisted_symbols(), 'b', m) + t_power(l);
      Z2Row row;
      row.m = m;
      row.l = l;
      row.expected = static_cast<std::size_t>((m < 0 ? -m : m) + (l < 0 ? -l : l));
      row.actual = twisted_oracle.distance_from_identity(eval(w, alphabet));
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace scl
