#pragma once

// Letters, words and alphabets.
//
// A word is a sequence of signed generator symbols. Symbols are small integer
// identifiers assigned in declaration order by the governing Alphabet; the
// alphabet keeps the character used for each symbol in text form.
//
// Text grammar: a sequence of tokens, each a symbol character (lowercase for
// the generator, uppercase for its inverse) optionally followed by a decimal
// repeat count >= 1. Whitespace is ignored. "t5cT5a" is t^5 c t^-5 a.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scl {

struct Letter {
  std::uint8_t symbol = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const { return Letter{symbol, static_cast<std::int8_t>(-sign)}; }
  constexpr bool cancels(Letter other) const { return symbol == other.symbol && sign == -other.sign; }

  // Symbol declaration order, positive before negative.
  constexpr int order_key() const { return 2 * symbol + (sign < 0 ? 1 : 0); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter lhs, Letter rhs) {
    return lhs.order_key() <=> rhs.order_key();
  }
};

// Ordered set of generator symbols (lowercase ASCII letters).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string symbols);

  // Lowercase letters appearing in `text` (either case), in alphabetical order.
  static Alphabet from_text(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  std::string_view symbols() const { return symbols_; }
  char symbol_char(std::uint8_t symbol) const { return symbols_.at(symbol); }
  std::optional<std::uint8_t> index_of(char lowercase) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

// The four generators of F(a,b) x F(c,d), and the two factor alphabets.
const Alphabet& std_symbols();
const Alphabet& ab_symbols();
const Alphabet& cd_symbols();

class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter letter);
  void append(const Word& other);

  // Letters [pos, pos + count).
  Word subword(std::size_t pos, std::size_t count) const;

  friend Word operator+(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w);

// Reduction in the free group on the word's symbols. Only meaningful for
// words over a single free factor; evaluation in G lives in group.hpp.
Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

// w[i..] ++ w[..i]; i == |w| is allowed and equals the identity rotation.
Word cyclic_conjugate(const Word& w, std::size_t i);

Word invert_word(const Word& w);

// x^n for a single letter; negative n gives inverse letters.
Word power(const Alphabet& alphabet, char symbol, long n);

// Random word over std_symbols() evaluating to the identity of F(a,b) x F(c,d).
//
// About factor_bias * target_length letters come from the {a,b} factor (the
// pair count is binomial). Each factor word is a uniformly random non-crossing
// perfect matching whose pairs carry a random generator and orientation; the
// two factor words are interleaved by a uniformly random shuffle. Not uniform
// over null words, but every null word has positive probability.
Word random_null_word(std::size_t target_length, double factor_bias, std::uint64_t seed);

// Uniformly random balanced-parenthesis sequence with `pairs` pairs; true = open.
std::vector<bool> random_dyck_word(std::size_t pairs, std::mt19937_64& rng);

}  // namespace scl
