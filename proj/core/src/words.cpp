#include "scl/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "scl/error.hpp"

namespace scl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
    case ErrorCode::kMalformedCount: return "MalformedCount";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kOddLength: return "OddLength";
    case ErrorCode::kNotNull: return "NotNull";
    case ErrorCode::kRadiusExhausted: return "RadiusExhausted";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidAlphabet: return "InvalidAlphabet";
  }
  return "Unknown";
}

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    char c = symbols_[i];
    if (c < 'a' || c > 'z') {
      throw Error(ErrorCode::kInvalidAlphabet, std::string("symbol '") + c + "' is not a lowercase letter");
    }
    if (symbols_.find(c) != i) {
      throw Error(ErrorCode::kInvalidAlphabet, std::string("duplicate symbol '") + c + "'");
    }
  }
}

Alphabet Alphabet::from_text(std::string_view text) {
  std::string seen;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (seen.find(lower) == std::string::npos) seen.push_back(lower);
    }
  }
  std::sort(seen.begin(), seen.end());
  return Alphabet(std::move(seen));
}

std::optional<std::uint8_t> Alphabet::index_of(char lowercase) const {
  auto pos = symbols_.find(lowercase);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<std::uint8_t>(pos);
}

const Alphabet& std_symbols() {
  static const Alphabet alphabet("abcd");
  return alphabet;
}

const Alphabet& ab_symbols() {
  static const Alphabet alphabet("ab");
  return alphabet;
}

const Alphabet& cd_symbols() {
  static const Alphabet alphabet("cd");
  return alphabet;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (l.symbol >= alphabet_.size() || (l.sign != 1 && l.sign != -1)) {
      throw Error(ErrorCode::kUnknownGenerator, "letter outside alphabet '" +
                                                    std::string(alphabet_.symbols()) + "'");
    }
  }
}

void Word::push_back(Letter letter) {
  if (letter.symbol >= alphabet_.size()) {
    throw Error(ErrorCode::kUnknownGenerator, "letter outside alphabet");
  }
  letters_.push_back(letter);
}

void Word::append(const Word& other) {
  if (letters_.empty() && alphabet_.size() == 0) alphabet_ = other.alphabet_;
  if (other.alphabet_ != alphabet_ && !other.empty()) {
    throw Error(ErrorCode::kUnknownGenerator, "concatenating words over different alphabets");
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  if (pos > letters_.size() || count > letters_.size() - pos) {
    throw Error(ErrorCode::kIndexOutOfRange, "subword outside word");
  }
  Word out(alphabet_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word out(alphabet);
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::kMalformedCount, "count without a preceding symbol at offset " + std::to_string(i));
      }
      throw Error(ErrorCode::kUnknownGenerator, std::string("unexpected character '") + c + "'");
    }
    const bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto symbol = alphabet.index_of(lower);
    if (!symbol) {
      throw Error(ErrorCode::kUnknownGenerator, std::string("generator '") + lower + "' not in alphabet '" +
                                                    std::string(alphabet.symbols()) + "'");
    }
    ++i;
    std::size_t count = 1;
    std::size_t digits_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > digits_begin) {
      std::string_view digits = text.substr(digits_begin, i - digits_begin);
      if (digits.size() > 9) throw Error(ErrorCode::kMalformedCount, "count too large");
      count = static_cast<std::size_t>(std::stoul(std::string(digits)));
      if (count == 0) throw Error(ErrorCode::kMalformedCount, "repeat count must be >= 1");
    }
    Letter letter{*symbol, static_cast<std::int8_t>(inverse ? -1 : 1)};
    for (std::size_t k = 0; k < count; ++k) out.push_back(letter);
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  auto letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    char c = w.alphabet().symbol_char(letters[i].symbol);
    out.push_back(letters[i].sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (j - i >= 2) out += std::to_string(j - i);
    i = j;
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(w.alphabet(), std::move(stack));
}

bool is_freely_reduced(const Word& w) {
  auto letters = w.letters();
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i - 1].cancels(letters[i])) return false;
  }
  return true;
}

Word cyclic_conjugate(const Word& w, std::size_t i) {
  if (i > w.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "rotation " + std::to_string(i) + " exceeds length " + std::to_string(w.size()));
  }
  std::vector<Letter> letters(w.begin(), w.end());
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(i), letters.end());
  return Word(w.alphabet(), std::move(letters));
}

Word invert_word(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(it->inverse());
  return Word(w.alphabet(), std::move(letters));
}

Word power(const Alphabet& alphabet, char symbol, long n) {
  auto index = alphabet.index_of(symbol);
  if (!index) throw Error(ErrorCode::kUnknownGenerator, std::string("generator '") + symbol + "'");
  Letter letter{*index, static_cast<std::int8_t>(n < 0 ? -1 : 1)};
  Word out(alphabet);
  for (long k = 0; k < (n < 0 ? -n : n); ++k) out.push_back(letter);
  return out;
}

std::vector<bool> random_dyck_word(std::size_t pairs, std::mt19937_64& rng) {
  // Cycle lemma: a uniformly random arrangement of `pairs` up-steps and
  // `pairs + 1` down-steps has exactly one rotation whose every proper prefix
  // sum is non-negative; dropping its final down-step leaves a uniform Dyck word.
  std::vector<bool> steps(2 * pairs + 1, false);
  std::fill(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(pairs), true);
  std::shuffle(steps.begin(), steps.end(), rng);

  long height = 0;
  long lowest = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] ? 1 : -1;
    if (height < lowest) {
      lowest = height;
      start = i + 1;
    }
  }
  std::vector<bool> out;
  out.reserve(2 * pairs);
  for (std::size_t k = 0; k < 2 * pairs; ++k) out.push_back(steps[(start + k) % steps.size()]);
  return out;
}

namespace {

// Letters of one factor word: a random non-crossing matching with each pair
// labelled x^e ... x^-e for a random generator x among `first`, `first + 1`.
std::vector<Letter> random_factor_null_word(std::size_t pairs, std::uint8_t first, std::mt19937_64& rng) {
  std::vector<bool> dyck = random_dyck_word(pairs, rng);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters(dyck.size());
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < dyck.size(); ++i) {
    if (dyck[i]) {
      open.push_back(i);
      continue;
    }
    std::size_t j = open.back();
    open.pop_back();
    Letter l{static_cast<std::uint8_t>(first + coin(rng)), static_cast<std::int8_t>(coin(rng) ? 1 : -1)};
    letters[j] = l;
    letters[i] = l.inverse();
  }
  return letters;
}

}  // namespace

Word random_null_word(std::size_t target_length, double factor_bias, std::uint64_t seed) {
  if (target_length % 2 != 0) {
    throw Error(ErrorCode::kOddLength, "null words have even length, got " + std::to_string(target_length));
  }
  if (!(factor_bias >= 0.0 && factor_bias <= 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "factor_bias must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  const std::size_t total_pairs = target_length / 2;
  std::binomial_distribution<std::size_t> split(total_pairs, factor_bias);
  const std::size_t ab_pairs = total_pairs == 0 ? 0 : split(rng);
  const std::size_t cd_pairs = total_pairs - ab_pairs;

  std::vector<Letter> ab = random_factor_null_word(ab_pairs, 0, rng);
  std::vector<Letter> cd = random_factor_null_word(cd_pairs, 2, rng);

  std::vector<bool> from_ab(target_length, false);
  std::fill(from_ab.begin(), from_ab.begin() + static_cast<std::ptrdiff_t>(ab.size()), true);
  std::shuffle(from_ab.begin(), from_ab.end(), rng);

  std::vector<Letter> letters;
  letters.reserve(target_length);
  std::size_t i = 0, j = 0;
  for (bool pick_ab : from_ab) letters.push_back(pick_ab ? ab[i++] : cd[j++]);
  return Word(std_symbols(), std::move(letters));
}

}  // namespace scl
