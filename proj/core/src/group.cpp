#include "scl/group.hpp"

#include <array>

#include "scl/error.hpp"

namespace scl {

namespace {

Word reduce_checked(const Word& w, const Alphabet& expected) {
  if (w.alphabet() != expected && !w.empty()) {
    throw Error(ErrorCode::kUnknownGenerator,
                "factor word must be over '" + std::string(expected.symbols()) + "'");
  }
  return free_reduce(Word(expected, std::vector<Letter>(w.begin(), w.end())));
}

// Exponent sums of a, b, c, d modulo 2.
std::array<int, 4> parity_vector(const NormalForm& g) {
  std::array<int, 4> v{};
  for (Letter l : g.ab_part()) v[l.symbol] ^= 1;
  for (Letter l : g.cd_part()) v[2 + l.symbol] ^= 1;
  return v;
}

}  // namespace

NormalForm::NormalForm() : ab_(ab_symbols()), cd_(cd_symbols()) {}

NormalForm::NormalForm(const Word& ab, const Word& cd)
    : ab_(reduce_checked(ab, ab_symbols())), cd_(reduce_checked(cd, cd_symbols())) {}

Word NormalForm::to_std_word() const {
  Word out(std_symbols());
  for (Letter l : ab_) out.push_back(l);
  for (Letter l : cd_) out.push_back(Letter{static_cast<std::uint8_t>(l.symbol + 2), l.sign});
  return out;
}

std::string to_string(const NormalForm& g) {
  if (g.is_identity()) return "1";
  return format_word(g.to_std_word());
}

NormalForm multiply(const NormalForm& g, const NormalForm& h) {
  return NormalForm(g.ab_part() + h.ab_part(), g.cd_part() + h.cd_part());
}

NormalForm inverse(const NormalForm& g) {
  return NormalForm(invert_word(g.ab_part()), invert_word(g.cd_part()));
}

NormalForm std_element(const Word& w) {
  if (w.alphabet() != std_symbols() && !w.empty()) {
    throw Error(ErrorCode::kUnknownGenerator, "expected a word over 'abcd'");
  }
  Word ab(ab_symbols());
  Word cd(cd_symbols());
  for (Letter l : w) {
    if (l.symbol < 2) {
      ab.push_back(l);
    } else {
      cd.push_back(Letter{static_cast<std::uint8_t>(l.symbol - 2), l.sign});
    }
  }
  return NormalForm(ab, cd);
}

MarkedAlphabet::MarkedAlphabet(std::string name, Alphabet symbols, std::vector<NormalForm> images)
    : name_(std::move(name)), symbols_(std::move(symbols)), images_(std::move(images)) {
  if (images_.size() != symbols_.size()) {
    throw Error(ErrorCode::kInvalidAlphabet, "one image per symbol required");
  }
  if (images_.empty()) throw Error(ErrorCode::kInvalidAlphabet, "empty generating set");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].is_identity()) {
      throw Error(ErrorCode::kInvalidAlphabet,
                  std::string("generator '") + symbols_.symbol_char(static_cast<std::uint8_t>(i)) +
                      "' maps to the identity");
    }
  }
  // Parity homomorphisms G -> Z/2 factor through the abelianization Z^4, so
  // it is enough to search the 16 functionals on exponent sums mod 2.
  for (int mask = 0; mask < 16 && !has_parity_; ++mask) {
    bool all_odd = true;
    for (const NormalForm& g : images_) {
      auto v = parity_vector(g);
      int value = 0;
      for (int k = 0; k < 4; ++k) value ^= v[k] & ((mask >> k) & 1);
      if (value != 1) {
        all_odd = false;
        break;
      }
    }
    has_parity_ = all_odd;
  }
}

const MarkedAlphabet& MarkedAlphabet::standard() {
  static const MarkedAlphabet alphabet = [] {
    MarkedAlphabet a = from_generators("a=a,b=b,c=c,d=d");
    a.name_ = "std";
    return a;
  }();
  return alphabet;
}

const MarkedAlphabet& MarkedAlphabet::twisted() {
  static const MarkedAlphabet alphabet = [] {
    MarkedAlphabet a = from_generators("a=a,b=b,c=c,t=dB");
    a.name_ = "twisted";
    return a;
  }();
  return alphabet;
}

MarkedAlphabet MarkedAlphabet::from_spec(std::string_view spec) {
  if (spec == "std") return standard();
  if (spec == "twisted") return twisted();
  if (spec.find('=') != std::string_view::npos) return from_generators(spec);
  throw Error(ErrorCode::kInvalidAlphabet, "unknown alphabet '" + std::string(spec) + "'");
}

MarkedAlphabet MarkedAlphabet::from_generators(std::string_view gen_list) {
  std::string symbols;
  std::vector<NormalForm> images;
  std::size_t pos = 0;
  while (pos <= gen_list.size()) {
    std::size_t comma = gen_list.find(',', pos);
    if (comma == std::string_view::npos) comma = gen_list.size();
    std::string_view item = gen_list.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    auto eq = item.find('=');
    if (eq != 1) {
      throw Error(ErrorCode::kInvalidAlphabet, "expected 'sym=word', got '" + std::string(item) + "'");
    }
    symbols.push_back(item[0]);
    images.push_back(std_element(parse_word(item.substr(2), std_symbols())));
    pos = comma + 1;
  }
  std::string name = "custom(" + std::string(gen_list) + ")";
  return MarkedAlphabet(std::move(name), Alphabet(std::move(symbols)), std::move(images));
}

NormalForm eval(const Word& w, const MarkedAlphabet& alphabet) {
  if (w.alphabet() != alphabet.symbols() && !w.empty()) {
    throw Error(ErrorCode::kUnknownGenerator, "word over '" + std::string(w.alphabet().symbols()) +
                                                  "' evaluated in alphabet '" +
                                                  std::string(alphabet.symbols().symbols()) + "'");
  }
  // Letter-by-letter stack reduction per factor.
  std::vector<Letter> ab;
  std::vector<Letter> cd;
  auto push = [](std::vector<Letter>& stack, Letter l) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  };
  for (Letter l : w) {
    const NormalForm& g = alphabet.image(l.symbol);
    if (l.sign > 0) {
      for (Letter x : g.ab_part()) push(ab, x);
      for (Letter x : g.cd_part()) push(cd, x);
    } else {
      for (auto it = g.ab_part().letters().rbegin(); it != g.ab_part().letters().rend(); ++it) push(ab, it->inverse());
      for (auto it = g.cd_part().letters().rbegin(); it != g.cd_part().letters().rend(); ++it) push(cd, it->inverse());
    }
  }
  return NormalForm(Word(ab_symbols(), std::move(ab)), Word(cd_symbols(), std::move(cd)));
}

Word apply_automorphism(Automorphism which, const Word& w) {
  const Alphabet& twisted = MarkedAlphabet::twisted().symbols();
  if (w.alphabet() != twisted && !w.empty()) {
    throw Error(ErrorCode::kUnknownGenerator, "automorphisms act on words over 'abct'");
  }
  const std::uint8_t flipped = *twisted.index_of(which == Automorphism::kPhi ? 'a' : 'c');
  Word out(twisted);
  for (Letter l : w) out.push_back(l.symbol == flipped ? l.inverse() : l);
  return out;
}

Word commutator(const Word& x, const Word& y) {
  return x + y + invert_word(x) + invert_word(y);
}

std::vector<Word> twisted_presentation_relators() {
  const MarkedAlphabet& t = MarkedAlphabet::twisted();
  return {
      commutator(t.parse("a"), t.parse("c")),
      commutator(t.parse("a"), t.parse("tb")),
      commutator(t.parse("b"), t.parse("c")),
      commutator(t.parse("b"), t.parse("t")),
  };
}

std::vector<bool> check_relators(const MarkedAlphabet& alphabet, const std::vector<Word>& relators) {
  std::vector<bool> out;
  out.reserve(relators.size());
  for (const Word& r : relators) out.push_back(eval(r, alphabet).is_identity());
  return out;
}

}  // namespace scl
