#pragma once

// The group G = F(a,b) x F(c,d).
//
// Elements are kept in normal form: one freely reduced word per free factor.
// Because the factors commute, two words over any marked alphabet represent
// the same element iff their normal forms agree letter for letter.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "scl/words.hpp"

namespace scl {

class NormalForm {
 public:
  // The identity.
  NormalForm();
  // Reduces both parts. `ab` must be over ab_symbols(), `cd` over cd_symbols().
  NormalForm(const Word& ab, const Word& cd);

  const Word& ab_part() const { return ab_; }
  const Word& cd_part() const { return cd_; }
  bool is_identity() const { return ab_.empty() && cd_.empty(); }
  std::size_t reduced_length() const { return ab_.size() + cd_.size(); }

  // ab_part ++ cd_part over std_symbols().
  Word to_std_word() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  Word ab_;
  Word cd_;
};

// Elements always print in std letters; the identity prints as "1".
std::string to_string(const NormalForm& g);

NormalForm multiply(const NormalForm& g, const NormalForm& h);
NormalForm inverse(const NormalForm& g);

// The element of a word over std_symbols().
NormalForm std_element(const Word& w);

// Finite generating set: symbols mapped to nontrivial elements of G.
class MarkedAlphabet {
 public:
  MarkedAlphabet(std::string name, Alphabet symbols, std::vector<NormalForm> images);

  // {a, b, c, d}.
  static const MarkedAlphabet& standard();
  // {a, b, c, t} with t = d b^-1.
  static const MarkedAlphabet& twisted();
  // "std", "twisted", or a custom list "sym=word_over_std,sym=word_over_std,...".
  static MarkedAlphabet from_spec(std::string_view spec);
  static MarkedAlphabet from_generators(std::string_view gen_list);

  const std::string& name() const { return name_; }
  const Alphabet& symbols() const { return symbols_; }
  std::size_t size() const { return images_.size(); }
  const NormalForm& image(std::size_t symbol) const { return images_.at(symbol); }
  const std::vector<NormalForm>& images() const { return images_; }

  Word parse(std::string_view text) const { return parse_word(text, symbols_); }

  // True iff some homomorphism G -> Z/2 sends every generator to 1, i.e. every
  // word representing the identity has even length.
  bool has_parity() const { return has_parity_; }

 private:
  std::string name_;
  Alphabet symbols_;
  std::vector<NormalForm> images_;
  bool has_parity_ = false;
};

// Throws UnknownGenerator if w is not over the alphabet's symbols.
NormalForm eval(const Word& w, const MarkedAlphabet& alphabet);

enum class Automorphism {
  kPhi,  // a -> a^-1; fixes b, c, t
  kPsi,  // c -> c^-1; fixes a, b, t
};

// Letter-wise image of a word over the twisted alphabet.
Word apply_automorphism(Automorphism which, const Word& w);

// [x, y] = x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);

// The four defining relators [a,c], [a,tb], [b,c], [b,t] over twisted.
std::vector<Word> twisted_presentation_relators();

std::vector<bool> check_relators(const MarkedAlphabet& alphabet, const std::vector<Word>& relators);

}  // namespace scl
