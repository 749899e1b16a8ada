#include <algorithm>
#include <limits>
#include <set>

#include "scl/cayley.hpp"
#include "scl/error.hpp"

namespace scl {

using detail::PackedElement;

namespace {

bool lex_less(const Word& lhs, const Word& rhs) {
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

struct CanonicalLess {
  bool operator()(const Word& lhs, const Word& rhs) const {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lex_less(lhs, rhs);
  }
};

// Depth-first search for isometric cycles of exactly `length` letters whose
// first letter is the least letter (over the word and its inverse).
class CycleSearch {
 public:
  CycleSearch(DistanceOracle& oracle, std::size_t length) : oracle_(oracle), length_(length) {
    keys_.resize(length + 1);
    for (std::size_t m = 0; m <= length; ++m) keys_[m].resize(m);
  }

  void run(std::set<Word, CanonicalLess>& found) {
    const auto& moves = oracle_.moves();
    for (std::size_t first = 0; first < moves.size(); ++first) {
      first_key_ = moves[first].letter.order_key();
      // The inverse of the first letter must not be smaller than it.
      if (moves[first].letter.inverse().order_key() < first_key_) continue;
      word_.clear();
      extend(first, found);
    }
  }

 private:
  void extend(std::size_t move, std::set<Word, CanonicalLess>& found) {
    const auto& moves = oracle_.moves();
    const std::size_t m = word_.size() + 1;
    std::vector<PackedElement>& prev = keys_[m - 1];
    std::vector<PackedElement>& cur = keys_[m];
    for (std::size_t i = 0; i + 1 < m; ++i) {
      cur[i] = prev[i];
      if (!detail::apply_move(cur[i], moves[move])) {
        throw Error(ErrorCode::kRadiusExhausted, "cycle search element exceeds the packed key size");
      }
    }
    cur[m - 1] = PackedElement{};
    if (!detail::apply_move(cur[m - 1], moves[move])) {
      throw Error(ErrorCode::kRadiusExhausted, "generator image exceeds the packed key size");
    }

    // cur[i] is the element of the subword [i, m); its distance must equal
    // the shorter way around the cycle.
    for (std::size_t i = m; i-- > 0;) {
      const std::size_t span = m - i;
      const std::size_t expected = std::min(span, length_ - span);
      auto d = oracle_.distance_at_most(cur[i], expected);
      if (!d || *d != expected) return;
    }

    word_.push_back(moves[move].letter);
    if (m == length_) {
      found.insert(canonical_cycle(Word(oracle_.alphabet().symbols(), word_)));
    } else {
      for (std::size_t next = 0; next < moves.size(); ++next) {
        const Letter l = moves[next].letter;
        if (l.order_key() < first_key_ || l.inverse().order_key() < first_key_) continue;
        extend(next, found);
      }
    }
    word_.pop_back();
  }

  DistanceOracle& oracle_;
  std::size_t length_;
  int first_key_ = 0;
  std::vector<Letter> word_;
  std::vector<std::vector<PackedElement>> keys_;
};

}  // namespace

CycleReport is_isometric_cycle(DistanceOracle& oracle, const Word& w) {
  if (w.empty()) throw Error(ErrorCode::kInvalidSpec, "cycle word must be non-empty");
  if (!eval(w, oracle.alphabet()).is_identity()) {
    throw Error(ErrorCode::kNotNull, "'" + format_word(w) + "' does not represent the identity");
  }
  const auto& moves = oracle.moves();
  const std::size_t n = w.size();
  CycleReport report{w, true, std::nullopt};
  for (std::size_t i = 0; i < n; ++i) {
    PackedElement e;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Letter l = w[j - 1];
      if (!detail::apply_move(e, moves[2u * l.symbol + (l.sign < 0 ? 1u : 0u)])) {
        throw Error(ErrorCode::kRadiusExhausted, "cycle element exceeds the packed key size");
      }
      const std::size_t expected = std::min(j - i, n - (j - i));
      // The two arcs of the loop bound the distance by `expected`.
      auto d = oracle.distance_at_most(e, expected);
      const std::size_t actual = d ? *d : *oracle.distance_at_most(e, std::numeric_limits<std::size_t>::max());
      if (actual != expected) {
        report.is_isometric = false;
        report.violation = Violation{i, j, expected, actual};
        return report;
      }
    }
  }
  return report;
}

Word canonical_cycle(const Word& w) {
  Word best = w;
  const Word inverse_word = invert_word(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const Word* source : {&w, &inverse_word}) {
      Word candidate = cyclic_conjugate(*source, i);
      if (lex_less(candidate, best)) best = std::move(candidate);
    }
  }
  return best;
}

std::vector<Word> enumerate_isometric_cycles(DistanceOracle& oracle, std::size_t max_length,
                                             std::size_t enumeration_cap) {
  if (max_length > enumeration_cap) {
    throw Error(ErrorCode::kCapExceeded, "max length " + std::to_string(max_length) + " exceeds enumeration cap " +
                                             std::to_string(enumeration_cap));
  }
  std::set<Word, CanonicalLess> found;
  // Length <= 2 loops are backtracks (or doubled edges), not embedded cycles.
  for (std::size_t length = 3; length <= max_length; ++length) {
    if (oracle.alphabet().has_parity() && length % 2 != 0) continue;
    CycleSearch(oracle, length).run(found);
  }
  return {found.begin(), found.end()};
}

}  // namespace scl
