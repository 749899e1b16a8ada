#include "scl/oracles.hpp"

#include <algorithm>
#include <set>

#include "scl/cayley.hpp"
#include "scl/error.hpp"

namespace scl::oracle {

std::size_t ReferenceBall::lookup(const NormalForm& g) const {
  auto it = distance.find(to_string(g));
  return it == distance.end() ? radius + 1 : it->second;
}

ReferenceBall reference_ball(const MarkedAlphabet& alphabet, std::size_t radius) {
  std::vector<NormalForm> steps;
  for (const NormalForm& g : alphabet.images()) {
    steps.push_back(g);
    steps.push_back(inverse(g));
  }
  ReferenceBall ball;
  ball.radius = radius;
  ball.spheres.push_back({NormalForm()});
  ball.distance.emplace(to_string(NormalForm()), 0);
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<NormalForm> next;
    for (const NormalForm& g : ball.spheres.back()) {
      for (const NormalForm& s : steps) {
        NormalForm h = multiply(g, s);
        if (ball.distance.emplace(to_string(h), r).second) next.push_back(std::move(h));
      }
    }
    ball.spheres.push_back(std::move(next));
  }
  return ball;
}

Word fixed_point_reduce(const Word& w) {
  std::vector<Letter> letters(w.begin(), w.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i].cancels(letters[i + 1])) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                      letters.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
    }
  }
  return Word(w.alphabet(), std::move(letters));
}

std::size_t best_cyclic_split(const Word& u) {
  std::size_t best = 0;
  for (std::size_t r = 0; r < std::max<std::size_t>(u.size(), 1); ++r) {
    const Word rotated = cyclic_conjugate(u, r);
    for (std::size_t s = 0; s <= u.size(); ++s) {
      const std::size_t shorter = std::min(s, u.size() - s);
      if (shorter <= best) continue;
      if (fixed_point_reduce(rotated.subword(0, s)).empty() &&
          fixed_point_reduce(rotated.subword(s, u.size() - s)).empty()) {
        best = shorter;
      }
    }
  }
  return best;
}

namespace {

bool is_isometric_by_ball(const Word& w, const MarkedAlphabet& alphabet, const ReferenceBall& ball) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t expected = std::min(j - i, n - (j - i));
      if (ball.lookup(eval(w.subword(i, j - i), alphabet)) != expected) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Word> brute_force_isometric_cycles(const MarkedAlphabet& alphabet, std::size_t max_length,
                                               const ReferenceBall& ball) {
  if (2 * ball.radius < max_length) {
    throw Error(ErrorCode::kRadiusExhausted, "reference ball too small for the requested cycle length");
  }
  const std::size_t letters = 2 * alphabet.size();
  std::set<std::vector<int>> seen;
  std::vector<Word> out;
  for (std::size_t length = 3; length <= max_length; ++length) {
    std::vector<std::size_t> digits(length, 0);
    while (true) {
      std::vector<Letter> ls;
      for (std::size_t d : digits) {
        ls.push_back(Letter{static_cast<std::uint8_t>(d / 2), static_cast<std::int8_t>(d % 2 ? -1 : 1)});
      }
      Word w(alphabet.symbols(), std::move(ls));
      if (eval(w, alphabet).is_identity() && is_isometric_by_ball(w, alphabet, ball)) {
        Word canon = canonical_cycle(w);
        std::vector<int> key;
        for (Letter l : canon) key.push_back(l.order_key());
        if (seen.insert(key).second) out.push_back(std::move(canon));
      }
      std::size_t pos = 0;
      while (pos < length && ++digits[pos] == letters) digits[pos++] = 0;
      if (pos == length) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  return out;
}

}  // namespace scl::oracle
