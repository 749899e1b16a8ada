#include "scl/cayley.hpp"

#include <algorithm>
#include <limits>

#include "scl/error.hpp"

namespace scl {

namespace detail {

namespace {

constexpr int kLengthShift = 58;
constexpr std::uint64_t kBodyMask = (std::uint64_t{1} << kLengthShift) - 1;

inline bool apply_factor(std::uint64_t& factor, const std::vector<std::uint8_t>& letters) {
  std::uint64_t len = factor >> kLengthShift;
  std::uint64_t body = factor & kBodyMask;
  for (std::uint8_t code : letters) {
    if (len > 0 && ((body >> (2 * (len - 1))) & 3u) == (code ^ 1u)) {
      --len;
      body &= ~(std::uint64_t{3} << (2 * len));
    } else {
      if (len == kMaxPackedFactorLetters) return false;
      body |= std::uint64_t{code} << (2 * len);
      ++len;
    }
  }
  factor = (len << kLengthShift) | body;
  return true;
}

std::uint8_t letter_code(Letter l) {
  return static_cast<std::uint8_t>((l.symbol << 1) | (l.sign < 0 ? 1 : 0));
}

std::uint64_t pack_factor(const Word& w) {
  if (w.size() > kMaxPackedFactorLetters) {
    throw Error(ErrorCode::kRadiusExhausted, "factor word longer than the packed state key allows");
  }
  std::uint64_t body = 0;
  for (std::size_t i = 0; i < w.size(); ++i) body |= std::uint64_t{letter_code(w[i])} << (2 * i);
  return (std::uint64_t{w.size()} << kLengthShift) | body;
}

Word unpack_factor(std::uint64_t factor, const Alphabet& alphabet) {
  std::uint64_t len = factor >> kLengthShift;
  std::vector<Letter> letters;
  letters.reserve(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    auto code = static_cast<std::uint8_t>((factor >> (2 * i)) & 3u);
    letters.push_back(Letter{static_cast<std::uint8_t>(code >> 1), static_cast<std::int8_t>(code & 1u ? -1 : 1)});
  }
  return Word(alphabet, std::move(letters));
}

std::vector<std::uint8_t> codes(const Word& w, bool inverted) {
  std::vector<std::uint8_t> out;
  Word source = inverted ? invert_word(w) : w;
  for (Letter l : source) out.push_back(letter_code(l));
  return out;
}

}  // namespace

bool apply_move(PackedElement& e, const Move& m) {
  return apply_factor(e.ab, m.ab) && apply_factor(e.cd, m.cd);
}

PackedElement pack(const NormalForm& g) {
  return PackedElement{pack_factor(g.ab_part()), pack_factor(g.cd_part())};
}

NormalForm unpack(const PackedElement& e) {
  return NormalForm(unpack_factor(e.ab, ab_symbols()), unpack_factor(e.cd, cd_symbols()));
}

}  // namespace detail

using detail::PackedElement;

DistanceOracle::DistanceOracle(MarkedAlphabet alphabet, int radius_cap)
    : alphabet_(std::move(alphabet)), radius_cap_(radius_cap) {
  if (radius_cap_ < 0 || radius_cap_ > kMaxRadiusCap) {
    throw Error(ErrorCode::kCapExceeded, "radius cap must lie in [0, " + std::to_string(kMaxRadiusCap) + "]");
  }
  for (std::size_t s = 0; s < alphabet_.size(); ++s) {
    const NormalForm& g = alphabet_.image(s);
    for (bool inverted : {false, true}) {
      moves_.push_back(detail::Move{detail::codes(g.ab_part(), inverted), detail::codes(g.cd_part(), inverted),
                                    Letter{static_cast<std::uint8_t>(s),
                                           static_cast<std::int8_t>(inverted ? -1 : 1)}});
    }
  }
  forward_.emplace(PackedElement{}, 0);
  forward_levels_.push_back({PackedElement{}});
}

int DistanceOracle::forward_radius() const {
  return static_cast<int>(forward_levels_.size()) - 1;
}

std::size_t DistanceOracle::forward_ball_size() const { return forward_.size(); }

void DistanceOracle::grow_forward() {
  const auto radius = static_cast<std::uint8_t>(forward_levels_.size());
  std::vector<PackedElement> next;
  next.reserve(forward_levels_.back().size() * (moves_.size() - 1));
  for (const PackedElement& x : forward_levels_.back()) {
    for (const detail::Move& m : moves_) {
      PackedElement y = x;
      if (!detail::apply_move(y, m)) {
        throw Error(ErrorCode::kRadiusExhausted, "forward ball element exceeds the packed key size");
      }
      if (forward_.try_emplace(y, radius).second) next.push_back(y);
    }
  }
  // Check the new sphere against the backward ball of the query in flight.
  if (!backward_.empty()) {
    for (const PackedElement& y : next) {
      auto it = backward_.find(y);
      if (it != backward_.end() && radius + std::size_t{it->second} < best_) {
        best_ = radius + std::size_t{it->second};
        best_point_ = y;
      }
    }
  }
  forward_levels_.push_back(std::move(next));
}

void DistanceOracle::grow_backward() {
  const auto radius = static_cast<std::uint8_t>(backward_levels_.size());
  std::vector<PackedElement> next;
  for (const PackedElement& x : backward_levels_.back()) {
    for (const detail::Move& m : moves_) {
      PackedElement y = x;
      if (!detail::apply_move(y, m)) {
        throw Error(ErrorCode::kRadiusExhausted, "backward ball element exceeds the packed key size");
      }
      if (!backward_.try_emplace(y, radius).second) continue;
      next.push_back(y);
      auto it = forward_.find(y);
      if (it != forward_.end() && radius + std::size_t{it->second} < best_) {
        best_ = radius + std::size_t{it->second};
        best_point_ = y;
      }
    }
  }
  backward_levels_.push_back(std::move(next));
}

// Invariant: with the forward ball complete to radius Rf and the backward ball
// complete to rb, the least f(x) + b(x) over common points equals the distance
// whenever the distance is at most Rf + rb, and exceeds Rf + rb otherwise.
DistanceOracle::Meet DistanceOracle::search(const PackedElement& target, std::size_t limit) {
  backward_.clear();
  backward_levels_.clear();
  if (auto it = forward_.find(target); it != forward_.end()) {
    std::size_t d = it->second;
    if (d <= limit) return Meet{d, target};
    return Meet{std::nullopt, target};
  }
  if (static_cast<std::size_t>(forward_radius()) >= limit) return Meet{std::nullopt, target};

  best_ = std::numeric_limits<std::size_t>::max();
  backward_.emplace(target, 0);
  backward_levels_.push_back({target});

  while (true) {
    const std::size_t rf = static_cast<std::size_t>(forward_radius());
    const std::size_t rb = backward_levels_.size() - 1;
    if (best_ <= rf + rb) {
      if (best_ <= limit) return Meet{best_, best_point_};
      return Meet{std::nullopt, best_point_};
    }
    if (rf + rb >= limit) return Meet{std::nullopt, target};

    const auto cap = static_cast<std::size_t>(radius_cap_);
    if (rb < rf && rb < cap) {
      grow_backward();
    } else if (rf < cap) {
      grow_forward();
    } else if (rb < cap) {
      grow_backward();
    } else {
      throw Error(ErrorCode::kRadiusExhausted,
                  "distance exceeds 2 * radius_cap = " + std::to_string(2 * radius_cap_));
    }
  }
}

std::optional<std::size_t> DistanceOracle::distance_at_most(const PackedElement& target, std::size_t limit) {
  std::lock_guard lock(mutex_);
  return search(target, limit).distance;
}

PackedElement DistanceOracle::pack_word(const Word& w) const {
  PackedElement e;
  for (Letter l : w) {
    if (l.symbol >= alphabet_.size()) throw Error(ErrorCode::kUnknownGenerator, "letter outside alphabet");
    if (!detail::apply_move(e, moves_[move_index(l)])) {
      throw Error(ErrorCode::kRadiusExhausted, "element exceeds the packed key size");
    }
  }
  return e;
}

std::size_t DistanceOracle::distance_from_identity(const NormalForm& g) {
  std::lock_guard lock(mutex_);
  return *search(detail::pack(g), std::numeric_limits<std::size_t>::max()).distance;
}

std::size_t DistanceOracle::distance(const NormalForm& g, const NormalForm& h) {
  return distance_from_identity(multiply(inverse(g), h));
}

Word DistanceOracle::geodesic_witness(const NormalForm& g) {
  std::lock_guard lock(mutex_);
  const PackedElement target = detail::pack(g);
  const Meet meet = search(target, std::numeric_limits<std::size_t>::max());

  // Identity -> meet point, backtracking through the forward ball.
  std::vector<Letter> head;
  PackedElement x = meet.point;
  for (std::size_t r = forward_.at(x); r > 0; --r) {
    bool stepped = false;
    for (std::size_t i = 0; i < moves_.size() && !stepped; ++i) {
      PackedElement y = x;
      // moves_[i ^ 1] is the inverse of moves_[i].
      if (!detail::apply_move(y, moves_[i ^ 1u])) continue;
      auto it = forward_.find(y);
      if (it != forward_.end() && it->second + 1u == r) {
        head.push_back(moves_[i].letter);
        x = y;
        stepped = true;
      }
    }
  }
  std::reverse(head.begin(), head.end());

  // Meet point -> target, descending through the backward ball.
  if (!(meet.point == target)) {
    x = meet.point;
    for (std::size_t r = backward_.at(x); r > 0; --r) {
      bool stepped = false;
      for (std::size_t i = 0; i < moves_.size() && !stepped; ++i) {
        PackedElement y = x;
        if (!detail::apply_move(y, moves_[i])) continue;
        auto it = backward_.find(y);
        if (it != backward_.end() && it->second + 1u == r) {
          head.push_back(moves_[i].letter);
          x = y;
          stepped = true;
        }
      }
    }
  }
  return Word(alphabet_.symbols(), std::move(head));
}

bool DistanceOracle::is_geodesic(const Word& w) {
  std::lock_guard lock(mutex_);
  // A word is geodesic iff its element is not reachable in fewer letters.
  const PackedElement target = pack_word(w);
  if (w.empty()) return true;
  return !search(target, w.size() - 1).distance.has_value();
}

std::vector<SphereRow> DistanceOracle::ball_profile(int radius) {
  if (radius < 0 || radius > radius_cap_) {
    throw Error(ErrorCode::kCapExceeded,
                "radius " + std::to_string(radius) + " exceeds radius_cap " + std::to_string(radius_cap_));
  }
  std::lock_guard lock(mutex_);
  backward_.clear();
  backward_levels_.clear();
  while (forward_radius() < radius) grow_forward();
  std::vector<SphereRow> rows;
  std::size_t ball = 0;
  for (int r = 0; r <= radius; ++r) {
    const std::size_t sphere = forward_levels_[static_cast<std::size_t>(r)].size();
    ball += sphere;
    rows.push_back(SphereRow{static_cast<std::size_t>(r), sphere, ball});
  }
  return rows;
}

}  // namespace scl
