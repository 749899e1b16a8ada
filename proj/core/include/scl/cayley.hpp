#pragma once

// Exact word-metric computations in Cay(G, A).
//
// DistanceOracle answers identity-to-element queries by bidirectional
// breadth-first search. The forward ball around the identity is persistent and
// grows lazily; each query grows a fresh backward ball from its target until
// the two meet. Pair queries reduce to identity queries by left-invariance,
// d(g, h) = d(1, g^-1 h), so one forward ball serves every pair.
//
// Distances are exact. When a query would need either ball to pass
// radius_cap, the oracle throws RadiusExhausted instead of guessing.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "scl/group.hpp"
#include "scl/words.hpp"

namespace scl {

namespace detail {

// An element of G packed as two factor words, 2 bits per letter
// (a, A, b, B or c, C, d, D) with the length in the top 6 bits.
struct PackedElement {
  std::uint64_t ab = 0;
  std::uint64_t cd = 0;

  friend bool operator==(const PackedElement&, const PackedElement&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const PackedElement& e) {
    return H::combine(std::move(h), e.ab, e.cd);
  }
};

inline constexpr int kMaxPackedFactorLetters = 29;

// Right multiplication by a generator or its inverse, as factor letter codes.
struct Move {
  std::vector<std::uint8_t> ab;
  std::vector<std::uint8_t> cd;
  Letter letter;
};

// Returns false (and leaves `e` unspecified) if a factor would overflow.
bool apply_move(PackedElement& e, const Move& m);

PackedElement pack(const NormalForm& g);
NormalForm unpack(const PackedElement& e);

}  // namespace detail

struct Violation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t expected = 0;
  std::size_t actual = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CycleReport {
  Word word;
  bool is_isometric = false;
  std::optional<Violation> violation;
};

struct SphereRow {
  std::size_t radius = 0;
  std::size_t sphere = 0;
  std::size_t ball = 0;

  friend bool operator==(const SphereRow&, const SphereRow&) = default;
};

class DistanceOracle {
 public:
  static constexpr int kDefaultRadiusCap = 8;
  static constexpr int kMaxRadiusCap = 64;

  explicit DistanceOracle(MarkedAlphabet alphabet, int radius_cap = kDefaultRadiusCap);

  DistanceOracle(const DistanceOracle&) = delete;
  DistanceOracle& operator=(const DistanceOracle&) = delete;

  const MarkedAlphabet& alphabet() const { return alphabet_; }
  int radius_cap() const { return radius_cap_; }
  int forward_radius() const;
  std::size_t forward_ball_size() const;

  std::size_t distance(const NormalForm& g, const NormalForm& h);
  std::size_t distance_from_identity(const NormalForm& g);

  // A word of minimal length evaluating to g. Backtracking prefers the
  // smallest generator index, positive before negative.
  Word geodesic_witness(const NormalForm& g);

  bool is_geodesic(const Word& w);

  // Exact sphere and ball sizes for r = 0..radius. radius <= radius_cap.
  std::vector<SphereRow> ball_profile(int radius);

  // Packed interface used by the cycle checks. Returns the distance from the
  // identity if it is at most `limit`, nullopt if it is larger.
  std::optional<std::size_t> distance_at_most(const detail::PackedElement& target, std::size_t limit);
  const std::vector<detail::Move>& moves() const { return moves_; }
  detail::PackedElement pack_word(const Word& w) const;

 private:
  struct Meet {
    std::optional<std::size_t> distance;
    detail::PackedElement point;
  };

  Meet search(const detail::PackedElement& target, std::size_t limit);
  void grow_forward();
  void grow_backward();
  std::size_t move_index(Letter l) const { return 2u * l.symbol + (l.sign < 0 ? 1u : 0u); }

  MarkedAlphabet alphabet_;
  int radius_cap_;
  std::vector<detail::Move> moves_;  // index 2*symbol (+1 for the inverse)

  std::mutex mutex_;
  absl::flat_hash_map<detail::PackedElement, std::uint8_t> forward_;
  std::vector<std::vector<detail::PackedElement>> forward_levels_;

  // Scratch for the query in flight.
  absl::flat_hash_map<detail::PackedElement, std::uint8_t> backward_;
  std::vector<std::vector<detail::PackedElement>> backward_levels_;
  std::size_t best_ = 0;
  detail::PackedElement best_point_;
};

// The cycle read by a null word w is isometric iff for all prefix vertices
// g_i, g_j (0 <= i < j < |w|) d(g_i, g_j) = min(j - i, |w| - (j - i)).
// The first violating pair in (i, j) order is reported.
CycleReport is_isometric_cycle(DistanceOracle& oracle, const Word& w);

// Lexicographically least word among all rotations of w and of its inverse,
// ordering letters by symbol index with positive before negative.
Word canonical_cycle(const Word& w);

// Canonical representatives of every isometric cycle through the identity of
// length <= max_length, ordered by length then lexicographically.
std::vector<Word> enumerate_isometric_cycles(DistanceOracle& oracle, std::size_t max_length,
                                             std::size_t enumeration_cap = 16);

}  // namespace scl
