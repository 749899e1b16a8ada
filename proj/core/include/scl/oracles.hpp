#pragma once

// Slow reference implementations used to cross-check the fast paths.
// Nothing here shares code with cayley.cpp or shortcut_free.cpp beyond the
// group arithmetic in group.hpp.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "scl/group.hpp"
#include "scl/words.hpp"

namespace scl::oracle {

// Plain breadth-first ball around the identity, built with multiply().
struct ReferenceBall {
  std::size_t radius = 0;
  std::vector<std::vector<NormalForm>> spheres;
  std::unordered_map<std::string, std::size_t> distance;  // keyed by to_string(g)

  // nullopt-like: returns radius + 1 when g lies outside the ball.
  std::size_t lookup(const NormalForm& g) const;
};

ReferenceBall reference_ball(const MarkedAlphabet& alphabet, std::size_t radius);

// Deletes adjacent inverse pairs, one at a time, until none remain.
Word fixed_point_reduce(const Word& w);

// Largest min(|u1|, |u2|) over every rotation and split point of a null word
// with both parts null in the free group.
std::size_t best_cyclic_split(const Word& u);

// Every word of length 3..max_length over the alphabet, kept when it is null
// and all prefix-vertex distances (from `ball`) equal the shorter arc.
// Returns canonical forms, ordered like enumerate_isometric_cycles.
std::vector<Word> brute_force_isometric_cycles(const MarkedAlphabet& alphabet, std::size_t max_length,
                                               const ReferenceBall& ball);

}  // namespace scl::oracle
