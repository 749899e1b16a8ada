#pragma once

// Shortcuts for loops in a free group.
//
// A word u that is trivial in a free group is read around a planar tree: the
// cancellation tree, whose edges are the matched letter pairs of u. Removing a
// centroid of that tree leaves pieces of at most half the vertices, and the
// excursions of the boundary walk into those pieces cut a cyclic conjugate of
// u into null subwords. Coalescing them into two gives u = u1 u2 (cyclically)
// with both parts null and min(|u1|, |u2|) >= floor(|u| / 3).

#include <cstddef>
#include <string>
#include <vector>

#include "scl/words.hpp"

namespace scl {

class CancellationTree {
 public:
  struct Edge {
    std::size_t parent = 0;
    std::size_t child = 0;
    Letter label;  // letter read when walking parent -> child
  };

  // One step of the boundary walk: the letter at word position i moves
  // from vertex `from` to vertex `to` along `edge`.
  struct Step {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t edge = 0;
  };

  // Throws NotNull if u is not trivial in the free group on its symbols.
  explicit CancellationTree(const Word& u);

  std::size_t vertex_count() const { return parents_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t base() const { return 0; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Step>& walk() const { return walk_; }
  const Alphabet& alphabet() const { return alphabet_; }

  // kNoParent for the base.
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);
  std::size_t parent(std::size_t v) const { return parents_[v]; }
  // Vertices in the subtree rooted at v (the base is the root).
  std::size_t subtree_size(std::size_t v) const { return subtree_sizes_[v]; }
  std::vector<std::size_t> neighbors(std::size_t v) const;

  // The letters read along the boundary walk from the base.
  Word read_walk() const;

  // Sizes of the components left after deleting vertex v.
  std::vector<std::size_t> component_sizes(std::size_t v) const;

  // Graphviz rendering, optionally highlighting one vertex.
  std::string to_dot(std::size_t highlight = kNoParent) const;

 private:
  Alphabet alphabet_;
  std::vector<std::size_t> parents_;
  std::vector<std::size_t> subtree_sizes_;
  std::vector<Edge> edges_;
  std::vector<Step> walk_;
};

CancellationTree cancellation_tree(const Word& u);

// A vertex whose deletion leaves components of at most N/2 vertices; ties
// broken by the smaller largest component, then the smaller index.
std::size_t centroid(const CancellationTree& tree);

struct FreeSplit {
  std::size_t rotation = 0;  // cyclic_conjugate(u, rotation) == u1 ++ u2
  Word u1;
  Word u2;
  std::vector<std::size_t> piece_lengths;  // excursion lengths at the centroid, before coalescing
};

FreeSplit split_null_word(const Word& u);

}  // namespace scl
