#include "scl/shortcut_free.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "scl/error.hpp"

namespace scl {

CancellationTree::CancellationTree(const Word& u) : alphabet_(u.alphabet()) {
  if (u.size() % 2 != 0) {
    throw Error(ErrorCode::kNotNull, "odd-length word '" + format_word(u) + "' is not null");
  }
  parents_.reserve(u.size() / 2 + 1);
  parents_.push_back(kNoParent);
  walk_.reserve(u.size());

  // Last-in-first-out matching: a letter either cancels the edge we arrived
  // by, or opens a new child edge.
  std::size_t current = 0;
  std::vector<std::size_t> arrival_edge;  // stack of edges from the base to `current`
  for (Letter l : u) {
    if (!arrival_edge.empty() && edges_[arrival_edge.back()].label.cancels(l)) {
      const std::size_t e = arrival_edge.back();
      arrival_edge.pop_back();
      walk_.push_back(Step{current, edges_[e].parent, e});
      current = edges_[e].parent;
    } else {
      const std::size_t child = parents_.size();
      parents_.push_back(current);
      edges_.push_back(Edge{current, child, l});
      arrival_edge.push_back(edges_.size() - 1);
      walk_.push_back(Step{current, child, edges_.size() - 1});
      current = child;
    }
  }
  if (current != 0) {
    throw Error(ErrorCode::kNotNull, "'" + format_word(u) + "' does not reduce to the empty word");
  }

  // Children are created after their parents, so a reverse sweep sums sizes.
  subtree_sizes_.assign(parents_.size(), 1);
  for (std::size_t v = parents_.size(); v-- > 1;) subtree_sizes_[parents_[v]] += subtree_sizes_[v];
}

std::vector<std::size_t> CancellationTree::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  if (parents_[v] != kNoParent) out.push_back(parents_[v]);
  for (const Edge& e : edges_) {
    if (e.parent == v) out.push_back(e.child);
  }
  return out;
}

Word CancellationTree::read_walk() const {
  Word out(alphabet_);
  for (const Step& s : walk_) {
    const Edge& e = edges_[s.edge];
    out.push_back(s.from == e.parent ? e.label : e.label.inverse());
  }
  return out;
}

std::vector<std::size_t> CancellationTree::component_sizes(std::size_t v) const {
  std::vector<std::size_t> sizes;
  for (const Edge& e : edges_) {
    if (e.parent == v) sizes.push_back(subtree_sizes_[e.child]);
  }
  if (parents_[v] != kNoParent) sizes.push_back(vertex_count() - subtree_sizes_[v]);
  return sizes;
}

std::string CancellationTree::to_dot(std::size_t highlight) const {
  std::ostringstream os;
  os << "digraph cancellation_tree {\n";
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << v << "\"";
    if (v == base()) os << ", shape=doublecircle";
    if (v == highlight) os << ", style=filled, fillcolor=gold";
    os << "];\n";
  }
  for (const Edge& e : edges_) {
    // Edges point in the direction of the positive generator.
    const char symbol = alphabet_.symbol_char(e.label.symbol);
    const bool forward = e.label.sign > 0;
    os << "  v" << (forward ? e.parent : e.child) << " -> v" << (forward ? e.child : e.parent) << " [label=\""
       << symbol << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

CancellationTree cancellation_tree(const Word& u) { return CancellationTree(u); }

std::size_t centroid(const CancellationTree& tree) {
  const std::size_t n = tree.vertex_count();
  // Largest component left by deleting each vertex, in one sweep.
  std::vector<std::size_t> largest(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (tree.parent(v) != CancellationTree::kNoParent) largest[v] = n - tree.subtree_size(v);
  }
  for (const auto& e : tree.edges()) largest[e.parent] = std::max(largest[e.parent], tree.subtree_size(e.child));

  std::size_t best = 0;
  std::size_t best_largest = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (largest[v] < best_largest) {
      best = v;
      best_largest = largest[v];
    }
  }
  if (2 * best_largest > n) {
    throw Error(ErrorCode::kInvalidSpec, "no centroid found; tree is malformed");
  }
  return best;
}

FreeSplit split_null_word(const Word& u) {
  const CancellationTree tree(u);
  const std::size_t n = u.size();
  if (n == 0) return FreeSplit{0, u, Word(u.alphabet()), {}};

  const std::size_t star = centroid(tree);
  const auto& walk = tree.walk();
  std::size_t start = 0;
  while (walk[start].from != star) ++start;

  // Excursions from the centroid, as (offset in the rotated word, length).
  struct Piece {
    std::size_t offset;
    std::size_t length;
  };
  std::vector<Piece> pieces;
  std::size_t piece_begin = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (walk[(start + k) % n].to == star) {
      pieces.push_back(Piece{piece_begin, k + 1 - piece_begin});
      piece_begin = k + 1;
    }
  }

  FreeSplit result;
  for (const Piece& p : pieces) result.piece_lengths.push_back(p.length);

  if (pieces.size() == 1) {
    if (n >= 4) throw Error(ErrorCode::kInvalidSpec, "centroid of a tree with >= 3 vertices has degree >= 2");
    result.rotation = start;
    result.u1 = cyclic_conjugate(u, start);
    result.u2 = Word(u.alphabet());
    return result;
  }

  // Coalesce down to three pieces: merge w1 w2 while that stays within half
  // the word, otherwise absorb the tail into w3.
  std::size_t first = 0;
  while (pieces.size() - first > 3) {
    if (2 * (pieces[first].length + pieces[first + 1].length) <= n) {
      pieces[first + 1] = Piece{pieces[first].offset, pieces[first].length + pieces[first + 1].length};
      ++first;
    } else {
      std::size_t tail = 0;
      for (std::size_t i = first + 2; i < pieces.size(); ++i) tail += pieces[i].length;
      pieces[first + 2].length = tail;
      pieces.resize(first + 3);
    }
  }
  pieces.erase(pieces.begin(), pieces.begin() + static_cast<std::ptrdiff_t>(first));

  // u1 is the first longest piece; u2 is the rest in cyclic order.
  std::size_t pick = 0;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].length > pieces[pick].length) pick = i;
  }
  result.rotation = (start + pieces[pick].offset) % n;
  const Word rotated = cyclic_conjugate(u, result.rotation);
  result.u1 = rotated.subword(0, pieces[pick].length);
  result.u2 = rotated.subword(pieces[pick].length, n - pieces[pick].length);
  return result;
}

}  // namespace scl
