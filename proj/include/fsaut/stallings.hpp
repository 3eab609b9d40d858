#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsaut/word.hpp"

namespace fsaut {

/// Folded core graph of a finitely generated subgroup of F_infinity.
///
/// Vertices are 0..vertex_count()-1 with the basepoint at 0, numbered in
/// breadth-first order from the basepoint (outgoing labels ascending, then
/// incoming labels ascending). Since a folded graph has at most one edge per
/// (vertex, direction, label), this numbering is canonical: two graphs are
/// label-isomorphic as based graphs iff they compare equal.
class StallingsGraph {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    Index label;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  StallingsGraph();

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t basepoint() const noexcept { return 0; }
  /// Sorted by (from, label).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Endpoint of the unique edge leaving v along l, if any.
  std::optional<std::size_t> step(std::size_t v, Letter l) const;

  friend bool operator==(const StallingsGraph& a, const StallingsGraph& b) {
    return a.edges_ == b.edges_ && a.out_.size() == b.out_.size();
  }

 private:
  friend StallingsGraph build_graph(const WordTuple&, std::optional<std::uint64_t>);
  StallingsGraph(std::size_t vertices, std::vector<Edge> edges);

  std::vector<Edge> edges_;
  std::vector<std::map<Index, std::size_t>> out_;
  std::vector<std::map<Index, std::size_t>> in_;
};

/// Folds the wedge of loops spelling the entries of t and trims to the core.
/// With a shuffle seed, the initial edges are inserted in a random order; the
/// result is the same graph either way.
StallingsGraph build_graph(const WordTuple& t, std::optional<std::uint64_t> shuffle_seed = {});

/// True iff w reads a closed path at the basepoint.
bool contains(const StallingsGraph& g, const Word& w);

/// Rank of the subgroup, E - V + 1.
std::size_t rank(const StallingsGraph& g);

/// Graphviz digraph; the basepoint is drawn as a double circle.
std::string to_dot(const StallingsGraph& g);

}  // namespace fsaut
