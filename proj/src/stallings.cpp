#include "fsaut/stallings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <utility>

#include "fsaut/random.hpp"

namespace fsaut {

namespace {

class DisjointSets {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    size_.push_back(1);
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Returns (kept root, absorbed root).
  std::pair<std::size_t, std::size_t> unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return {a, b};
  }

  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

using Adjacency = std::map<Index, std::size_t>;

// Mutable graph under construction; adjacency targets may be stale and are
// always read through find().
class Folder {
 public:
  Folder() { add_vertex(); }

  std::size_t add_vertex() {
    out_.emplace_back();
    in_.emplace_back();
    return sets_.add();
  }

  void add_edge(std::size_t from, std::size_t to, Index label) {
    link(out_, from, label, to);
    link(in_, to, label, from);
    drain();
  }

  std::size_t find(std::size_t v) { return sets_.find(v); }
  const Adjacency& out(std::size_t root) const { return out_[root]; }
  std::size_t size() const { return sets_.size(); }

 private:
  void link(std::vector<Adjacency>& side, std::size_t v, Index label, std::size_t target) {
    v = find(v);
    auto [it, inserted] = side[v].try_emplace(label, target);
    if (!inserted && find(it->second) != find(target)) pending_.emplace_back(it->second, target);
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      if (find(a) == find(b)) continue;
      auto [kept, absorbed] = sets_.unite(a, b);
      for (auto* side : {&out_, &in_}) {
        Adjacency moved = std::move((*side)[absorbed]);
        (*side)[absorbed].clear();
        for (auto [label, target] : moved) link(*side, kept, label, target);
      }
    }
  }

  DisjointSets sets_;
  std::vector<Adjacency> out_;
  std::vector<Adjacency> in_;
  std::deque<std::pair<std::size_t, std::size_t>> pending_;
};

struct RawEdge {
  std::size_t from;
  std::size_t to;
  Index label;
};

}  // namespace

StallingsGraph::StallingsGraph() : out_(1), in_(1) {}

StallingsGraph::StallingsGraph(std::size_t vertices, std::vector<Edge> edges)
    : edges_(std::move(edges)), out_(vertices), in_(vertices) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.label) < std::tie(b.from, b.label);
  });
  for (const Edge& e : edges_) {
    out_[e.from][e.label] = e.to;
    in_[e.to][e.label] = e.from;
  }
}

std::optional<std::size_t> StallingsGraph::step(std::size_t v, Letter l) const {
  const auto& side = l.sign > 0 ? out_[v] : in_[v];
  auto it = side.find(l.index);
  if (it == side.end()) return std::nullopt;
  return it->second;
}

StallingsGraph build_graph(const WordTuple& t, std::optional<std::uint64_t> shuffle_seed) {
  // Wedge of subdivided loops at vertex 0.
  std::vector<RawEdge> raw;
  std::size_t vertices = 1;
  for (const Word& w : t) {
    std::size_t at = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const std::size_t next = k + 1 == w.size() ? 0 : vertices++;
      const Letter l = w[k];
      if (l.sign > 0) {
        raw.push_back({at, next, l.index});
      } else {
        raw.push_back({next, at, l.index});
      }
      at = next;
    }
  }
  if (shuffle_seed) {
    Rng rng(*shuffle_seed);
    for (std::size_t k = raw.size(); k > 1; --k) std::swap(raw[k - 1], raw[rng.below(k)]);
  }

  Folder folder;
  while (folder.size() < vertices) folder.add_vertex();
  for (const RawEdge& e : raw) folder.add_edge(e.from, e.to, e.label);

  // Collect the folded graph on class representatives.
  std::vector<RawEdge> folded;
  for (std::size_t v = 0; v < folder.size(); ++v) {
    if (folder.find(v) != v) continue;
    for (auto [label, target] : folder.out(v)) folded.push_back({v, folder.find(target), label});
  }

  // Trim hanging trees: repeatedly remove degree-1 vertices other than the basepoint.
  const std::size_t base = folder.find(0);
  std::vector<std::size_t> degree(folder.size(), 0);
  for (const RawEdge& e : folded) {
    ++degree[e.from];
    ++degree[e.to];
  }
  std::vector<bool> alive_edge(folded.size(), true);
  std::vector<std::vector<std::size_t>> incident(folder.size());
  for (std::size_t k = 0; k < folded.size(); ++k) {
    incident[folded[k].from].push_back(k);
    if (folded[k].to != folded[k].from) incident[folded[k].to].push_back(k);
  }
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < folder.size(); ++v) {
    if (v != base && folder.find(v) == v && degree[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const std::size_t v = leaves.back();
    leaves.pop_back();
    for (std::size_t k : incident[v]) {
      if (!alive_edge[k]) continue;
      alive_edge[k] = false;
      --degree[folded[k].from];
      --degree[folded[k].to];
      const std::size_t other = folded[k].from == v ? folded[k].to : folded[k].from;
      if (other != base && degree[other] == 1) leaves.push_back(other);
    }
  }

  // Canonical breadth-first renumbering from the basepoint.
  std::vector<std::vector<std::pair<Index, std::size_t>>> outs(folder.size()), ins(folder.size());
  for (std::size_t k = 0; k < folded.size(); ++k) {
    if (!alive_edge[k]) continue;
    outs[folded[k].from].emplace_back(folded[k].label, folded[k].to);
    ins[folded[k].to].emplace_back(folded[k].label, folded[k].from);
  }
  for (auto& v : outs) std::sort(v.begin(), v.end());
  for (auto& v : ins) std::sort(v.begin(), v.end());

  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> number(folder.size(), unseen);
  std::vector<std::size_t> order{base};
  number[base] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t v = order[head];
    for (const auto* side : {&outs[v], &ins[v]}) {
      for (auto [label, w] : *side) {
        if (number[w] == unseen) {
          number[w] = order.size();
          order.push_back(w);
        }
      }
    }
  }

  std::vector<StallingsGraph::Edge> edges;
  for (std::size_t k = 0; k < folded.size(); ++k) {
    if (alive_edge[k]) edges.push_back({number[folded[k].from], number[folded[k].to], folded[k].label});
  }
  return StallingsGraph(order.size(), std::move(edges));
}

bool contains(const StallingsGraph& g, const Word& w) {
  std::size_t at = g.basepoint();
  for (Letter l : w) {
    auto next = g.step(at, l);
    if (!next) return false;
    at = *next;
  }
  return at == g.basepoint();
}

std::size_t rank(const StallingsGraph& g) {
  return g.edges().size() + 1 - g.vertex_count();
}

std::string to_dot(const StallingsGraph& g) {
  std::ostringstream os;
  os << "digraph stallings {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v;
    if (v == g.basepoint()) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (const auto& e : g.edges()) {
    os << "  v" << e.from << " -> v" << e.to << " [label=\"a" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fsaut
