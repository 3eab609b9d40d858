#pragma once
// Brute-force reference implementations. These deliberately avoid the
// library's reduction, folding and search code paths; they only share the
// Letter/Word value types.

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "fsaut/word.hpp"

namespace oracle {

using fsaut::Index;
using fsaut::Letter;
using Letters = std::vector<Letter>;
using Tuple = std::vector<Letters>;

/// Repeated full scans, deleting the first cancelling pair each time.
inline Letters naive_reduce(Letters w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k].index == w[k + 1].index && w[k].sign == -w[k + 1].sign) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline Letters letters_of(const fsaut::Word& w) { return Letters(w.begin(), w.end()); }

inline Letters naive_inverse(const Letters& w) {
  Letters out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->index, static_cast<std::int8_t>(-it->sign)});
  return out;
}

inline Letters naive_concat(const Letters& u, const Letters& v) {
  Letters out = u;
  out.insert(out.end(), v.begin(), v.end());
  return naive_reduce(out);
}

/// Substitute images[i-1] for a_i (a_i itself beyond images.size()).
inline Letters naive_substitute(const Tuple& images, const Letters& w) {
  Letters out;
  for (Letter l : w) {
    Letters img = l.index <= images.size() ? images[l.index - 1] : Letters{{l.index, 1}};
    if (l.sign < 0) img = naive_inverse(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return naive_reduce(out);
}

struct LettersHash {
  std::size_t operator()(const Letters& w) const noexcept {
    std::size_t h = w.size();
    for (Letter l : w) h = h * 1000003u + l.index * 2u + (l.sign < 0);
    return h;
  }
};

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept {
    std::size_t h = t.size();
    for (const auto& w : t) h = h * 10007u + LettersHash{}(w);
    return h;
  }
};

/// All reduced products of at most `factors` elements of t and their
/// inverses whose reduced length is at most `max_length`.
inline std::set<Letters> subgroup_ball(const Tuple& t, std::size_t factors, std::size_t max_length) {
  Tuple gens;
  for (const auto& w : t) {
    gens.push_back(w);
    gens.push_back(naive_inverse(w));
  }
  std::set<Letters> level{Letters{}};
  std::set<Letters> all{Letters{}};
  // Intermediate products may exceed max_length before cancelling back down.
  for (std::size_t k = 0; k < factors; ++k) {
    std::set<Letters> next;
    for (const auto& p : level) {
      for (const auto& g : gens) next.insert(naive_concat(p, g));
    }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  std::set<Letters> out;
  for (const auto& w : all) {
    if (w.size() <= max_length) out.insert(w);
  }
  return out;
}

/// Folding done the slow way: a flat edge list, scanned for a foldable pair
/// and rewritten after every merge. No core trimming.
class NaiveFoldedGraph {
 public:
  explicit NaiveFoldedGraph(const Tuple& t) {
    std::size_t vertices = 1;
    for (const auto& w : t) {
      std::size_t at = 0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        const std::size_t to = k + 1 == w.size() ? 0 : vertices++;
        add(at, to, w[k]);
        at = to;
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < edges_.size() && !changed; ++x) {
        for (std::size_t y = x + 1; y < edges_.size() && !changed; ++y) {
          const Edge& a = edges_[x];
          const Edge& b = edges_[y];
          if (a.label != b.label) continue;
          if (a.from == b.from && a.to != b.to) {
            merge(a.to, b.to);
            changed = true;
          } else if (a.to == b.to && a.from != b.from) {
            merge(a.from, b.from);
            changed = true;
          } else if (a.from == b.from && a.to == b.to) {
            edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(y));
            changed = true;
          }
        }
      }
    }
  }

  /// Endpoint of the edge leaving v along l, if any.
  std::optional<std::size_t> step(std::size_t v, Letter l) const {
    for (const Edge& e : edges_) {
      if (e.label != l.index) continue;
      if (l.sign > 0 && e.from == v) return e.to;
      if (l.sign < 0 && e.to == v) return e.from;
    }
    return std::nullopt;
  }

  bool accepts(const Letters& w) const {
    std::optional<std::size_t> at = 0;
    for (Letter l : w) {
      at = step(*at, l);
      if (!at) return false;
    }
    return *at == 0;
  }

 private:
  struct Edge {
    std::size_t from;
    std::size_t to;
    Index label;
  };

  void add(std::size_t from, std::size_t to, Letter l) {
    if (l.sign > 0) {
      edges_.push_back({from, to, l.index});
    } else {
      edges_.push_back({to, from, l.index});
    }
  }

  // Keeps the smaller id so the basepoint stays 0.
  void merge(std::size_t u, std::size_t v) {
    const std::size_t keep = std::min(u, v);
    const std::size_t drop = std::max(u, v);
    for (Edge& e : edges_) {
      if (e.from == drop) e.from = keep;
      if (e.to == drop) e.to = keep;
    }
  }

  std::vector<Edge> edges_;
};

/// All reduced words over a_1..a_m of length exactly len.
inline std::vector<Letters> all_words(Index m, std::size_t len) {
  std::vector<Letters> out{Letters{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Letters> next;
    for (const auto& w : out) {
      for (Index i = 1; i <= m; ++i) {
        for (int s : {1, -1}) {
          Letter l{i, static_cast<std::int8_t>(s)};
          if (!w.empty() && w.back().index == i && w.back().sign == -s) continue;
          Letters x = w;
          x.push_back(l);
          next.push_back(std::move(x));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Every tuple of `entries` nonempty reduced words over a_1..a_m with total
/// length at most max_total.
inline void for_each_tuple(Index m, std::size_t entries, std::size_t max_total,
                           const std::function<void(const Tuple&)>& visit) {
  std::vector<std::vector<Letters>> by_length(max_total + 1);
  for (std::size_t len = 1; len <= max_total; ++len) by_length[len] = all_words(m, len);
  Tuple current;
  std::function<void(std::size_t)> rec = [&](std::size_t budget) {
    if (current.size() == entries) {
      visit(current);
      return;
    }
    const std::size_t remaining = entries - current.size() - 1;
    for (std::size_t len = 1; len + remaining <= budget; ++len) {
      for (const auto& w : by_length[len]) {
        current.push_back(w);
        rec(budget - len);
        current.pop_back();
      }
    }
  };
  if (entries <= max_total) rec(max_total);
}

inline std::size_t total_length(const Tuple& t) {
  std::size_t n = 0;
  for (const auto& w : t) n += w.size();
  return n;
}

/// Elementary automorphisms of A_m as image tuples: inversions, swaps and
/// the four transvections a_i -> a_i a_j^{+-1}, a_j^{+-1} a_i.
inline std::vector<Tuple> elementary_images(Index m) {
  auto standard = [m] {
    Tuple t;
    for (Index i = 1; i <= m; ++i) t.push_back({{i, 1}});
    return t;
  };
  std::vector<Tuple> out;
  for (Index i = 1; i <= m; ++i) {
    Tuple t = standard();
    t[i - 1] = {{i, -1}};
    out.push_back(t);
    for (Index j = 1; j <= m; ++j) {
      if (i == j) continue;
      if (i < j) {
        Tuple s = standard();
        std::swap(s[i - 1], s[j - 1]);
        out.push_back(s);
      }
      for (int sign : {1, -1}) {
        const Letter y{j, static_cast<std::int8_t>(sign)};
        Tuple r = standard();
        r[i - 1] = {{i, 1}, y};
        out.push_back(r);
        Tuple l = standard();
        l[i - 1] = {y, {i, 1}};
        out.push_back(l);
      }
    }
  }
  return out;
}

/// The orbit of (a_1, ..., a_n) under Aut(A_m), explored by breadth-first
/// search through elementary automorphisms, keeping only tuples with total
/// length at most `search_bound`. Report tuples up to a smaller length; the
/// slack lets paths climb over intermediate peaks.
/// Orbit of (a_1, ..., a_n) under post-composition by elementary
/// automorphisms of A_m, restricted to tuples of total length at most
/// search_bound. Tuples are stored as byte strings: letter a_i^e is the byte
/// 2i + (e < 0) and entries are separated by 0.
class StandardOrbit {
 public:
  StandardOrbit(Index n, Index m, std::size_t search_bound) {
    const std::vector<Tuple> moves = elementary_images(m);
    std::vector<std::vector<std::string>> images;  // images[move][letter code]
    for (const auto& e : moves) {
      std::vector<std::string> img(2 * m + 2);
      for (Index i = 1; i <= m; ++i) {
        img[2 * i] = encode_word(e[i - 1]);
        img[2 * i + 1] = encode_word(naive_inverse(e[i - 1]));
      }
      images.push_back(std::move(img));
    }
    std::string start;
    for (Index i = 1; i <= n; ++i) {
      if (i > 1) start.push_back('\0');
      start.push_back(static_cast<char>(2 * i));
    }
    seen_.insert(start);
    std::deque<std::string> queue{start};
    std::string next, entry;
    while (!queue.empty()) {
      const std::string t = std::move(queue.front());
      queue.pop_front();
      for (const auto& img : images) {
        next.clear();
        std::size_t letters = 0;
        entry.clear();
        auto flush = [&] {
          reduce_bytes(entry);
          letters += entry.size();
          next += entry;
          entry.clear();
        };
        for (char c : t) {
          if (c == '\0') {
            flush();
            next.push_back('\0');
          } else {
            entry += img[static_cast<unsigned char>(c)];
          }
        }
        flush();
        if (letters > search_bound) continue;
        if (seen_.insert(next).second) queue.push_back(next);
      }
    }
  }

  bool contains(const Tuple& t) const { return seen_.count(encode(t)) == 1; }
  std::size_t size() const { return seen_.size(); }

 private:
  static std::string encode_word(const Letters& w) {
    std::string out;
    for (Letter l : w) out.push_back(static_cast<char>(2 * l.index + (l.sign < 0)));
    return out;
  }
  static std::string encode(const Tuple& t) {
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k > 0) out.push_back('\0');
      out += encode_word(t[k]);
    }
    return out;
  }
  // Codes 2i and 2i + 1 are mutually inverse.
  static void reduce_bytes(std::string& w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if ((w[k] ^ w[k + 1]) == 1) {
          w.erase(k, 2);
          changed = true;
          break;
        }
      }
    }
  }

  std::unordered_set<std::string> seen_;
};

inline fsaut::Word to_word(const Letters& w) { return fsaut::Word(w); }

inline fsaut::WordTuple to_word_tuple(const Tuple& t) {
  fsaut::WordTuple out;
  for (const auto& w : t) out.push_back(to_word(w));
  return out;
}

inline Tuple to_tuple(const fsaut::WordTuple& t) {
  Tuple out;
  for (const auto& w : t) out.push_back(letters_of(w));
  return out;
}

}  // namespace oracle
