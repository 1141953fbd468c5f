#pragma once

// Isomorph-free generation of all graphs on n vertices by edge augmentation.
// Level m holds one canonically labelled representative per isomorphism
// class with m edges; level m+1 is every single-edge extension of level m,
// deduplicated by canonical form. Every graph with m+1 edges arises from
// some graph with m edges, so each level is complete.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "domcyc/canonical.hpp"
#include "domcyc/connectivity.hpp"
#include "domcyc/graph.hpp"
#include "domcyc/graph6.hpp"
#include "domcyc/iso.hpp"

namespace domcyc {

inline constexpr std::size_t kMaxGeneratedOrder = 10;

/// Conjunction of predicates applied to streamed graphs.
struct GraphFilter {
  bool connected = false;
  bool two_connected = false;
  std::vector<ForbiddenSet> free_of;
  std::function<bool(const Graph&)> custom;

  bool accepts(const Graph& g) const {
    if (connected && !is_connected(g)) return false;
    if (two_connected && !is_two_connected(g)) return false;
    for (const auto& family : free_of)
      if (!is_free(g, family)) return false;
    if (custom && !custom(g)) return false;
    return true;
  }
};

/// Position in the unfiltered sequence: the next graph to examine is entry
/// `index` of the level with `edges` edges. File sources use edges = 0 and
/// the record index.
struct StreamCursor {
  std::size_t edges = 0;
  std::size_t index = 0;
  friend bool operator==(const StreamCursor&, const StreamCursor&) = default;
};

/// One edge-count level: canonical graphs sorted by canonical graph6.
struct GenerationLevel {
  std::vector<std::string> encodings;
  std::vector<Graph> graphs;
};

inline GenerationLevel first_level(std::size_t n) {
  GenerationLevel level;
  level.graphs.push_back(Graph(n));
  level.encodings.push_back(write_graph6(level.graphs.back()));
  return level;
}

inline GenerationLevel next_level(const GenerationLevel& level) {
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> found;
  for (const Graph& g : level.graphs) {
    const std::size_t n = g.order();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) continue;
        const Graph h = g.with_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        CanonicalForm cf = canonical(h);
        if (seen.insert(cf.encoding).second) found.emplace_back(std::move(cf.encoding), h.relabeled(cf.labeling));
      }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  GenerationLevel out;
  out.encodings.reserve(found.size());
  out.graphs.reserve(found.size());
  for (auto& [enc, g] : found) {
    out.encodings.push_back(std::move(enc));
    out.graphs.push_back(std::move(g));
  }
  return out;
}

/// Pull-based stream of graphs, from the internal generator or a graph6 source.
/// Not safe for concurrent pulls.
class GraphStream {
 public:
  static GraphStream generate(std::size_t n, GraphFilter filter = {}) {
    if (n < 1 || n > kMaxGeneratedOrder)
      throw std::invalid_argument("generate: n must be in 1.." + std::to_string(kMaxGeneratedOrder));
    GraphStream s;
    s.n_ = n;
    s.filter_ = std::move(filter);
    s.level_ = first_level(n);
    return s;
  }

  static GraphStream from_graphs(std::vector<Graph> graphs, GraphFilter filter = {}) {
    GraphStream s;
    s.from_file_ = true;
    s.filter_ = std::move(filter);
    s.level_.graphs = std::move(graphs);
    return s;
  }

  static GraphStream from_graph6(std::istream& in, GraphFilter filter = {}) {
    return from_graphs(read_graph6_stream(in), std::move(filter));
  }

  /// Next graph passing the filter, or nullopt at the end.
  std::optional<Graph> next() {
    while (true) {
      if (cursor_.index < level_.graphs.size()) {
        const Graph& g = level_.graphs[cursor_.index++];
        if (filter_.accepts(g)) return g;
        continue;
      }
      if (from_file_ || cursor_.edges >= max_edges()) return std::nullopt;
      level_ = next_level(level_);
      ++cursor_.edges;
      cursor_.index = 0;
    }
  }

  StreamCursor cursor() const { return cursor_; }

  /// Repositions to a cursor previously obtained from cursor().
  void seek(StreamCursor target) {
    if (from_file_) {
      if (target.edges != 0 || target.index > level_.graphs.size())
        throw std::invalid_argument("seek: cursor outside the file");
      cursor_ = target;
      return;
    }
    if (target.edges > max_edges()) throw std::invalid_argument("seek: edge count out of range");
    if (target.edges < cursor_.edges) {
      level_ = first_level(n_);
      cursor_ = {};
    }
    while (cursor_.edges < target.edges) {
      level_ = next_level(level_);
      ++cursor_.edges;
    }
    if (target.index > level_.graphs.size()) throw std::invalid_argument("seek: index out of range");
    cursor_.index = target.index;
  }

  std::vector<Graph> collect() {
    std::vector<Graph> out;
    while (auto g = next()) out.push_back(std::move(*g));
    return out;
  }

 private:
  GraphStream() = default;
  std::size_t max_edges() const { return n_ * (n_ - 1) / 2; }

  std::size_t n_ = 0;
  bool from_file_ = false;
  GraphFilter filter_;
  GenerationLevel level_;
  StreamCursor cursor_;
};

inline std::vector<Graph> generate_all(std::size_t n, GraphFilter filter = {}) {
  return GraphStream::generate(n, std::move(filter)).collect();
}

}  // namespace domcyc
