#pragma once

// Canonical labelling by equitable refinement plus exhaustive individualisation.
// Every leaf of the search tree is a discrete ordering of V(G); the canonical
// form is the lexicographically least upper-triangle bit string over all
// leaves. Automorphisms found at equal leaves prune sibling branches that lie
// in the same orbit of the prefix stabiliser, which keeps highly symmetric
// inputs tractable without affecting which leaf wins.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "domcyc/graph.hpp"
#include "domcyc/graph6.hpp"

namespace domcyc {

struct CanonicalForm {
  /// graph6 of the canonically relabelled graph; equal iff isomorphic.
  std::string encoding;
  /// labeling[v] = canonical label of vertex v.
  std::vector<Vertex> labeling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.encoding == b.encoding;
  }
};

namespace canon_detail {

template <class Set>
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    rows_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) rows_.push_back(g.template row<Set>(static_cast<Vertex>(v)));
    const std::size_t bits = n_ * (n_ > 0 ? n_ - 1 : 0) / 2;
    key_words_ = (bits + 63) / 64;
    best_key_.assign(key_words_, 0);
    leaf_key_.assign(key_words_, 0);
    counts_.assign(n_, 0);
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    std::vector<Vertex> lab(n_);
    std::iota(lab.begin(), lab.end(), 0);
    // cell_end[i] is true when position i closes a cell.
    std::vector<char> cell_end(n_, 0);
    cell_end[n_ - 1] = 1;
    refine(lab, cell_end);
    std::vector<Vertex> prefix;
    search(lab, cell_end, prefix);
    std::vector<Vertex> labeling(n_);
    for (std::size_t i = 0; i < n_; ++i) labeling[static_cast<std::size_t>(best_lab_[i])] = static_cast<Vertex>(i);
    return labeling;
  }

 private:
  bool adjacent(Vertex a, Vertex b) const { return rows_[static_cast<std::size_t>(a)].test(b); }

  // Splits cells by neighbour counts into each splitter cell until stable.
  // Only label-invariant data drive the splits, so the result commutes with relabelling.
  void refine(std::vector<Vertex>& lab, std::vector<char>& cell_end) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t ws = 0; ws < n_ && !changed;) {
        std::size_t we = ws;
        while (!cell_end[we]) ++we;
        Set splitter(n_);
        for (std::size_t i = ws; i <= we; ++i) splitter.insert(lab[i]);
        for (std::size_t xs = 0; xs < n_;) {
          std::size_t xe = xs;
          while (!cell_end[xe]) ++xe;
          if (xe > xs) changed |= split(lab, cell_end, xs, xe, splitter);
          xs = xe + 1;
        }
        ws = we + 1;
      }
    }
  }

  bool split(std::vector<Vertex>& lab, std::vector<char>& cell_end, std::size_t start, std::size_t stop,
             const Set& splitter) {
    bool uniform = true;
    for (std::size_t i = start; i <= stop; ++i) {
      const Vertex v = lab[i];
      counts_[static_cast<std::size_t>(v)] = (rows_[static_cast<std::size_t>(v)] & splitter).count();
      if (counts_[static_cast<std::size_t>(v)] != counts_[static_cast<std::size_t>(lab[start])]) uniform = false;
    }
    if (uniform) return false;
    std::stable_sort(lab.begin() + static_cast<std::ptrdiff_t>(start), lab.begin() + static_cast<std::ptrdiff_t>(stop) + 1,
                     [&](Vertex a, Vertex b) {
                       return counts_[static_cast<std::size_t>(a)] < counts_[static_cast<std::size_t>(b)];
                     });
    for (std::size_t i = start; i < stop; ++i)
      if (counts_[static_cast<std::size_t>(lab[i])] != counts_[static_cast<std::size_t>(lab[i + 1])]) cell_end[i] = 1;
    return true;
  }

  void leaf_key(const std::vector<Vertex>& lab) {
    std::fill(leaf_key_.begin(), leaf_key_.end(), 0);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i, ++bit)
        if (adjacent(lab[i], lab[j])) leaf_key_[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
  }

  void search(const std::vector<Vertex>& lab, const std::vector<char>& cell_end, std::vector<Vertex>& prefix) {
    // Target: first smallest non-singleton cell.
    std::size_t target_start = n_;
    std::size_t target_size = n_ + 1;
    for (std::size_t s = 0; s < n_;) {
      std::size_t e = s;
      while (!cell_end[e]) ++e;
      if (e > s && e - s + 1 < target_size) {
        target_start = s;
        target_size = e - s + 1;
      }
      s = e + 1;
    }
    if (target_start == n_) {
      visit_leaf(lab);
      return;
    }
    std::vector<Vertex> cell(lab.begin() + static_cast<std::ptrdiff_t>(target_start),
                             lab.begin() + static_cast<std::ptrdiff_t>(target_start + target_size));
    std::sort(cell.begin(), cell.end());
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      if (!tried.empty() && in_explored_orbit(prefix, tried, v)) continue;
      std::vector<Vertex> child = lab;
      std::vector<char> child_end = cell_end;
      auto it = std::find(child.begin() + static_cast<std::ptrdiff_t>(target_start),
                          child.begin() + static_cast<std::ptrdiff_t>(target_start + target_size), v);
      std::rotate(child.begin() + static_cast<std::ptrdiff_t>(target_start), it, it + 1);
      child_end[target_start] = 1;
      refine(child, child_end);
      prefix.push_back(v);
      search(child, child_end, prefix);
      prefix.pop_back();
      tried.push_back(v);
    }
  }

  void visit_leaf(const std::vector<Vertex>& lab) {
    leaf_key(lab);
    if (best_lab_.empty()) {
      best_lab_ = lab;
      best_key_ = leaf_key_;
      return;
    }
    if (leaf_key_ == best_key_) {
      if (automorphisms_.size() < kMaxStoredAutomorphisms) {
        std::vector<Vertex> perm(n_);
        for (std::size_t i = 0; i < n_; ++i) perm[static_cast<std::size_t>(best_lab_[i])] = lab[i];
        automorphisms_.push_back(std::move(perm));
      }
    } else if (leaf_key_ < best_key_) {
      best_key_ = leaf_key_;
      best_lab_ = lab;
    }
  }

  // Is v in the orbit of an already tried sibling under the automorphisms
  // found so far that fix every individualised vertex on the current path?
  bool in_explored_orbit(const std::vector<Vertex>& prefix, const std::vector<Vertex>& tried, Vertex v) {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    bool any = false;
    for (const auto& perm : automorphisms_) {
      if (!std::all_of(prefix.begin(), prefix.end(),
                       [&](Vertex p) { return perm[static_cast<std::size_t>(p)] == p; }))
        continue;
      any = true;
      for (std::size_t x = 0; x < n_; ++x) {
        const Vertex a = find(static_cast<Vertex>(x));
        const Vertex b = find(perm[x]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    if (!any) return false;
    const Vertex root = find(v);
    return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return find(t) == root; });
  }

  static constexpr std::size_t kMaxStoredAutomorphisms = 256;

  const Graph& g_;
  std::size_t n_;
  std::vector<Set> rows_;
  std::size_t key_words_ = 0;
  std::vector<std::uint64_t> best_key_;
  std::vector<std::uint64_t> leaf_key_;
  std::vector<Vertex> best_lab_;
  std::vector<std::size_t> counts_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace canon_detail

inline CanonicalForm canonical(const Graph& g) {
  std::vector<Vertex> labeling = with_set_type(g, [&](auto tag) {
    return canon_detail::Canonizer<decltype(tag)>(g).run();
  });
  CanonicalForm out;
  out.encoding = write_graph6(g.relabeled(labeling));
  out.labeling = std::move(labeling);
  return out;
}

inline Graph canonical_graph(const Graph& g) { return g.relabeled(canonical(g).labeling); }

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> da, db;
  for (std::size_t v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(static_cast<Vertex>(v)));
    db.push_back(b.degree(static_cast<Vertex>(v)));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical(a).encoding == canonical(b).encoding;
}

}  // namespace domcyc
