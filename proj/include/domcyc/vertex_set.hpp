#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace domcyc {

using Vertex = int;

/// Vertex set packed into one machine word. Used by the hot search loops
/// whenever the host graph has at most 64 vertices.
class Mask64 {
 public:
  static constexpr std::size_t kMaxUniverse = 64;

  Mask64() = default;
  explicit Mask64(std::size_t /*universe*/) {}

  static Mask64 from_word(std::uint64_t w) {
    Mask64 m;
    m.w_ = w;
    return m;
  }
  static Mask64 full(std::size_t universe) {
    return from_word(universe >= 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << universe) - 1);
  }
  static Mask64 single(std::size_t /*universe*/, Vertex v) {
    return from_word(std::uint64_t{1} << v);
  }

  bool test(Vertex v) const { return (w_ >> v) & 1u; }
  void insert(Vertex v) { w_ |= std::uint64_t{1} << v; }
  void erase(Vertex v) { w_ &= ~(std::uint64_t{1} << v); }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(w_)); }
  bool empty() const { return w_ == 0; }
  bool intersects(const Mask64& o) const { return (w_ & o.w_) != 0; }
  bool is_subset_of(const Mask64& o) const { return (w_ & ~o.w_) == 0; }
  /// Lowest member, or -1.
  Vertex first() const { return w_ ? std::countr_zero(w_) : -1; }
  std::uint64_t word() const { return w_; }

  Mask64& operator&=(const Mask64& o) { w_ &= o.w_; return *this; }
  Mask64& operator|=(const Mask64& o) { w_ |= o.w_; return *this; }
  /// Set difference.
  Mask64& operator-=(const Mask64& o) { w_ &= ~o.w_; return *this; }
  friend Mask64 operator&(Mask64 a, const Mask64& b) { return a &= b; }
  friend Mask64 operator|(Mask64 a, const Mask64& b) { return a |= b; }
  friend Mask64 operator-(Mask64 a, const Mask64& b) { return a -= b; }
  friend bool operator==(const Mask64&, const Mask64&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t w = w_; w; w &= w - 1) f(static_cast<Vertex>(std::countr_zero(w)));
  }

 private:
  std::uint64_t w_ = 0;
};

/// Dynamic vertex set over a fixed universe 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
    s.trim();
    return s;
  }
  static VertexSet single(std::size_t universe, Vertex v) {
    VertexSet s(universe);
    s.insert(v);
    return s;
  }
  static VertexSet from_words(std::size_t universe, const std::uint64_t* words) {
    VertexSet s(universe);
    std::copy(words, words + s.words_.size(), s.words_.begin());
    return s;
  }

  std::size_t universe() const { return universe_; }
  bool test(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < universe_ &&
           ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u);
  }
  void insert(Vertex v) {
    assert(v >= 0 && static_cast<std::size_t>(v) < universe_);
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    assert(v >= 0 && static_cast<std::size_t>(v) < universe_);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  Vertex first() const { return next(0); }
  /// Smallest member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from < 0) from = 0;
    std::size_t i = static_cast<std::size_t>(from) >> 6;
    if (i >= words_.size()) return -1;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::uint64_t w = words_[i]; w; w &= w - 1)
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

template <class Set>
std::vector<Vertex> members_of(const Set& s) {
  std::vector<Vertex> out;
  s.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace domcyc
