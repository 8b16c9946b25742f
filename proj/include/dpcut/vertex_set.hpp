#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpcut {

using VertexId = std::uint32_t;

/// Membership set over the dense vertex range [0, n) of one graph.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
      : VertexSet(universe) {
    for (auto v : members) insert(v);
  }

  static VertexSet from_members(std::size_t universe, const std::vector<VertexId>& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(v);
    return s;
  }

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
    if (universe < 64 && (mask >> universe) != 0)
      throw std::invalid_argument("VertexSet::from_mask: mask has bits outside the universe");
    VertexSet s(universe);
    if (universe > 0) s.words_[0] = mask;
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<VertexId>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(VertexId v) const {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
  }

  void insert(VertexId v) {
    check(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  void erase(VertexId v) {
    check(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Members in ascending order.
  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  /// Low 64 members as a bitmask (bit i <=> vertex i); requires universe <= 64.
  std::uint64_t to_mask() const {
    if (universe_ > 64) throw std::invalid_argument("VertexSet::to_mask: universe exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  void check(VertexId v) const {
    if (v >= universe_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside set universe of size " +
                              std::to_string(universe_));
  }

  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("VertexSet universes differ");
  }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dpcut
