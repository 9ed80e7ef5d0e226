#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "syncset/types.hpp"

namespace syncset {

/// Subset of the state indices [0, n) of a fixed universe, stored as a
/// packed bitset with a cached cardinality. Members always enumerate in
/// ascending index order, which the solvers rely on for deterministic
/// tie-breaking.
class StateSet {
public:
  StateSet() = default;

  explicit StateSet(std::uint32_t universe)
      : universe_(universe), blocks_((std::size_t{universe} + 63) / 64, 0) {}

  StateSet(std::uint32_t universe, std::initializer_list<State> members) : StateSet(universe) {
    for (State s : members) insert(s);
  }

  static StateSet singleton(std::uint32_t universe, State s) {
    StateSet r(universe);
    r.insert(s);
    return r;
  }

  static StateSet full(std::uint32_t universe) {
    StateSet r(universe);
    if (universe > 0) {
      for (auto& block : r.blocks_) block = ~std::uint64_t{0};
      r.trim();
      r.count_ = universe;
    }
    return r;
  }

  std::uint32_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool is_singleton() const { return count_ == 1; }

  bool contains(State s) const {
    return s < universe_ && ((blocks_[s >> 6] >> (s & 63)) & 1) != 0;
  }

  void insert(State s) {
    check_index(s);
    std::uint64_t& block = blocks_[s >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (s & 63);
    if ((block & bit) == 0) {
      block |= bit;
      ++count_;
    }
  }

  void erase(State s) {
    check_index(s);
    std::uint64_t& block = blocks_[s >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (s & 63);
    if ((block & bit) != 0) {
      block &= ~bit;
      --count_;
    }
  }

  /// Smallest member; the set must be nonempty.
  State first() const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b] != 0) {
        return static_cast<State>(b * 64 + std::countr_zero(blocks_[b]));
      }
    }
    throw std::logic_error("StateSet::first called on an empty set");
  }

  std::vector<State> members() const {
    std::vector<State> out;
    out.reserve(count_);
    for_each([&out](State s) { out.push_back(s); });
    return out;
  }

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      std::uint64_t word = blocks_[b];
      while (word != 0) {
        fn(static_cast<State>(b * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  bool is_subset_of(const StateSet& other) const {
    if (universe_ != other.universe_) return false;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if ((blocks_[b] & ~other.blocks_[b]) != 0) return false;
    }
    return true;
  }

  bool operator==(const StateSet& other) const {
    return universe_ == other.universe_ && blocks_ == other.blocks_;
  }
  bool operator!=(const StateSet& other) const { return !(*this == other); }

  /// True if any member is strictly greater than `s`.
  bool has_member_above(State s) const {
    const std::size_t start = (std::size_t{s} >> 6);
    if (start >= blocks_.size()) return false;
    const std::uint64_t mask = (s & 63) == 63 ? 0 : (~std::uint64_t{0} << ((s & 63) + 1));
    if ((blocks_[start] & mask) != 0) return true;
    for (std::size_t b = start + 1; b < blocks_.size(); ++b) {
      if (blocks_[b] != 0) return true;
    }
    return false;
  }

  std::size_t hash() const {
    // SplitMix64-style block mixing; stable within a process run.
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (std::uint64_t block : blocks_) {
      std::uint64_t z = h + block + 0x9e3779b97f4a7c15ULL;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      h = z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
  }

private:
  void check_index(State s) const {
    if (s >= universe_) {
      throw std::invalid_argument("state index " + std::to_string(s) +
                                  " out of range [0, " + std::to_string(universe_) + ")");
    }
  }

  void trim() {
    const std::uint32_t tail = universe_ & 63;
    if (tail != 0 && !blocks_.empty()) {
      blocks_.back() &= (std::uint64_t{1} << tail) - 1;
    }
  }

  std::uint32_t universe_ = 0;
  std::uint32_t count_ = 0;
  std::vector<std::uint64_t> blocks_;
};

/// Orders sets by their ascending member sequences (so {0,2} < {1,2} and a
/// proper prefix precedes its extensions). Used to break ties between
/// equal-cardinality maxima deterministically.
inline bool lex_less(const StateSet& a, const StateSet& b) {
  if (a == b) return false;
  const std::uint32_t universe = std::max(a.universe(), b.universe());
  for (State s = 0; s < universe; ++s) {
    const bool in_a = a.contains(s);
    const bool in_b = b.contains(s);
    if (in_a == in_b) continue;
    // First index where membership differs. If the sparser set has a later
    // member, the set holding `s` comes first; otherwise the sparser set is
    // a prefix and precedes.
    if (in_a) return b.has_member_above(s);
    return !a.has_member_above(s);
  }
  return false;
}

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

}  // namespace syncset
