#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syncset/state_set.hpp"
#include "syncset/types.hpp"

namespace syncset {

/// Complete deterministic transition table over `state_count` states and
/// `alphabet_size` letters: exactly one successor per (state, letter) pair,
/// no initial or accepting states. Optional per-state labels carry
/// construction roles assigned by the gadget builders; they never affect
/// semantics.
class Automaton {
public:
  Automaton(std::uint32_t state_count, std::uint32_t alphabet_size, std::vector<State> delta,
            std::optional<std::vector<std::string>> labels = std::nullopt);

  std::uint32_t state_count() const { return state_count_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }

  State next(State s, Letter a) const {
    return delta_[std::size_t{s} * alphabet_size_ + a];
  }

  const std::vector<State>& delta() const { return delta_; }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }

  bool operator==(const Automaton& other) const = default;

  /// Incremental construction helper for the gadget builders. Transitions
  /// start unset; anything still unset when build() runs becomes a
  /// self-loop. Setting the same (state, letter) twice is a logic error so
  /// that construction bugs surface immediately.
  class Builder {
  public:
    Builder(std::uint32_t state_count, std::uint32_t alphabet_size);

    void set(State s, Letter a, State target);
    void set_all_letters(State s, State target);
    void label(State s, std::string text);

    Automaton build();

  private:
    std::uint32_t state_count_;
    std::uint32_t alphabet_size_;
    std::vector<State> delta_;
    std::vector<std::string> labels_;

    static constexpr State kUnset = ~State{0};
  };

private:
  std::uint32_t state_count_;
  std::uint32_t alphabet_size_;
  std::vector<State> delta_;
  std::optional<std::vector<std::string>> labels_;
};

/// Image of `s` under one letter. The result never has more members than the
/// input since the transition function is single-valued.
StateSet apply_letter(const Automaton& a, const StateSet& s, Letter x);

/// Image of `s` under a word, folding apply_letter left to right. The empty
/// word is the identity.
StateSet apply_word(const Automaton& a, const StateSet& s, const Word& w);

/// Single-state convenience overload.
State apply_word(const Automaton& a, State s, const Word& w);

/// True when every cycle of the transition digraph is a self-loop,
/// equivalently when the digraph with self-loops removed is acyclic.
bool is_weakly_acyclic(const Automaton& a);

bool is_unary(const Automaton& a);
bool is_binary(const Automaton& a);

/// Uniformly random complete transition table: each of the n*k targets is an
/// independent draw from [0, n) using SplitMix64, consumed in row-major
/// (state-major) order. Equal seeds give equal tables on every platform.
Automaton random_automaton(std::uint32_t state_count, std::uint32_t alphabet_size,
                           std::uint64_t seed);

}  // namespace syncset
