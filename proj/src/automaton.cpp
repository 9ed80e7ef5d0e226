#include "syncset/automaton.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "syncset/rng.hpp"

namespace syncset {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

Automaton::Automaton(std::uint32_t state_count, std::uint32_t alphabet_size,
                     std::vector<State> delta, std::optional<std::vector<std::string>> labels)
    : state_count_(state_count),
      alphabet_size_(alphabet_size),
      delta_(std::move(delta)),
      labels_(std::move(labels)) {
  require(state_count_ >= 1, "automaton needs at least one state");
  require(alphabet_size_ >= 1, "automaton needs at least one letter");
  require(delta_.size() == std::size_t{state_count_} * alphabet_size_,
          "transition table has " + std::to_string(delta_.size()) + " entries, expected " +
              std::to_string(std::size_t{state_count_} * alphabet_size_));
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    require(delta_[i] < state_count_,
            "transition target " + std::to_string(delta_[i]) + " at entry " + std::to_string(i) +
                " out of range [0, " + std::to_string(state_count_) + ")");
  }
  if (labels_) {
    require(labels_->size() == state_count_, "label list must have one entry per state");
  }
}

Automaton::Builder::Builder(std::uint32_t state_count, std::uint32_t alphabet_size)
    : state_count_(state_count),
      alphabet_size_(alphabet_size),
      delta_(std::size_t{state_count} * alphabet_size, kUnset),
      labels_(state_count) {}

void Automaton::Builder::set(State s, Letter a, State target) {
  if (s >= state_count_ || a >= alphabet_size_ || target >= state_count_) {
    throw std::invalid_argument("builder transition (" + std::to_string(s) + ", " +
                                std::to_string(a) + ") -> " + std::to_string(target) +
                                " out of range");
  }
  State& slot = delta_[std::size_t{s} * alphabet_size_ + a];
  if (slot != kUnset) {
    throw std::logic_error("builder transition (" + std::to_string(s) + ", " + std::to_string(a) +
                           ") assigned twice");
  }
  slot = target;
}

void Automaton::Builder::set_all_letters(State s, State target) {
  for (Letter a = 0; a < alphabet_size_; ++a) set(s, a, target);
}

void Automaton::Builder::label(State s, std::string text) {
  if (s >= state_count_) throw std::invalid_argument("builder label for out-of-range state");
  labels_[s] = std::move(text);
}

Automaton Automaton::Builder::build() {
  for (State s = 0; s < state_count_; ++s) {
    for (Letter a = 0; a < alphabet_size_; ++a) {
      State& slot = delta_[std::size_t{s} * alphabet_size_ + a];
      if (slot == kUnset) slot = s;
    }
  }
  bool labelled = false;
  for (const std::string& text : labels_) {
    if (!text.empty()) {
      labelled = true;
      break;
    }
  }
  std::optional<std::vector<std::string>> labels;
  if (labelled) labels = std::move(labels_);
  return Automaton(state_count_, alphabet_size_, std::move(delta_), std::move(labels));
}

StateSet apply_letter(const Automaton& a, const StateSet& s, Letter x) {
  require(s.universe() == a.state_count(), "state set universe does not match the automaton");
  require(x < a.alphabet_size(),
          "letter " + std::to_string(x) + " out of range [0, " +
              std::to_string(a.alphabet_size()) + ")");
  StateSet image(a.state_count());
  s.for_each([&](State q) { image.insert(a.next(q, x)); });
  return image;
}

StateSet apply_word(const Automaton& a, const StateSet& s, const Word& w) {
  require(s.universe() == a.state_count(), "state set universe does not match the automaton");
  StateSet current = s;
  for (Letter x : w) current = apply_letter(a, current, x);
  return current;
}

State apply_word(const Automaton& a, State s, const Word& w) {
  require(s < a.state_count(), "state index out of range");
  for (Letter x : w) {
    require(x < a.alphabet_size(), "letter index out of range");
    s = a.next(s, x);
  }
  return s;
}

bool is_weakly_acyclic(const Automaton& a) {
  // Iterative three-colour DFS on the digraph with self-loops dropped; any
  // back edge is a non-trivial cycle.
  const std::uint32_t n = a.state_count();
  const std::uint32_t k = a.alphabet_size();
  enum : unsigned char { kWhite, kGrey, kBlack };
  std::vector<unsigned char> colour(n, kWhite);
  struct Frame {
    State state;
    Letter next_letter;
  };
  std::vector<Frame> stack;

  for (State root = 0; root < n; ++root) {
    if (colour[root] != kWhite) continue;
    colour[root] = kGrey;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      if (frame.next_letter == k) {
        colour[frame.state] = kBlack;
        stack.pop_back();
        continue;
      }
      const State target = a.next(frame.state, frame.next_letter++);
      if (target == frame.state) continue;  // self-loops are allowed
      if (colour[target] == kGrey) return false;
      if (colour[target] == kWhite) {
        colour[target] = kGrey;
        stack.push_back({target, 0});
      }
    }
  }
  return true;
}

bool is_unary(const Automaton& a) { return a.alphabet_size() == 1; }

bool is_binary(const Automaton& a) { return a.alphabet_size() == 2; }

Automaton random_automaton(std::uint32_t state_count, std::uint32_t alphabet_size,
                           std::uint64_t seed) {
  require(state_count >= 1, "random automaton needs at least one state");
  require(alphabet_size >= 1, "random automaton needs at least one letter");
  SplitMix64 rng(seed);
  std::vector<State> delta(std::size_t{state_count} * alphabet_size);
  for (auto& target : delta) target = static_cast<State>(rng.next_below(state_count));
  return Automaton(state_count, alphabet_size, std::move(delta));
}

}  // namespace syncset
