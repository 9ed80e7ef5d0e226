#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace syncset {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A finite word: a sequence of letter indices, each in [0, k) for the
/// automaton it is paired with.
using Word = std::vector<Letter>;

/// Raised when a document (automaton/graph JSON, DIMACS) cannot be parsed.
/// The message names the offending location (JSON path or line number).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace syncset
