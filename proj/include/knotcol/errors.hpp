#pragma once

#include <stdexcept>
#include <string>

namespace knotcol {

/// Malformed textual input (group descriptors, braid words, PD codes, JSON).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

/// A mathematical precondition does not hold (non-colouring group,
/// non-abelian longitude group, invalid quandle, ...).
class HypothesisError : public std::runtime_error {
public:
  explicit HypothesisError(const std::string &what) : std::runtime_error(what) {}
};

/// A configured search or size budget was exhausted.
class LimitExceeded : public std::runtime_error {
public:
  explicit LimitExceeded(const std::string &what) : std::runtime_error(what) {}
};

} // namespace knotcol
