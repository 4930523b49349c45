#pragma once

#include <stdexcept>
#include <string>

namespace splitgraph {

/// Input text could not be decoded. position() is a 0-based byte offset for
/// graph6 input and a 1-based line number for edge-list input.
class ParseError : public std::runtime_error {
public:
  enum class Unit { byte, line };

  ParseError(const std::string& msg, Unit unit, std::size_t position)
      : std::runtime_error(prefix(unit, position) + msg),
        unit_(unit),
        position_(position) {}

  Unit unit() const { return unit_; }
  std::size_t position() const { return position_; }

private:
  static std::string prefix(Unit unit, std::size_t position) {
    return (unit == Unit::byte ? "byte " : "line ") + std::to_string(position) + ": ";
  }

  Unit unit_;
  std::size_t position_;
};

/// A construction does not fit the compiled bitset width (e.g. splitting a
/// graph whose doubled order exceeds capacity).
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exact oracle refused an input above its configured size bound.
class BoundError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace splitgraph
