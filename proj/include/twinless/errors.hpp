#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twinless {

/// Malformed graph: bad header, out-of-range endpoint, self-loop, duplicate
/// edge. `line()` is the 1-based input line for parse errors, 0 otherwise.
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// The concrete item that proves a connectivity precondition fails.
struct Witness {
  enum class Kind {
    kUnreachedVertex,      // a: vertex not reached from the search root
    kTooFewVertices,       // a: vertex count
    kArticulationPoint,    // a: vertex
    kBridge,               // a, b: endpoints; edge: edge id
    kNotStronglyConnected, // a: vertex not mutually reachable with b
    kStrongArticulationPoint,  // a: vertex
    kStrongBridge,         // a, b: endpoints; edge: edge id
    kTwinPresent,          // a, b: endpoints; edge: edge id
  };
  Kind kind;
  std::int64_t a = -1;
  std::int64_t b = -1;
  std::int64_t edge = -1;

  std::string describe() const;
};

/// An input violates an operation's precondition; carries a witness.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, Witness witness)
      : std::runtime_error(what + ": " + witness.describe()), witness_(witness) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

}  // namespace twinless
