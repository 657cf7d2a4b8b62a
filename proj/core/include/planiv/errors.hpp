#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace planiv {

/// Base class of all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (edge list, graph6, JSON). Carries a position when
/// one is known; line/column are 1-based, 0 means "not applicable".
struct ParseError : Error {
    std::size_t line = 0;
    std::size_t column = 0;
    ParseError(const std::string& msg, std::size_t line_ = 0, std::size_t column_ = 0)
        : Error(msg), line(line_), column(column_) {}
};

/// Structurally valid input that violates a documented precondition.
struct ValidationError : Error {
    using Error::Error;
};

/// A self-loop in an input that must describe a simple graph.
struct SelfLoopError : ValidationError {
    int vertex;
    explicit SelfLoopError(int v, std::size_t line = 0)
        : ValidationError("self-loop at vertex " + std::to_string(v) +
                          (line ? " (line " + std::to_string(line) + ")" : "")),
          vertex(v) {}
};

/// The input graph admits no plane embedding.
struct NonPlanarError : Error {
    using Error::Error;
};

/// A 4-connectivity requirement failed; witness is a separating vertex
/// triple when one was identified.
struct NotFourConnectedError : Error {
    std::array<int, 3> witness{-1, -1, -1};
    explicit NotFourConnectedError(const std::string& msg,
                                   std::array<int, 3> w = {-1, -1, -1})
        : Error(msg), witness(w) {}
};

/// Raised by select_minimal on an empty candidate list.
struct NoSeparatorError : Error {
    using Error::Error;
};

/// split() was called with a triangle whose interior is not inclusion-minimal.
struct MinimalityViolationError : Error {
    using Error::Error;
};

/// The edge-labeling search ran out of candidates. On valid 4-connected
/// input this indicates an internal inconsistency, so it is always surfaced.
struct SearchExhaustedError : Error {
    using Error::Error;
};

/// A certification step found the object it was handed to be wrong.
struct VerificationError : Error {
    using Error::Error;
};

/// One of the maintained construction invariants (I1/I2, displayed portions)
/// was not available when needed.
struct InvariantViolationError : Error {
    using Error::Error;
};

/// A maintained invariant broke; always a bug, never a user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace planiv
