#ifndef WTURAN_ERRORS_HPP
#define WTURAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wturan {

// Base class for all library errors so callers can catch in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed weight files, graph files, or pattern specs.
struct ParseError : Error {
    using Error::Error;
};

// An operation that needs at least one vertex got an empty weight vector.
struct EmptyWeightsError : Error {
    using Error::Error;
};

// Precondition violation: the input graph already contains the forbidden clique.
struct CliquePresentError : Error {
    using Error::Error;
};

// Pattern graph exceeds the exact chromatic-number search cap.
struct PatternTooLargeError : Error {
    using Error::Error;
};

// Input exceeds the exhaustive-search caps.
struct TooLargeError : Error {
    using Error::Error;
};

// Chromatic number of the forbidden pattern is at most 2; the leading term
// degenerates and the extremal value is not defined by the partition formula.
struct BipartitePatternError : Error {
    using Error::Error;
};

} // namespace wturan

#endif
