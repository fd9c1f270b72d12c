#ifndef INVENUM_ERRORS_HPP
#define INVENUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invenum {

// Thrown when an exhaustive generator or enumeration is asked to go past
// its configured bound.
struct BoundError : std::runtime_error {
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed textual input (permutations, b-files); carries the
// 1-based line number when the input is line oriented.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what, long line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                                         : what),
          line(line_no) {}
    long line = 0;
};

} // namespace invenum

#endif
