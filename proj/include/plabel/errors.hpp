#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plabel {

// Malformed graph/labelling/certificate text. Carries the 1-based line and
// the 0-based byte offset within that line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & what, std::size_t line, std::size_t offset)
        : std::runtime_error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " + what),
          line_(line), offset_(offset) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

// An element (vertex or edge) that does not belong to the host graph.
class DomainError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// A proven guarantee failed on a concrete input. Never expected; surfaced as
// a research event (CLI exit code 3) rather than silently worked around.
class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No unavoidable configuration was found on a graph of minimum degree two,
// which means the input was not outerplanar.
class ConfigurationNotFound : public TheoremViolation {
public:
    using TheoremViolation::TheoremViolation;
};

} // namespace plabel
