#pragma once

#include <stdexcept>
#include <string>

namespace torlim {

// Domain errors. Absence of a solution in `solve` is not an error (optional
// return); these signal invalid inputs or broken internal coherence.
struct NotWellDefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAComplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAResolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDiagram : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfiniteNode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IncompatibleComponents : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cocycle/coherence failures are scientific content: they are surfaced loudly
// and never silently repaired.
struct CocycleViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

struct RowLengthMismatch : ParseError {
    using ParseError::ParseError;
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace torlim
