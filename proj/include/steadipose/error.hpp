#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steadipose {

/// Malformed record in a trace file. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Structurally valid file with invalid content (non-monotonic time,
/// landmark count mismatch, unknown version).
class TraceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Frame-level failure in the streaming pipeline; message carries the frame index.
class StreamError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Homogeneous point with |w| below threshold during a perspective divide.
class PointAtInfinityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace steadipose
