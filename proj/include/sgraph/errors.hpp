// errors.hpp — exception types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgraph {

// Numerical failure (eigensolver non-convergence, rank/sign inconsistency).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what, int iterations = -1)
        : std::runtime_error(what), iterations_(iterations) {}
    // Iteration/sweep count at failure, -1 if not applicable.
    int iterations() const { return iterations_; }

private:
    int iterations_;
};

// Malformed input data (graph6 streams). Carries the byte offset of the
// first offending byte.
class format_error : public std::runtime_error {
public:
    format_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A requested computation exceeds a configured budget or hard cap.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sgraph
