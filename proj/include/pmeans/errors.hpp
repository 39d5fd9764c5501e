#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pmeans {

// Base class for every data/domain failure raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sample violates its structural invariants (empty, mismatched lengths,
// negative or all-zero weights, non-finite entries).
struct invalid_sample : error {
    using error::error;
};

// A transform was applied outside its valid domain.
struct domain_error : error {
    using error::error;
};

// A scalar argument is outside its documented range.
struct invalid_argument : error {
    using error::error;
};

// Outcome distribution violates its invariants (probabilities not summing
// to one, duplicate or non-positive outcomes).
struct invalid_distribution : error {
    using error::error;
};

// Basket violates its invariants (weights not summing to one, duplicate
// categories, non-positive sub-indices).
struct invalid_basket : error {
    using error::error;
};

// Point cloud whose covariance is singular to working precision.
struct degenerate_cloud : error {
    using error::error;
};

// Malformed input file. Carries the 1-based line number of the offending row.
class parse_error : public error {
public:
    parse_error(std::string_view origin, std::size_t line, std::string_view message)
        : error(std::string(origin) + ":" + std::to_string(line) + ": " + std::string(message)),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace pmeans
