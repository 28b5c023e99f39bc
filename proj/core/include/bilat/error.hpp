#ifndef BILAT_ERROR_HPP
#define BILAT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bilat {

/// Base class for all typed errors thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values live on incompatible ground spaces (atom counts differ).
class GroundMismatch : public Error {
public:
    using Error::Error;
};

/// A closure or search exceeded a configured cap; never silent truncation.
class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

/// A relation with an empty row or column was passed to an operation whose
/// contract assumes nondegeneracy.
class DegenerateRelation : public Error {
public:
    using Error::Error;
};

/// Malformed instance file or CLI input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Caps for closure sizes and backtracking searches. Exceeding a cap raises
/// SizeLimitExceeded.
struct Limits {
    std::size_t element_cap = 20'000;
    std::size_t node_cap = 1'000'000;
};

}  // namespace bilat

#endif
