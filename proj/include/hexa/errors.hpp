#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hexa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coordinate violates its system's structural constraint
// (cube x+y+z != 0, double-width parity).
struct InvalidCoordinate : Error {
    using Error::Error;
};

// Elements of different groups (C6 vs D6, p6 vs p6m) were combined.
struct FlavorMismatch : Error {
    using Error::Error;
};

// Tensor dimensions do not match the operation's contract.
struct ShapeError : Error {
    using Error::Error;
};

// A buffer carries nonzero values in its masked padding region.
struct MaskViolation : Error {
    using Error::Error;
};

// The requested lattice transformation is not defined for this image
// (mask not closed under the transformation).
struct UnsupportedTransform : Error {
    using Error::Error;
};

// A scalar argument is outside its allowed range.
struct ArgumentError : Error {
    using Error::Error;
};

// A file could not be read or written.
struct IoError : Error {
    using Error::Error;
};

// Malformed input file; offset is the byte position of the defect.
class ParseError : public IoError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : IoError(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace hexa
