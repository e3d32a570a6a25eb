#ifndef MBOUNDS_ERRORS_HPP
#define MBOUNDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mbounds {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sample construction received no values.
class EmptySample : public Error {
public:
    using Error::Error;
};

/// A value is NaN or infinite where a finite real is required.
class InvalidValue : public Error {
public:
    using Error::Error;
};

/// A 1-based index (j, k) is outside its valid range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// The sample is degenerate for the requested bound (e.g. all values equal,
/// or n = 1 where n >= 2 is required).
class DegenerateSample : public Error {
public:
    using Error::Error;
};

/// A distinct-integer refinement was requested but the sample's witness is false.
class RequiresDistinctIntegers : public Error {
public:
    using Error::Error;
};

/// A polynomial operation requires all roots real and the input rules that out.
class NotAllRootsReal : public Error {
public:
    using Error::Error;
};

/// Malformed argument outside any more specific category.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Root isolation could not separate distinct roots at its working width.
class WidenInterval : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed; carries a 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0) : Error(what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace mbounds

#endif
