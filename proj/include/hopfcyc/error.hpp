#ifndef HOPFCYC_ERROR_HPP
#define HOPFCYC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hopfcyc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Dimensions or spaces of maps do not fit together.
class ShapeError : public Error
{
public:
    using Error::Error;
};

/// An operation's mathematical precondition does not hold.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// Malformed input text; carries the 1-based line number when known.
class ParseError : public Error
{
public:
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace hopfcyc

#endif  // HOPFCYC_ERROR_HPP
