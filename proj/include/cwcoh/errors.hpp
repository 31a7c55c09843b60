#ifndef CWCOH_ERRORS_HPP
#define CWCOH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cwcoh {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A vector is not an integer combination of the given lattice basis.
class NotInLattice : public Error
{
public:
    using Error::Error;
};

/// A denominator generator lies outside the numerator lattice.
class ContainmentViolation : public Error
{
public:
    using Error::Error;
};

class ChainConditionViolation : public Error
{
public:
    using Error::Error;
};

class NotAnIsomorphism : public Error
{
public:
    using Error::Error;
};

class NotASphereModel : public Error
{
public:
    using Error::Error;
};

class MalformedWord : public Error
{
public:
    using Error::Error;
};

class IsoTransportFailure : public Error
{
public:
    using Error::Error;
};

/// A complex failed validation where a valid one was required.
class InvalidComplex : public Error
{
public:
    using Error::Error;
};

class ShapeMismatch : public Error
{
public:
    using Error::Error;
};

/// Syntax error in a textual input, with the offending character offset.
class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A document is syntactically valid JSON but violates the schema at `path`.
class SchemaError : public Error
{
public:
    SchemaError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path)
    {
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace cwcoh

#endif
