#ifndef SEMITORIC_ERRORS_HPP
#define SEMITORIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semitoric {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Group elements or ingredients bound to incompatible line configurations.
class ConfigurationError : public Error
{
public:
    using Error::Error;
};

/// A vertical strip that straddles one of the cut lines.
class RegionError : public Error
{
public:
    using Error::Error;
};

/// Polygon data that is degenerate, non-simple or not vertically convex.
class GeometryError : public Error
{
public:
    using Error::Error;
};

/// A query at an abscissa where the boundary chains are not defined.
class BoundaryError : public Error
{
public:
    using Error::Error;
};

/// Invalid input to the wall-crossing ladder.
class LadderError : public Error
{
public:
    using Error::Error;
};

/// Series that cannot be inverted or substituted.
class InvertibilityError : public Error
{
public:
    using Error::Error;
};

/// An operation was called on data that does not meet its precondition.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// Data failed the ingredient conditions; the message is the report.
class ValidationError : public Error
{
public:
    using Error::Error;
};

/// Malformed document text; carries a 1-based line and column.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed text whose content does not match the document schema.
class SchemaError : public Error
{
public:
    SchemaError(const std::string& field, const std::string& what)
        : Error(field + ": " + what), field_(field)
    {
    }

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class VersionError : public Error
{
public:
    using Error::Error;
};

} // namespace semitoric

#endif
