#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partrev
{

/*! \brief Base class of every error raised by the library. */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Raised when operands disagree on bit widths, or a width is out of range. */
class width_error : public error
{
public:
  using error::error;
};

/*! \brief Raised on malformed text input; carries the source name and 1-based line. */
class parse_error : public error
{
public:
  parse_error( std::string source, std::size_t line, std::string const& message )
      : error( source + ":" + std::to_string( line ) + ": " + message ),
        source_( std::move( source ) ),
        line_( line )
  {
  }

  std::string const& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

private:
  std::string source_;
  std::size_t line_;
};

class unknown_gate_error : public error
{
public:
  using error::error;
};

class duplicate_gate_error : public error
{
public:
  using error::error;
};

} // namespace partrev
