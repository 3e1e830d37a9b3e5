#ifndef LATTICELAB_ERRORS_HPP
#define LATTICELAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latticelab {

/// Base for every domain error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error
{
public:
  using Error::Error;
};

class InvalidPermutation : public Error
{
public:
  using Error::Error;
};

class DegreeMismatch : public Error
{
public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
    : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
  {}
};

class ClosureExceedsCap : public Error
{
public:
  explicit ClosureExceedsCap(std::size_t cap)
    : Error("group order exceeds cap of " + std::to_string(cap)), cap_(cap)
  {}

  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

class NotNormal : public Error
{
public:
  NotNormal() : Error("subgroup is not normal") {}
};

class NotAnAutomorphism : public Error
{
public:
  using Error::Error;
};

class NotAHomomorphism : public Error
{
public:
  using Error::Error;
};

class TooLarge : public Error
{
public:
  using Error::Error;
};

class UnknownGid : public Error
{
public:
  UnknownGid(std::size_t order, std::size_t id)
    : Error("no catalog entry for gid(" + std::to_string(order) + "," + std::to_string(id) + ")")
  {}
};

/// Group-expression parse failure; position is a byte offset into the input.
class SyntaxError : public Error
{
public:
  SyntaxError(std::size_t position, std::vector<std::string> expected)
    : Error(make_message(position, expected)), position_(position),
      expected_(std::move(expected))
  {}

  std::size_t position() const { return position_; }
  std::vector<std::string> const &expected() const { return expected_; }

private:
  static std::string make_message(std::size_t position,
                                  std::vector<std::string> const &expected)
  {
    std::string msg = "syntax error at offset " + std::to_string(position) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i)
        msg += " or ";
      msg += expected[i];
    }
    return msg;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

class CatalogError : public Error
{
public:
  enum class Kind { Parse, OrderMismatch, SubMismatch };

  CatalogError(Kind kind, std::size_t line, std::string const &detail)
    : Error(kind_name(kind) + " at line " + std::to_string(line) + ": " + detail),
      kind_(kind), line_(line)
  {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

private:
  static std::string kind_name(Kind kind)
  {
    switch (kind) {
    case Kind::Parse:
      return "parse error";
    case Kind::OrderMismatch:
      return "order mismatch";
    case Kind::SubMismatch:
      return "subgroup count mismatch";
    }
    return "catalog error";
  }

  Kind kind_;
  std::size_t line_;
};

} // namespace latticelab

#endif // LATTICELAB_ERRORS_HPP
