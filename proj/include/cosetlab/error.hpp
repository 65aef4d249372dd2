#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosetlab {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
    NotPrime,
    NotIrreducible,
    DegreeMismatch,
    LengthMismatch,
    SpecMismatch,
    RankDeficient,
    TooLarge,
    InternalInconsistency,
    NotReducible,
    ZeroCodeword,
    NotTrialSet,
    Parse,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define COSETLAB_ERROR_TYPE(Name)                                                         \
    class Name : public Error {                                                           \
    public:                                                                               \
        explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {}          \
    }

COSETLAB_ERROR_TYPE(NotPrime);
COSETLAB_ERROR_TYPE(NotIrreducible);
COSETLAB_ERROR_TYPE(DegreeMismatch);
COSETLAB_ERROR_TYPE(LengthMismatch);
COSETLAB_ERROR_TYPE(SpecMismatch);
COSETLAB_ERROR_TYPE(RankDeficient);
COSETLAB_ERROR_TYPE(TooLarge);
COSETLAB_ERROR_TYPE(InternalInconsistency);
COSETLAB_ERROR_TYPE(NotReducible);
COSETLAB_ERROR_TYPE(ZeroCodeword);
COSETLAB_ERROR_TYPE(NotTrialSet);

#undef COSETLAB_ERROR_TYPE

/// Malformed code file. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& msg)
        : Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace cosetlab
