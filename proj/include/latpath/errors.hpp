#ifndef LATPATH_ERRORS_HPP
#define LATPATH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace latpath {

// Base of every error thrown by the library. variant() is the short name
// the CLI prints ("ParseError", "NotBalanced", ...).
class Error : public std::runtime_error {
public:
    Error(std::string variant, const std::string& message)
        : std::runtime_error(message), variant_(std::move(variant)) {}

    const std::string& variant() const noexcept { return variant_; }

private:
    std::string variant_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t index, char offending)
        : Error("ParseError", "invalid character '" + std::string(1, offending) +
                                  "' at index " + std::to_string(index)),
          index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& message) : Error("IndexError", message) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& message) : Error("RangeError", message) {}
};

enum class DomainErrorKind { NotBalanced, DownStart, Empty, NotUnbalanced, OddLength };

inline std::string_view to_string(DomainErrorKind kind) noexcept;

// Input outside the domain of an operation. The variant name is the kind.
class DomainError : public Error {
public:
    DomainError(DomainErrorKind kind, const std::string& message)
        : Error(std::string(to_string(kind)), message), kind_(kind) {}

    DomainErrorKind kind() const noexcept { return kind_; }

private:
    DomainErrorKind kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message) : Error("ValidationError", message) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message)
        : Error("PreconditionError", message) {}
};

// Raised only when an internal invariant breaks (e.g. the inverse finds no crossing).
class InternalError : public Error {
public:
    explicit InternalError(const std::string& message) : Error("InternalError", message) {}
};

inline std::string_view to_string(DomainErrorKind kind) noexcept {
    switch (kind) {
        case DomainErrorKind::NotBalanced: return "NotBalanced";
        case DomainErrorKind::DownStart: return "DownStart";
        case DomainErrorKind::Empty: return "Empty";
        case DomainErrorKind::NotUnbalanced: return "NotUnbalanced";
        case DomainErrorKind::OddLength: return "OddLength";
    }
    return "DomainError";
}

}  // namespace latpath

#endif  // LATPATH_ERRORS_HPP
