#pragma once

#include <stdexcept>
#include <string>

namespace bsato {

// Base of all typed errors. `code()` is a stable machine-readable tag; the
// CLI maps every code to exit status 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define BSATO_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& what) : Error(#Name, what) {}  \
    }

BSATO_DEFINE_ERROR(ZeroPolynomial);
BSATO_DEFINE_ERROR(NotHomogeneous);
BSATO_DEFINE_ERROR(NoSolution);
BSATO_DEFINE_ERROR(ContextMismatch);
BSATO_DEFINE_ERROR(BadArity);
BSATO_DEFINE_ERROR(InvalidMorphism);
BSATO_DEFINE_ERROR(DegenerateJacobian);
BSATO_DEFINE_ERROR(InfiniteDimensional);
BSATO_DEFINE_ERROR(NotIsolated);
BSATO_DEFINE_ERROR(ResourceLimit);
BSATO_DEFINE_ERROR(UnknownGenerator);

#undef BSATO_DEFINE_ERROR

// Parse errors carry a 1-based column of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t column)
        : Error("ParseError", what + " (column " + std::to_string(column) + ")"),
          column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

} // namespace bsato
