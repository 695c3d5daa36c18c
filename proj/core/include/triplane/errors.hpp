#pragma once

#include <stdexcept>
#include <string>

namespace triplane {

// Base class for all recoverable errors raised by the library.  Anything
// deriving from Error signals bad input or an unsatisfiable precondition;
// InternalCheckError signals a violated symbolic identity and is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in the polynomial grammar.  `position` is a 0-based offset
// into the input text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A homogeneity violation: two distinct term degrees were found.
class NotHomogeneousError : public Error {
public:
    NotHomogeneousError(int deg_a, int deg_b)
        : Error("non-homogeneous input (degrees " + std::to_string(deg_a) +
                " and " + std::to_string(deg_b) + ")"),
          deg_a_(deg_a), deg_b_(deg_b) {}
    int first_degree() const { return deg_a_; }
    int second_degree() const { return deg_b_; }

private:
    int deg_a_, deg_b_;
};

// Precondition violations on domain operations (degree mismatch, singular
// substitution matrix, zero input, index collisions, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// 4a^3 + b^2 vanishes identically; reported as its own condition, never
// silently normalized.
class DegenerateBranchError : public DomainError {
public:
    DegenerateBranchError() : DomainError("degenerate datum: 4a^3 + b^2 is identically zero") {}
};

// A second, incompatible radical would be required to continue.
class NestedRadicalError : public DomainError {
public:
    explicit NestedRadicalError(const std::string& what) : DomainError(what) {}
};

// A square branch was detected but the cube extraction needs a field
// extension beyond the supported single quadratic one.
class ExtensionNeededError : public DomainError {
public:
    explicit ExtensionNeededError(const std::string& what) : DomainError(what) {}
};

// A symbolic identity that must hold by construction failed.  Exit code 1
// territory: indicates a defect in the library itself.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalCheckError(what);
}

} // namespace triplane
