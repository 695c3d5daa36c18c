#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "triplane/errors.hpp"

namespace triplane {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// cpp_rational keeps fractions in lowest terms with positive denominator,
// which is exactly the Scalar contract.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

int sign(const Int& n);
int sign(const Rat& r);

Int gcd(const Int& a, const Int& b);

// Floor of the k-th root of a non-negative integer.
Int nth_root_floor(const Int& n, unsigned k);

bool is_square(const Int& n);
bool is_square(const Rat& r);

// Exact integer/rational roots; nullopt when no exact root exists.
// For even k the non-negative root is returned.
std::optional<Int> exact_root(const Int& n, unsigned k);
std::optional<Rat> exact_root(const Rat& r, unsigned k);

inline std::optional<Rat> exact_sqrt(const Rat& r) { return exact_root(r, 2); }
inline std::optional<Rat> exact_cbrt(const Rat& r) { return exact_root(r, 3); }

// Splits n = r * m^2 with r of minimal absolute value among representations
// found by trial division (plus primality/square tests on the cofactor).
// For the coefficient sizes this library meets, r is the true squarefree part.
struct SquarefreeSplit {
    Int squarefree; // r
    Int square_root; // m
};
SquarefreeSplit squarefree_split(const Int& n);

std::string to_string(const Rat& r);

// Parses "p", "-p", "p/q".  Throws ParseError on malformed input.
Rat rat_from_string(const std::string& text);

} // namespace triplane
