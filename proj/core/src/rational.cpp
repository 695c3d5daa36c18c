#include "triplane/rational.hpp"

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace triplane {

int sign(const Int& n) { return n.sign(); }
int sign(const Rat& r) { return r.sign(); }

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int nth_root_floor(const Int& n, unsigned k) {
    if (n < 0) throw DomainError("nth_root_floor: negative radicand");
    if (n == 0 || n == 1 || k == 1) return n;
    // Newton iteration on x |-> ((k-1)x + n/x^(k-1)) / k, seeded from bit length.
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    Int x = Int(1) << (bits / k + 1);
    while (true) {
        Int xk1 = boost::multiprecision::pow(x, k - 1);
        Int y = ((k - 1) * x + n / xk1) / k;
        if (y >= x) break;
        x = y;
    }
    while (boost::multiprecision::pow(x, k) > n) --x;
    while (boost::multiprecision::pow(x + 1, k) <= n) ++x;
    return x;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = nth_root_floor(n, 2);
    return r * r == n;
}

bool is_square(const Rat& r) {
    return r >= 0 && is_square(num(r)) && is_square(den(r));
}

std::optional<Int> exact_root(const Int& n, unsigned k) {
    if (n < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = exact_root(Int(-n), k);
        if (!r) return std::nullopt;
        return Int(-*r);
    }
    Int r = nth_root_floor(n, k);
    if (boost::multiprecision::pow(r, k) == n) return r;
    return std::nullopt;
}

std::optional<Rat> exact_root(const Rat& r, unsigned k) {
    auto n = exact_root(num(r), k);
    if (!n) return std::nullopt;
    auto d = exact_root(den(r), k);
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

SquarefreeSplit squarefree_split(const Int& n) {
    if (n == 0) return {Int(0), Int(1)};
    Int rest = boost::multiprecision::abs(n);
    Int root = 1, free = (n < 0) ? Int(-1) : Int(1);
    for (Int p = 2; p * p <= rest && p < 100000; p = (p == 2 ? Int(3) : p + 2)) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        for (unsigned i = 0; i + 1 < e; i += 2) root *= p;
        if (e % 2 == 1) free *= p;
    }
    // rest is now 1, a prime, a prime square, or a large cofactor we leave alone.
    if (rest == 1) return {free, root};
    if (is_square(rest)) return {free, root * nth_root_floor(rest, 2)};
    if (boost::multiprecision::miller_rabin_test(rest, 32)) return {free * rest, root};
    return {free * rest, root};
}

std::string to_string(const Rat& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

Rat rat_from_string(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator", slash + 1);
        return Rat(n, d);
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + text + "'", 0);
    }
}

} // namespace triplane
