#pragma once

#include <utility>
#include <vector>

#include "triplane/hpoly.hpp"

namespace triplane {

struct RationalRoot {
    Rat value;
    int multiplicity;
};

// All rational roots (with multiplicities) of a polynomial that depends on
// `var` only.  Works at any degree: candidates come from single linear
// modular factors lifted p-adically, so no subset search is involved.
std::vector<RationalRoot> rational_roots(const QPoly& f, int var);

struct UnivariateFactors {
    Rat content;
    std::vector<std::pair<QPoly, int>> factors; // primitive irreducible, lc > 0
};

// Complete factorization over Q of a polynomial in the single variable `var`
// (degree <= 12: the recombination search is bounded by design).
UnivariateFactors factor_univariate(const QPoly& f, int var);

struct BinaryFormFactors {
    Rat content;
    std::vector<std::pair<HPoly, int>> factors; // irreducible binary forms
    HPoly multiply_back(const VarSet& vs) const;
};

// Factorization of a nonzero binary form (a homogeneous polynomial in at
// most two of its variables) of degree <= 12 into irreducibles over Q.
BinaryFormFactors binary_form_factor(const HPoly& f);

// Roots of an irreducible rational quadratic, expressed in Q(sqrt(disc)).
std::pair<QuadExt, QuadExt> quadratic_roots_ext(const Rat& a, const Rat& b, const Rat& c);

} // namespace triplane
