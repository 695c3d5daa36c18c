#pragma once

#include <vector>

#include "triplane/polygcd.hpp"

namespace triplane {

// Fraction-free determinant (Bareiss).  Entries are consumed.
template <typename K>
MPoly<K> det_bareiss(std::vector<std::vector<MPoly<K>>> m, const VarSet& vs) {
    const std::size_t n = m.size();
    if (n == 0) return MPoly<K>::constant(vs, K(1));
    bool negate = false;
    MPoly<K> prev = MPoly<K>::constant(vs, K(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MPoly<K>::zero(vs);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = MPoly<K>::zero(vs);
        }
        prev = m[k][k];
    }
    MPoly<K> det = m[n - 1][n - 1];
    return negate ? -det : det;
}

// Sylvester resultant eliminating `var`; F's coefficients occupy the top
// rows.  The result does not involve `var`.
template <typename K>
MPoly<K> resultant(const MPoly<K>& f, const MPoly<K>& g, int var) {
    f.require_same_vars(g);
    const VarSet& vs = f.vars();
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
    int m = f.degree_in(var), n = g.degree_in(var);
    if (m <= 0 && n <= 0) {
        if (m == 0 && n == 0) throw DomainError("resultant: variable appears in neither operand");
        throw DomainError("resultant: bad variable");
    }
    if (m == 0) return f.pow(static_cast<unsigned>(n));
    if (n == 0) return g.pow(static_cast<unsigned>(m));
    auto fc = f.coeffs_in(var); // fc[i] = coeff of var^i
    auto gc = g.coeffs_in(var);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<MPoly<K>>> s(size, std::vector<MPoly<K>>(size, MPoly<K>::zero(vs)));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i)
            s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
                fc[static_cast<std::size_t>(m - i)];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i)
            s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + i)] =
                gc[static_cast<std::size_t>(n - i)];
    return det_bareiss(std::move(s), vs);
}

} // namespace triplane
