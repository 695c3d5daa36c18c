#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triplane/errors.hpp"

namespace triplane::linsys {

// A plane linear system |d; m_1, ..., m_n|.  Multiplicities keep their
// positions so that repeated Cremona steps act on stable indices; use
// canonical() for the sorted, zero-free display form.
class LinearSystem {
public:
    LinearSystem(int degree, std::vector<int> mults) : d_(degree), m_(std::move(mults)) {}

    int degree() const { return d_; }
    const std::vector<int>& mults() const { return m_; }
    int mult(std::size_t i) const { return i < m_.size() ? m_[i] : 0; }
    bool has_negative_mult() const {
        for (int m : m_)
            if (m < 0) return true;
        return false;
    }

    LinearSystem canonical() const;
    std::string str() const; // |d; m1, ..., mn| with exponent notation

    friend bool operator==(const LinearSystem& a, const LinearSystem& b) {
        LinearSystem ca = a.canonical(), cb = b.canonical();
        return ca.d_ == cb.d_ && ca.m_ == cb.m_;
    }

private:
    int d_;
    std::vector<int> m_;
};

// Parses "d; m1 m2 ..." (multiplicities space- or comma-separated; also
// accepts the exponent shorthand m^k).
LinearSystem parse_system(const std::string& text);

struct NumericalInvariants {
    int virtual_dim; // d(d+3)/2 - sum m(m+1)/2
    int genus;       // (d-1)(d-2)/2 - sum m(m-1)/2
    int self_int;    // d^2 - sum m^2
    int k_dot_c;     // -3d + sum m
};

NumericalInvariants invariants(const LinearSystem& s);

// Degree d-3, multiplicities m_i - 1 clipped at 0.
LinearSystem adjoint(const LinearSystem& s);

// Quadratic Cremona transformation based at points i, j, k (indices may point
// past the end: virtual multiplicity 0).  Preserves all four invariants and
// is an involution on positional multiplicity vectors.
LinearSystem cremona_step(const LinearSystem& s, std::size_t i, std::size_t j, std::size_t k);

enum class StepKind { cremona, split_line, split_conic, drop_negative };

struct ReductionStep {
    StepKind kind;
    std::vector<std::size_t> indices;
    LinearSystem result;
    std::string describe() const;
};

struct NormalizeResult {
    LinearSystem normal_form;
    std::vector<ReductionStep> trace;
    bool has_flagged_negative; // negative multiplicities signal fixed components
};

// Noether-style reduction: repeat the Cremona step on the three largest
// multiplicities while m1+m2+m3 > d and d > 0.
NormalizeResult normalize(const LinearSystem& s);

struct SplitResult {
    // Lines through pairs with m_i + m_j > d and conics through five points
    // with sum > 2d, with the number of times each split off.
    std::vector<ReductionStep> fixed;
    LinearSystem residual;
};

SplitResult split_fixed_components(const LinearSystem& s);

struct EmptinessCertificate {
    bool empty;
    std::vector<ReductionStep> chain;
    std::string reason; // "degree negative", "virtual dimension negative", or "no emptiness proof found"
};

// One-sided: proves emptiness via Cremona reduction, fixed-component
// splitting and negative virtual dimension; absence of a certificate is
// "not proven empty", never "non-empty".
EmptinessCertificate is_empty(const LinearSystem& s);

// Branch-degree bound (2*gamma + 4) * d for covers composed with a pencil.
int pencil_branch_bound(int gamma, int d);

} // namespace triplane::linsys
