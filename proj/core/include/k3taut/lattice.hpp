#pragma once

// Integral quadratic lattices given by Gram matrices: the hyperbolic plane U,
// the (negative definite) E8 lattice, and the K3 lattices built from them.

#include <cstddef>
#include <string>
#include <vector>

#include "k3taut/rational.hpp"

namespace k3taut {

/// Symmetric integer matrix. Construction rejects non-square or asymmetric input.
class GramMatrix {
public:
    GramMatrix() = default;
    explicit GramMatrix(std::vector<std::vector<BigInt>> rows);

    [[nodiscard]] std::size_t rank() const { return n_; }
    [[nodiscard]] const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    [[nodiscard]] std::vector<std::vector<BigInt>> rows() const;

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> entries_;
};

struct Signature {
    int positive = 0;
    int negative = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// [[0, 1], [1, 0]]
GramMatrix hyperbolic_plane();
/// Minus the Cartan matrix of E8: even, unimodular, negative definite.
GramMatrix e8_negative();
/// The rank-one lattice <k>.
GramMatrix scaled_rank1(const BigInt& k);

/// Orthogonal direct sum (block diagonal).
GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);
/// a ⊥ a ⊥ ... (count copies).
GramMatrix power(const GramMatrix& a, int count);

/// U^3 ⊥ E8(-1)^2, the K3 lattice.
GramMatrix k3_lattice();
/// U^2 ⊥ E8(-1)^2 ⊥ <-2d>, the primitive cohomology of a degree-2d K3.
GramMatrix polarized_k3_lattice(const BigInt& d);

/// S^T g S for a square integer matrix S of matching size.
GramMatrix congruent(const GramMatrix& g, const std::vector<std::vector<BigInt>>& s);

/// Fraction-free (Bareiss) elimination.
BigInt determinant(const GramMatrix& g);
bool is_even(const GramMatrix& g);

/// Inertia by exact symmetric congruence reduction over Q. Throws
/// std::domain_error for degenerate forms.
Signature signature(const GramMatrix& g);

}  // namespace k3taut
