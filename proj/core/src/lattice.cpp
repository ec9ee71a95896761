#include "k3taut/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace k3taut {

GramMatrix::GramMatrix(std::vector<std::vector<BigInt>> rows) : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (auto& row : rows) {
        if (row.size() != n_) {
            throw std::invalid_argument("GramMatrix: matrix is not square");
        }
        for (auto& x : row) {
            entries_.push_back(std::move(x));
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                throw std::invalid_argument("GramMatrix: matrix is not symmetric");
            }
        }
    }
}

std::vector<std::vector<BigInt>> GramMatrix::rows() const {
    std::vector<std::vector<BigInt>> out(n_, std::vector<BigInt>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out[i][j] = (*this)(i, j);
        }
    }
    return out;
}

GramMatrix hyperbolic_plane() { return GramMatrix({{0, 1}, {1, 0}}); }

GramMatrix e8_negative() {
    // Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
    std::vector<std::vector<BigInt>> rows(8, std::vector<BigInt>(8, 0));
    const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
    for (int i = 0; i < 8; ++i) {
        rows[i][i] = -2;
    }
    for (auto [i, j] : edges) {
        rows[i][j] = 1;
        rows[j][i] = 1;
    }
    return GramMatrix(std::move(rows));
}

GramMatrix scaled_rank1(const BigInt& k) { return GramMatrix({{k}}); }

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
    const std::size_t n = a.rank() + b.rank();
    std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < a.rank(); ++i) {
        for (std::size_t j = 0; j < a.rank(); ++j) {
            rows[i][j] = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.rank(); ++i) {
        for (std::size_t j = 0; j < b.rank(); ++j) {
            rows[a.rank() + i][a.rank() + j] = b(i, j);
        }
    }
    return GramMatrix(std::move(rows));
}

GramMatrix power(const GramMatrix& a, int count) {
    GramMatrix out;
    for (int i = 0; i < count; ++i) {
        out = direct_sum(out, a);
    }
    return out;
}

GramMatrix k3_lattice() { return direct_sum(power(hyperbolic_plane(), 3), power(e8_negative(), 2)); }

GramMatrix polarized_k3_lattice(const BigInt& d) {
    return direct_sum(direct_sum(power(hyperbolic_plane(), 2), power(e8_negative(), 2)),
                      scaled_rank1(BigInt(-2 * d)));
}

GramMatrix congruent(const GramMatrix& g, const std::vector<std::vector<BigInt>>& s) {
    const std::size_t n = g.rank();
    if (s.size() != n) {
        throw std::invalid_argument("congruent: size mismatch");
    }
    std::vector<std::vector<BigInt>> gs(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                gs[i][j] += g(i, k) * s[k][j];
            }
        }
    }
    std::vector<std::vector<BigInt>> out(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                out[i][j] += s[k][i] * gs[k][j];
            }
        }
    }
    return GramMatrix(std::move(out));
}

BigInt determinant(const GramMatrix& g) {
    const std::size_t n = g.rank();
    if (n == 0) {
        return 1;
    }
    auto m = g.rows();
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

bool is_even(const GramMatrix& g) {
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (g(i, i) % 2 != 0) {
            return false;
        }
    }
    return true;
}

Signature signature(const GramMatrix& g) {
    const std::size_t n = g.rank();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Rational(g(i, j));
        }
    }
    Signature sig;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n && pivot == n; ++i) {
            if (!done[i] && !a[i][i].is_zero()) {
                pivot = i;
            }
        }
        if (pivot == n) {
            // All remaining diagonal entries vanish. Replace basis vector e_i by
            // e_i + e_j for some a_ij != 0, giving new diagonal 2 a_ij.
            std::size_t pi = n;
            std::size_t pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i) {
                for (std::size_t j = 0; j < n && !done[i]; ++j) {
                    if (j != i && !done[j] && !a[i][j].is_zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pi == n) {
                throw std::domain_error("signature: degenerate form");
            }
            for (std::size_t k = 0; k < n; ++k) {
                a[pi][k] += a[pj][k];
            }
            for (std::size_t k = 0; k < n; ++k) {
                a[k][pi] += a[k][pj];
            }
            pivot = pi;
        }
        const Rational d = a[pivot][pivot];
        (d.sign() > 0 ? sig.positive : sig.negative) += 1;
        done[pivot] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][pivot].is_zero()) {
                continue;
            }
            const Rational f = a[i][pivot] / d;
            for (std::size_t j = 0; j < n; ++j) {
                if (!done[j]) {
                    a[i][j] -= f * a[pivot][j];
                }
            }
        }
    }
    return sig;
}

}  // namespace k3taut
