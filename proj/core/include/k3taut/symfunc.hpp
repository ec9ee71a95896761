#pragma once

// Symmetric functions of two Chern roots g1, g2, written as polynomials in
// the elementary classes t1 = g1 + g2 (degree 1) and t2 = g1 * g2 (degree 2).

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "k3taut/rational.hpp"
#include "k3taut/series.hpp"

namespace k3taut {

/// Exponent pair (i, j) of the monomial t1^i t2^j.
struct Monomial {
    int t1 = 0;
    int t2 = 0;

    [[nodiscard]] constexpr int degree() const { return t1 + 2 * t2; }
    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in t1, t2 truncated at total degree max_degree. Zero
/// coefficients are never stored.
class SymPoly {
public:
    explicit SymPoly(int max_degree);

    static SymPoly constant(const Rational& c, int max_degree);
    static SymPoly t1(int max_degree) { return term({1, 0}, 1, max_degree); }
    static SymPoly t2(int max_degree) { return term({0, 1}, 1, max_degree); }
    static SymPoly term(Monomial m, const Rational& c, int max_degree);

    [[nodiscard]] int max_degree() const { return max_degree_; }
    [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
    [[nodiscard]] Rational coeff(Monomial m) const;
    [[nodiscard]] Rational coeff(int i, int j) const { return coeff(Monomial{i, j}); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// Adds c * m; silently drops monomials above max_degree.
    void add_term(Monomial m, const Rational& c);

    /// The part of total degree exactly n.
    [[nodiscard]] SymPoly homogeneous_part(int n) const;
    [[nodiscard]] SymPoly truncated(int max_degree) const;
    /// Evaluate at numeric values of t1 and t2.
    [[nodiscard]] Rational evaluate(const Rational& t1, const Rational& t2) const;

    SymPoly& operator+=(const SymPoly& rhs);
    SymPoly& operator-=(const SymPoly& rhs);
    SymPoly& operator*=(const Rational& scalar);

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }
    friend SymPoly operator*(const Rational& s, SymPoly a) { return a *= s; }
    SymPoly operator-() const;

    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    [[nodiscard]] std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const SymPoly& p);

private:
    int max_degree_;
    std::map<Monomial, Rational> terms_;
};

/// g1^k + g2^k in terms of t1, t2, via p_k = t1 p_{k-1} - t2 p_{k-2}.
/// Cached per process; safe for concurrent use.
SymPoly power_sum(int k);

/// exp(P) for P without constant term, truncated at P's max degree.
SymPoly exp(const SymPoly& p);

/// f(g1) * f(g2) for f with constant term 1, computed as
/// exp(sum_k l_k p_k) where log f = sum_k l_k x^k.
SymPoly symmetric_product_expand(const Series& f, int max_degree);

/// Q(g1) Q(g2) with Q(x) = x / (e^x - 1). The coefficient of
/// t1^{n-2j} t2^j is the expansion coefficient c(n, j).
SymPoly todd_dual_sympoly(int max_degree);

/// c(n, j), the coefficient of t1^{n-2j} t2^j in the Todd-dual class.
Rational todd_coefficient(int n, int j);

/// e^{sign g1} + e^{sign g2} + rank_offset. sign = -1 gives the Chern
/// character of the dual bundle (the tangent sheaf when g are cotangent roots).
SymPoly ch_of_roots(int sign, int max_degree, const Rational& rank_offset = Rational(0));

}  // namespace k3taut
