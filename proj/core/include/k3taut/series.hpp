#pragma once

// Truncated univariate power series over Rational, and the Bernoulli numbers.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "k3taut/rational.hpp"

namespace k3taut {

/// A power series known modulo x^order. Binary operations between series of
/// different orders truncate to the smaller order.
class Series {
public:
    /// The zero series of the given order (order >= 1).
    explicit Series(std::size_t order);
    /// Takes coefficients of x^0 .. x^{order-1}; order = coeffs.size() >= 1.
    explicit Series(std::vector<Rational> coeffs);
    Series(std::initializer_list<Rational> coeffs);

    static Series constant(const Rational& c, std::size_t order);
    /// c * x^k, zero if k >= order.
    static Series monomial(const Rational& c, std::size_t k, std::size_t order);
    /// The series x.
    static Series variable(std::size_t order) { return monomial(1, 1, order); }

    [[nodiscard]] std::size_t order() const { return coeffs_.size(); }
    [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    /// Coefficient of x^k; zero past the truncation order.
    [[nodiscard]] Rational coeff(std::size_t k) const;
    void set(std::size_t k, Rational value);
    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }

    /// Index of the first nonzero coefficient, or order() for the zero series.
    [[nodiscard]] std::size_t valuation() const;
    [[nodiscard]] bool is_zero() const { return valuation() == order(); }

    [[nodiscard]] Series truncated(std::size_t order) const;
    /// Coefficient-wise map x -> scale * x.
    [[nodiscard]] Series rescaled(const Rational& scale) const;
    /// Formal derivative; the result has order max(order() - 1, 1).
    [[nodiscard]] Series derivative() const;

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);
    Series& operator*=(const Rational& scalar);
    /// Throws std::domain_error when rhs has zero constant term.
    Series& operator/=(const Series& rhs);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Series& b) { return a *= b; }
    friend Series operator*(Series a, const Rational& s) { return a *= s; }
    friend Series operator*(const Rational& s, Series a) { return a *= s; }
    friend Series operator/(Series a, const Series& b) { return a /= b; }
    Series operator-() const;

    friend bool operator==(const Series& a, const Series& b) = default;

    /// "1 - 1/2*x + 1/12*x^2 + O(x^3)" style rendering.
    [[nodiscard]] std::string str(char var = 'x') const;
    friend std::ostream& operator<<(std::ostream& os, const Series& s);

private:
    std::vector<Rational> coeffs_;
};

/// exp(a); requires a(0) == 0.
Series exp(const Series& a);
/// log(a); requires a(0) == 1.
Series log(const Series& a);

/// outer(inner(x)); requires inner(0) == 0.
///
/// The result is exact modulo x^N with N = min(inner.order(), w * outer.order())
/// where w >= 1 is the valuation of inner. For the usual case of an inner
/// series of valuation one and matching orders this is just outer's order.
Series compose(const Series& outer, const Series& inner);

/// e^{scale * x} to the given order.
Series exp_series(const Rational& scale, std::size_t order);

/// x / (e^x - 1) = sum B_n x^n / n!, the Todd-dual generating function.
Series todd_dual_series(std::size_t order);

/// The n-th Bernoulli number with B_1 = -1/2. Values are memoized in a
/// process-wide table that is safe to use from multiple threads.
Rational bernoulli(unsigned n);

}  // namespace k3taut
