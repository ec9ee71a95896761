#pragma once

/// Exact rational arithmetic.
///
/// A Rational is always stored in canonical form: numerator and denominator
/// coprime, denominator strictly positive, zero as 0/1. Canonical form makes
/// the textual rendering unique, so two equal values always print the same.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace k3taut {

using BigInt = mpz_class;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value);
    /// Throws std::domain_error if den == 0.
    Rational(const BigInt& num, const BigInt& den);
    Rational(std::int64_t num, std::int64_t den);

    /// Accepts an optional sign, decimal digits, and an optional "/digits".
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Throws std::domain_error on zero.
    [[nodiscard]] Rational inverse() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error if rhs is zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

/// n! as an exact value.
Rational factorial(unsigned n);

/// Binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned n, unsigned k);

/// (-1)^k
inline Rational sign_power(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace k3taut
