#include "k3taut/rational.hpp"

#include <cctype>
#include <ostream>

namespace k3taut {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num_text = body;
    std::string_view den_text;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_text = body.substr(0, slash);
        den_text = body.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw ParseError("malformed fraction: '" + std::string(text) + "'");
        }
    }
    if (!all_digits(num_text)) {
        throw ParseError("malformed fraction: '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_text), 10);
    BigInt den = den_text.empty() ? BigInt(1) : BigInt(std::string(den_text), 10);
    if (den == 0) {
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    // mpq_class::get_str omits "/1" for integers.
    return value_.get_str(10);
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    return Rational(mpq_class(1) / value_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    return c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return Rational(result);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) {
        return Rational(0);
    }
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return Rational(result);
}

}  // namespace k3taut
