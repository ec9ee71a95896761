#include "k3taut/genfunc.hpp"

#include <stdexcept>
#include <string>

namespace k3taut {

GenFunction::GenFunction(const PushforwardTable& table) : a_(table.a) {}

namespace {

// -t^2 / (1 - t) = -(t^2 + t^3 + ...)
Series substitution(std::size_t order) {
    Series s(order);
    for (std::size_t k = 2; k < order; ++k) {
        s.set(k, Rational(-1));
    }
    return s;
}

// (2 - t)/(1 - t) = 2 + t + t^2 + ...
Series prefactor(std::size_t order) {
    Series s(order);
    s.set(0, Rational(2));
    for (std::size_t k = 1; k < order; ++k) {
        s.set(k, Rational(1));
    }
    return s;
}

}  // namespace

Series transform_series(const GenFunction& a, std::size_t order) {
    const std::size_t needed = (order + 1) / 2;
    if (a.size() < needed) {
        throw std::invalid_argument("transform_series: order " + std::to_string(order) + " needs a_0 .. a_" +
                                    std::to_string(needed - 1) + ", only " + std::to_string(a.size()) +
                                    " coefficients given");
    }
    const Series outer = a.series().truncated(needed);
    // The substitution has valuation 2, so a_j only reaches t^{2j} and beyond.
    return prefactor(order) * compose(outer, substitution(order));
}

std::vector<BernoulliCheck> verify_bernoulli_property(const GenFunction& a, int nmax) {
    if (nmax < 1) {
        throw std::invalid_argument("verify_bernoulli_property: nmax must be at least 1");
    }
    const Series s = transform_series(a, static_cast<std::size_t>(2 * nmax));
    std::vector<BernoulliCheck> out;
    out.reserve(static_cast<std::size_t>(nmax));
    for (int n = 1; n <= nmax; ++n) {
        BernoulliCheck check;
        check.n = n;
        check.lhs = s[static_cast<std::size_t>(2 * n - 1)];
        check.rhs = Rational(4 * n) / bernoulli(static_cast<unsigned>(2 * n));
        check.ok = check.lhs == check.rhs;
        out.push_back(std::move(check));
    }
    return out;
}

std::vector<Rational> transform_even_coefficients(const GenFunction& a, int nmax) {
    const Series s = transform_series(a, static_cast<std::size_t>(2 * nmax + 1));
    std::vector<Rational> out;
    for (int n = 0; n <= nmax; ++n) {
        out.push_back(s[static_cast<std::size_t>(2 * n)]);
    }
    return out;
}

Rational bernoulli_pivot(int n) {
    if (n < 1) {
        throw std::invalid_argument("bernoulli_pivot: n must be at least 1");
    }
    return sign_power(n - 1) * Rational(2 * n - 1);
}

PushforwardTable solve_from_bernoulli(int nmax) {
    if (nmax < 0) {
        throw std::invalid_argument("solve_from_bernoulli: nmax must be non-negative");
    }
    std::vector<Rational> a;
    for (int n = 1; n <= nmax + 1; ++n) {
        const auto order = static_cast<std::size_t>(2 * n);
        // Evaluate the constraint with the new unknown a_{n-1} set to zero; the
        // remaining gap is pivot * a_{n-1} by linearity.
        std::vector<Rational> trial = a;
        trial.emplace_back(0);
        const Rational partial = transform_series(GenFunction(Series(trial)), order)[order - 1];
        const Rational target = Rational(4 * n) / bernoulli(static_cast<unsigned>(2 * n));
        a.push_back((target - partial) / bernoulli_pivot(n));
    }
    return PushforwardTable{std::move(a)};
}

}  // namespace k3taut
