#pragma once

// The generating function A(t) = sum a_n t^n and its Bernoulli-number
// characterization: for every n > 0 the coefficient of t^{2n-1} in
//
//     (2 - t)/(1 - t) * A(-t^2/(1 - t))
//
// equals 4n / B_{2n}.

#include <vector>

#include "k3taut/grr.hpp"
#include "k3taut/rational.hpp"
#include "k3taut/series.hpp"

namespace k3taut {

class GenFunction {
public:
    explicit GenFunction(const PushforwardTable& table);
    explicit GenFunction(Series a) : a_(std::move(a)) {}

    [[nodiscard]] const Series& series() const { return a_; }
    /// Number of known coefficients a_0 .. a_{size-1}.
    [[nodiscard]] std::size_t size() const { return a_.order(); }

private:
    Series a_;
};

/// (2 - t)/(1 - t) * A(-t^2/(1 - t)) modulo t^order. Needs a_j for all
/// 2j < order; throws std::invalid_argument naming the shortfall otherwise.
Series transform_series(const GenFunction& a, std::size_t order);

struct BernoulliCheck {
    int n = 0;
    Rational lhs;  // [t^{2n-1}] of the transformed series
    Rational rhs;  // 4n / B_{2n}
    bool ok = false;
};

/// Checks n = 1 .. nmax. Failures are reported in the result, never thrown.
std::vector<BernoulliCheck> verify_bernoulli_property(const GenFunction& a, int nmax);

/// Even coefficients [t^{2n}] for n = 0 .. nmax of the transformed series.
/// Informational only; they are not constrained.
std::vector<Rational> transform_even_coefficients(const GenFunction& a, int nmax);

/// Coefficient with which a_{n-1} enters the t^{2n-1} constraint,
/// (-1)^{n-1} (2n - 1).
Rational bernoulli_pivot(int n);

/// Solves a_0 .. a_{nmax} from the Bernoulli constraints n = 1 .. nmax + 1.
PushforwardTable solve_from_bernoulli(int nmax);

}  // namespace k3taut
