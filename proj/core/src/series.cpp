#include "k3taut/series.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace k3taut {

Series::Series(std::size_t order) : coeffs_(order) {
    if (order == 0) {
        throw std::invalid_argument("Series: order must be at least 1");
    }
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("Series: order must be at least 1");
    }
}

Series::Series(std::initializer_list<Rational> coeffs) : Series(std::vector<Rational>(coeffs)) {}

Series Series::constant(const Rational& c, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::monomial(const Rational& c, std::size_t k, std::size_t order) {
    Series s(order);
    if (k < order) {
        s.coeffs_[k] = c;
    }
    return s;
}

Rational Series::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

void Series::set(std::size_t k, Rational value) {
    if (k >= coeffs_.size()) {
        throw std::out_of_range("Series::set: index past truncation order");
    }
    coeffs_[k] = std::move(value);
}

std::size_t Series::valuation() const {
    const auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
    return static_cast<std::size_t>(it - coeffs_.begin());
}

Series Series::truncated(std::size_t order) const {
    Series s(order);
    const std::size_t n = std::min(order, coeffs_.size());
    std::copy_n(coeffs_.begin(), n, s.coeffs_.begin());
    return s;
}

Series Series::rescaled(const Rational& scale) const {
    Series s(*this);
    Rational power(1);
    for (auto& c : s.coeffs_) {
        c *= power;
        power *= scale;
    }
    return s;
}

Series Series::derivative() const {
    Series d(std::max<std::size_t>(order() - 1, 1));
    for (std::size_t k = 1; k < order(); ++k) {
        d.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<std::int64_t>(k));
    }
    return d;
}

Series& Series::operator+=(const Series& rhs) {
    coeffs_.resize(std::min(order(), rhs.order()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    coeffs_.resize(std::min(order(), rhs.order()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

Series& Series::operator*=(const Series& rhs) {
    const std::size_t n = std::min(order(), rhs.order());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!rhs.coeffs_[j].is_zero()) {
                out[i + j] += coeffs_[i] * rhs.coeffs_[j];
            }
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

Series& Series::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

Series& Series::operator/=(const Series& rhs) {
    if (rhs.coeffs_[0].is_zero()) {
        throw std::domain_error("Series division: divisor has zero constant term");
    }
    const std::size_t n = std::min(order(), rhs.order());
    const Rational lead_inv = rhs.coeffs_[0].inverse();
    std::vector<Rational> q(n);
    // Long division: q_k = (a_k - sum_{i<k} q_i b_{k-i}) / b_0.
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = coeffs_[k];
        for (std::size_t i = 0; i < k; ++i) {
            if (!rhs.coeffs_[k - i].is_zero()) {
                acc -= q[i] * rhs.coeffs_[k - i];
            }
        }
        q[k] = acc * lead_inv;
    }
    coeffs_ = std::move(q);
    return *this;
}

Series Series::operator-() const {
    Series s(*this);
    for (auto& c : s.coeffs_) {
        c = -c;
    }
    return s;
}

std::string Series::str(char var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        Rational shown = c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                shown = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) {
                shown = -c;
            }
        }
        first = false;
        if (k == 0) {
            os << shown;
            continue;
        }
        if (shown != Rational(1)) {
            os << shown << "*";
        }
        os << var;
        if (k > 1) {
            os << "^" << k;
        }
    }
    if (first) {
        os << "0";
    }
    os << " + O(" << var << "^" << coeffs_.size() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

Series exp(const Series& a) {
    if (!a[0].is_zero()) {
        throw std::domain_error("Series exp: constant term must be zero");
    }
    const std::size_t n = a.order();
    std::vector<Rational> f(n);
    f[0] = 1;
    // f' = a' f  =>  k f_k = sum_{i=1}^{k} i a_i f_{k-i}
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (!a[i].is_zero()) {
                acc += Rational(static_cast<std::int64_t>(i)) * a[i] * f[k - i];
            }
        }
        f[k] = acc / Rational(static_cast<std::int64_t>(k));
    }
    return Series(std::move(f));
}

Series log(const Series& a) {
    if (a[0] != Rational(1)) {
        throw std::domain_error("Series log: constant term must be one");
    }
    const std::size_t n = a.order();
    std::vector<Rational> g(n);
    // a' = g' a  =>  k g_k = k a_k - sum_{i=1}^{k-1} i g_i a_{k-i}
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = Rational(static_cast<std::int64_t>(k)) * a[k];
        for (std::size_t i = 1; i < k; ++i) {
            if (!a[k - i].is_zero()) {
                acc -= Rational(static_cast<std::int64_t>(i)) * g[i] * a[k - i];
            }
        }
        g[k] = acc / Rational(static_cast<std::int64_t>(k));
    }
    return Series(std::move(g));
}

Series compose(const Series& outer, const Series& inner) {
    if (!inner[0].is_zero()) {
        throw std::domain_error("Series compose: inner series must have zero constant term");
    }
    const std::size_t w = inner.valuation();
    std::size_t n = inner.order();
    if (w < inner.order()) {
        n = std::min(n, w * outer.order());
    }
    const Series x = inner.truncated(n);
    // Horner evaluation; terms of outer beyond degree n-1 cannot contribute.
    const std::size_t top = std::min(outer.order(), n);
    Series result = Series::constant(outer[top - 1], n);
    for (std::size_t k = top - 1; k-- > 0;) {
        result *= x;
        result.set(0, result[0] + outer[k]);
    }
    return result;
}

Series exp_series(const Rational& scale, std::size_t order) {
    std::vector<Rational> c(order);
    Rational term(1);
    for (std::size_t k = 0; k < order; ++k) {
        c[k] = term;
        term *= scale / Rational(static_cast<std::int64_t>(k + 1));
    }
    return Series(std::move(c));
}

Series todd_dual_series(std::size_t order) {
    // (e^x - 1)/x = sum x^k / (k+1)!, then invert.
    std::vector<Rational> denom(order);
    for (std::size_t k = 0; k < order; ++k) {
        denom[k] = factorial(static_cast<unsigned>(k + 1)).inverse();
    }
    return Series::constant(1, order) / Series(std::move(denom));
}

namespace {

class BernoulliCache {
public:
    Rational get(unsigned n) {
        std::lock_guard lock(mutex_);
        if (n >= values_.size()) {
            extend(std::max<std::size_t>(n + 1, 2 * values_.size()));
        }
        return values_[n];
    }

private:
    void extend(std::size_t count) {
        const Series q = todd_dual_series(count);
        values_.resize(count);
        for (std::size_t k = 0; k < count; ++k) {
            values_[k] = q[k] * factorial(static_cast<unsigned>(k));
        }
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

}  // namespace

Rational bernoulli(unsigned n) {
    static BernoulliCache cache;
    return cache.get(n);
}

}  // namespace k3taut
