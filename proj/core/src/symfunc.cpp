#include "k3taut/symfunc.hpp"

#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace k3taut {

SymPoly::SymPoly(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0) {
        throw std::invalid_argument("SymPoly: negative max degree");
    }
}

SymPoly SymPoly::constant(const Rational& c, int max_degree) { return term({0, 0}, c, max_degree); }

SymPoly SymPoly::term(Monomial m, const Rational& c, int max_degree) {
    SymPoly p(max_degree);
    p.add_term(m, c);
    return p;
}

Rational SymPoly::coeff(Monomial m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(Monomial m, const Rational& c) {
    if (m.t1 < 0 || m.t2 < 0) {
        throw std::invalid_argument("SymPoly: negative exponent");
    }
    if (m.degree() > max_degree_ || c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

SymPoly SymPoly::homogeneous_part(int n) const {
    SymPoly p(max_degree_);
    for (const auto& [m, c] : terms_) {
        if (m.degree() == n) {
            p.terms_.emplace(m, c);
        }
    }
    return p;
}

SymPoly SymPoly::truncated(int max_degree) const {
    SymPoly p(max_degree);
    for (const auto& [m, c] : terms_) {
        p.add_term(m, c);
    }
    return p;
}

Rational SymPoly::evaluate(const Rational& t1, const Rational& t2) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < m.t1; ++i) {
            term *= t1;
        }
        for (int j = 0; j < m.t2; ++j) {
            term *= t2;
        }
        sum += term;
    }
    return sum;
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
    if (rhs.max_degree_ < max_degree_) {
        *this = truncated(rhs.max_degree_);
    }
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& rhs) {
    if (rhs.max_degree_ < max_degree_) {
        *this = truncated(rhs.max_degree_);
    }
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

SymPoly& SymPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly out(std::min(a.max_degree_, b.max_degree_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term({ma.t1 + mb.t1, ma.t2 + mb.t2}, ca * cb);
        }
    }
    return out;
}

SymPoly SymPoly::operator-() const {
    SymPoly p(*this);
    return p *= Rational(-1);
}

std::string SymPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << c;
        if (m.t1 > 0) {
            os << "*t1";
            if (m.t1 > 1) {
                os << "^" << m.t1;
            }
        }
        if (m.t2 > 0) {
            os << "*t2";
            if (m.t2 > 1) {
                os << "^" << m.t2;
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SymPoly& p) { return os << p.str(); }

namespace {

class NewtonReducer {
public:
    SymPoly get(int k) {
        std::lock_guard lock(mutex_);
        while (static_cast<int>(sums_.size()) <= k) {
            const int n = static_cast<int>(sums_.size());
            if (n == 0) {
                sums_.push_back(SymPoly::constant(2, 0));
            } else if (n == 1) {
                sums_.push_back(SymPoly::t1(1));
            } else {
                sums_.push_back(SymPoly::t1(n) * sums_[n - 1].truncated(n) -
                                SymPoly::t2(n) * sums_[n - 2].truncated(n));
            }
        }
        return sums_[k];
    }

private:
    std::mutex mutex_;
    std::vector<SymPoly> sums_;
};

}  // namespace

SymPoly power_sum(int k) {
    if (k < 0) {
        throw std::invalid_argument("power_sum: negative index");
    }
    static NewtonReducer reducer;
    return reducer.get(k);
}

SymPoly exp(const SymPoly& p) {
    if (!p.coeff(0, 0).is_zero()) {
        throw std::domain_error("SymPoly exp: constant term must be zero");
    }
    const int d = p.max_degree();
    SymPoly result = SymPoly::constant(1, d);
    SymPoly power = SymPoly::constant(1, d);
    // p has no constant term, so p^k lives in degree >= k.
    for (int k = 1; k <= d; ++k) {
        power = power * p;
        if (power.is_zero()) {
            break;
        }
        result += power * factorial(static_cast<unsigned>(k)).inverse();
    }
    return result;
}

SymPoly symmetric_product_expand(const Series& f, int max_degree) {
    if (f[0] != Rational(1)) {
        throw std::domain_error("symmetric_product_expand: constant term must be one");
    }
    if (static_cast<int>(f.order()) <= max_degree) {
        throw std::invalid_argument("symmetric_product_expand: series order below requested degree");
    }
    const Series l = log(f.truncated(static_cast<std::size_t>(max_degree) + 1));
    SymPoly exponent(max_degree);
    for (int k = 1; k <= max_degree; ++k) {
        const Rational& lk = l[static_cast<std::size_t>(k)];
        if (!lk.is_zero()) {
            exponent += power_sum(k).truncated(max_degree) * lk;
        }
    }
    return exp(exponent);
}

SymPoly todd_dual_sympoly(int max_degree) {
    return symmetric_product_expand(todd_dual_series(static_cast<std::size_t>(max_degree) + 1), max_degree);
}

Rational todd_coefficient(int n, int j) {
    if (n < 0 || j < 0 || 2 * j > n) {
        return Rational(0);
    }
    return todd_dual_sympoly(n).coeff(n - 2 * j, j);
}

SymPoly ch_of_roots(int sign, int max_degree, const Rational& rank_offset) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("ch_of_roots: sign must be +1 or -1");
    }
    SymPoly ch = SymPoly::constant(rank_offset, max_degree);
    Rational scale(1);
    for (int k = 0; k <= max_degree; ++k) {
        ch += power_sum(k).truncated(max_degree) * scale;
        scale *= Rational(sign) / Rational(k + 1);
    }
    return ch;
}

}  // namespace k3taut
