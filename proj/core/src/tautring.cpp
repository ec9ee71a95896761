#include "k3taut/tautring.hpp"

#include <stdexcept>
#include <string>

namespace k3taut {

namespace {

void require_same(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument("tautological classes with different truncations (" + std::to_string(a) +
                                    " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

TautClass operator+(const TautClass& a, const TautClass& b) {
    require_same(a.truncation(), b.truncation());
    return TautClass(a.s_ + b.s_);
}

TautClass operator-(const TautClass& a, const TautClass& b) {
    require_same(a.truncation(), b.truncation());
    return TautClass(a.s_ - b.s_);
}

TautClass operator*(const TautClass& a, const TautClass& b) {
    require_same(a.truncation(), b.truncation());
    return TautClass(a.s_ * b.s_);
}

KClass KClass::trivial(const Rational& rank, std::size_t truncation) {
    return KClass(TautClass(Series::constant(rank, truncation)));
}

KClass KClass::line(int m, std::size_t truncation) { return KClass(TautClass(exp_series(m, truncation))); }

KClass KClass::dual() const { return KClass(TautClass(ch_.series().rescaled(-1))); }

KClass operator+(const KClass& a, const KClass& b) { return KClass(a.ch_ + b.ch_); }

KClass operator-(const KClass& a, const KClass& b) { return KClass(a.ch_ - b.ch_); }

KClass tensor(const KClass& a, const KClass& b) { return KClass(a.ch_ * b.ch_); }

TautClass ch_to_total_chern(const KClass& a) {
    const Series& ch = a.ch().series();
    Series exponent(ch.order());
    for (std::size_t k = 1; k < ch.order(); ++k) {
        const auto km1 = static_cast<unsigned>(k - 1);
        exponent.set(k, sign_power(static_cast<int>(km1)) * factorial(km1) * ch[k]);
    }
    return TautClass(exp(exponent));
}

KClass de_rham_h2(std::size_t truncation) { return KClass::trivial(22, truncation); }

KClass hodge_f1(std::size_t truncation) { return de_rham_h2(truncation) - KClass::line(-1, truncation); }

KClass tangent_moduli(std::size_t truncation) {
    const KClass one = KClass::trivial(1, truncation);
    return tensor(de_rham_h2(truncation) - one, KClass::line(-1, truncation)) - one -
           KClass::line(-2, truncation);
}

KClass r1_pushforward(const SymPoly& ch, const PushforwardTable& table, std::size_t truncation) {
    // Degree T+1 on the total space lands in v^{T-1} after pushforward.
    const SymPoly lifted = ch.truncated(static_cast<int>(truncation) + 1);
    const VSeries pushed = grr_pushforward(lifted, table);
    return KClass(TautClass(-pushed.truncated(truncation)));
}

KClass r1_tangent(const PushforwardTable& table, std::size_t truncation) {
    return r1_pushforward(ch_of_roots(-1, static_cast<int>(truncation) + 1), table, truncation);
}

KClass r1_cotangent(const PushforwardTable& table, std::size_t truncation) {
    return r1_pushforward(ch_of_roots(+1, static_cast<int>(truncation) + 1), table, truncation);
}

DualityReport duality_report(const PushforwardTable& table, std::size_t truncation) {
    const KClass theta = r1_tangent(table, truncation);
    const KClass omega = r1_cotangent(table, truncation);
    DualityReport report{theta.rank(), omega.rank(), theta.dual().ch(),
                         tensor(omega, KClass::line(1, truncation)).ch(), false};
    report.ok = report.lhs == report.rhs;
    return report;
}

bool duality_check(const PushforwardTable& table, std::size_t truncation) {
    return duality_report(table, truncation).ok;
}

NilpotenceReport nilpotence_report(std::size_t truncation) {
    if (truncation == 0) {
        throw std::invalid_argument("nilpotence_report: truncation must be at least 1");
    }
    const TautClass v = TautClass::v_power(1, truncation);
    TautClass power = TautClass::one(truncation);
    TautClass below = power;
    for (std::size_t k = 0; k < truncation; ++k) {
        below = power;
        power = power * v;
    }
    return NilpotenceReport{power.is_zero(), !below.is_zero()};
}

}  // namespace k3taut
