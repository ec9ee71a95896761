#include "k3taut/grr.hpp"

#include <stdexcept>
#include <string>

namespace k3taut {

Rational grr_target(int n) {
    if (n < 2) {
        throw std::invalid_argument("grr_target: degree must be at least 2");
    }
    // 1 + e^{-v}: the constant 1 only contributes in degree n = 2.
    Rational value = sign_power(n - 2) * factorial(static_cast<unsigned>(n - 2)).inverse();
    if (n == 2) {
        value += 1;
    }
    return value;
}

// The degree-n part of Td^v is sum_j c(n, j) t1^{n-2j} t2^j, and t1^{n-2j} t2^j
// pushes forward to a_{j-1} v^{n-2}. So the v^{n-2} equation reads
//
//     sum_{j >= 1} c(n, j) a_{j-1} = grr_target(n),
//
// i.e. a_j is paired with c(n, j + 1). For even n the highest unknown is
// a_{n/2 - 1} with coefficient c(n, n/2), the pure t2^{n/2} term.
PushforwardTable solve_pushforwards(int max_n) {
    if (max_n < 0) {
        throw std::invalid_argument("solve_pushforwards: max_n must be non-negative");
    }
    const int top = 2 * max_n + 2;
    const SymPoly todd = todd_dual_sympoly(top);
    PushforwardTable table;
    table.a.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 2; n <= top; n += 2) {
        const int half = n / 2;
        Rational known;
        for (int j = 1; j < half; ++j) {
            known += todd.coeff(n - 2 * j, j) * table.a[static_cast<std::size_t>(j - 1)];
        }
        const Rational lead = todd.coeff(0, half);
        if (lead.is_zero()) {
            throw std::logic_error("solve_pushforwards: vanishing leading coefficient c(" + std::to_string(n) +
                                   ", " + std::to_string(half) + ")");
        }
        table.a.push_back((grr_target(n) - known) / lead);
    }
    return table;
}

VSeries pushforward(const SymPoly& p, const PushforwardTable& table) {
    VSeries out(static_cast<std::size_t>(std::max(p.max_degree() - 1, 1)));
    for (const auto& [m, c] : p.terms()) {
        if (m.t2 == 0) {
            continue;
        }
        const int idx = m.t2 - 1;
        if (idx > table.max_n()) {
            throw std::out_of_range("pushforward: table too short, need a_n for n = " + std::to_string(idx));
        }
        const auto k = static_cast<std::size_t>(m.t1 + 2 * idx);
        out.set(k, out[k] + c * table.a[static_cast<std::size_t>(idx)]);
    }
    return out;
}

VSeries grr_pushforward(const SymPoly& ch, const PushforwardTable& table) {
    return pushforward(ch * todd_dual_sympoly(ch.max_degree()), table);
}

OddCheck odd_consistency(int n, const PushforwardTable& table) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("odd_consistency: n must be odd and at least 3");
    }
    OddCheck check;
    check.n = n;
    check.lhs = pushforward(todd_dual_sympoly(n).homogeneous_part(n), table).coeff(static_cast<std::size_t>(n - 2));
    check.rhs = grr_target(n);
    check.ok = check.lhs == check.rhs;
    return check;
}

bool check_odd_consistency(int n, const PushforwardTable& table) { return odd_consistency(n, table).ok; }

}  // namespace k3taut
