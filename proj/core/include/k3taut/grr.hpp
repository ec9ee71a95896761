#pragma once

// Grothendieck-Riemann-Roch for the universal K3 family pi: X -> M.
//
// The only geometric inputs are the fibre invariants c1^2 = 0 and c2 = 24.
// Everything else follows from ch(pi_! O_X) = 1 + e^{-v} and the projection
// formula pi_*(t1^i t2^j) = a_{j-1} v^{i + 2(j-1)}, with t1 = pi^* v.

#include <vector>

#include "k3taut/rational.hpp"
#include "k3taut/series.hpp"
#include "k3taut/symfunc.hpp"

namespace k3taut {

/// A series in v = c1 of the Hodge line bundle.
using VSeries = Series;

/// a_0 .. a_{max_n} with pi_*(t2^{n+1}) = a_n v^{2n}.
struct PushforwardTable {
    std::vector<Rational> a;

    [[nodiscard]] int max_n() const { return static_cast<int>(a.size()) - 1; }
    friend bool operator==(const PushforwardTable&, const PushforwardTable&) = default;
};

/// Coefficient of v^{n-2} in ch(pi_! O_X) = 1 + e^{-v}, i.e. the value the
/// degree-n part of the Todd-dual class must push forward to.
Rational grr_target(int n);

/// Solves for a_0 .. a_{max_n} from the even-degree GRR equations.
PushforwardTable solve_pushforwards(int max_n);

/// The fibre integral. The result has order max(P.max_degree() - 1, 1).
/// Throws std::out_of_range if some monomial needs an a_n past the table.
VSeries pushforward(const SymPoly& p, const PushforwardTable& table);

/// pi_*(chE * Td^v(Omega^1)), with the Todd-dual class expanded to chE's
/// max degree.
VSeries grr_pushforward(const SymPoly& ch, const PushforwardTable& table);

struct OddCheck {
    int n = 0;
    Rational lhs;  // sum_j c(n, j) a_{j-1}
    Rational rhs;  // -1/(n-2)!
    bool ok = false;
};

/// Odd-degree GRR equation; these are not used by the solver and hold
/// automatically when the sign convention is right. n must be odd, >= 3.
OddCheck odd_consistency(int n, const PushforwardTable& table);
bool check_odd_consistency(int n, const PushforwardTable& table);

}  // namespace k3taut
