#pragma once

// The tautological ring Q[v]/(v^T) of the moduli space, T = 18 by default,
// and K-theory classes on it recorded by their Chern character.

#include <cstddef>

#include "k3taut/grr.hpp"
#include "k3taut/rational.hpp"
#include "k3taut/series.hpp"

namespace k3taut {

inline constexpr std::size_t kDefaultTruncation = 18;

/// An element of Q[v]/(v^T).
class TautClass {
public:
    explicit TautClass(std::size_t truncation = kDefaultTruncation) : s_(truncation) {}
    explicit TautClass(Series s) : s_(std::move(s)) {}

    static TautClass one(std::size_t truncation = kDefaultTruncation) {
        return TautClass(Series::constant(1, truncation));
    }
    /// v^k, zero when k >= truncation.
    static TautClass v_power(std::size_t k, std::size_t truncation = kDefaultTruncation) {
        return TautClass(Series::monomial(1, k, truncation));
    }

    [[nodiscard]] std::size_t truncation() const { return s_.order(); }
    [[nodiscard]] const Series& series() const { return s_; }
    [[nodiscard]] Rational coeff(std::size_t k) const { return s_.coeff(k); }
    [[nodiscard]] bool is_zero() const { return s_.is_zero(); }

    friend TautClass operator+(const TautClass& a, const TautClass& b);
    friend TautClass operator-(const TautClass& a, const TautClass& b);
    friend TautClass operator*(const TautClass& a, const TautClass& b);
    friend bool operator==(const TautClass&, const TautClass&) = default;

private:
    Series s_;
};

/// A virtual sheaf, given by its Chern character; the rank is the degree-0 part.
class KClass {
public:
    explicit KClass(TautClass ch) : ch_(std::move(ch)) {}

    /// Rank r with trivial Chern classes.
    static KClass trivial(const Rational& rank, std::size_t truncation = kDefaultTruncation);
    /// The line bundle V^m, ch = e^{m v}.
    static KClass line(int m, std::size_t truncation = kDefaultTruncation);

    [[nodiscard]] Rational rank() const { return ch_.coeff(0); }
    [[nodiscard]] const TautClass& ch() const { return ch_; }
    [[nodiscard]] std::size_t truncation() const { return ch_.truncation(); }

    /// ch_k -> (-1)^k ch_k.
    [[nodiscard]] KClass dual() const;

    // These throw std::invalid_argument on mismatched truncations.
    friend KClass operator+(const KClass& a, const KClass& b);
    friend KClass operator-(const KClass& a, const KClass& b);
    friend KClass tensor(const KClass& a, const KClass& b);
    friend bool operator==(const KClass&, const KClass&) = default;

private:
    TautClass ch_;
};

/// c(a) = exp(sum_{k>=1} (-1)^{k-1} (k-1)! ch_k).
TautClass ch_to_total_chern(const KClass& a);

/// H^2_dR of the fibres: rank 22, flat, so its Chern character is trivial.
KClass de_rham_h2(std::size_t truncation = kDefaultTruncation);

/// F^1 = H^2_dR - V^{-1}, since H^2_dR / F^1 is dual to F^2 = V.
KClass hodge_f1(std::size_t truncation = kDefaultTruncation);

/// [Theta_M] = (H^2_dR - 1) (x) V^{-1} - 1 - V^{-2}.
KClass tangent_moduli(std::size_t truncation = kDefaultTruncation);

/// R^1 pi_* of a bundle on X with Chern character ch on the fibres.
/// Assumes R^0 and R^2 vanish, so pi_! = -R^1 in K-theory.
KClass r1_pushforward(const SymPoly& ch, const PushforwardTable& table,
                      std::size_t truncation = kDefaultTruncation);

/// R^1 pi_* Theta_{X/M} and R^1 pi_* Omega^1_{X/M}.
KClass r1_tangent(const PushforwardTable& table, std::size_t truncation = kDefaultTruncation);
KClass r1_cotangent(const PushforwardTable& table, std::size_t truncation = kDefaultTruncation);

struct DualityReport {
    Rational rank_tangent;    // rank R^1 pi_* Theta
    Rational rank_cotangent;  // rank R^1 pi_* Omega^1
    TautClass lhs;            // ch((R^1 pi_* Theta)^v)
    TautClass rhs;            // ch(R^1 pi_* Omega^1 (x) V)
    bool ok = false;
};

/// Global duality (R^1 pi_* Theta)^v = R^1 pi_* Omega^1 (x) V, both sides
/// from the GRR engine.
DualityReport duality_report(const PushforwardTable& table, std::size_t truncation = kDefaultTruncation);
bool duality_check(const PushforwardTable& table, std::size_t truncation = kDefaultTruncation);

struct NilpotenceReport {
    bool v_T_zero = false;
    bool v_Tminus1_nonzero = false;
};

/// v^T = 0 and v^{T-1} != 0 in Q[v]/(v^T), computed by repeated multiplication.
NilpotenceReport nilpotence_report(std::size_t truncation);

}  // namespace k3taut
