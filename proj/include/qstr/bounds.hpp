#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qstr/binomial.hpp"

namespace qstr {

// Closed-form lower/upper bounds for the strength of Q_n, all over
// arbitrary-precision integers so the tables extend past n = 64.

/// Best known lower bound: exact values 3, 6, 11, 21, 40 for n = 1..5,
/// then max(2^n + n, 2^n + 4n - 12) for n <= 9 and
/// max(2^n + n, 2^n + floor(n^2/4) + 4) beyond.
inline BigInt lower_bound(int n) {
    if (n < 1) throw std::invalid_argument("lower_bound: n must be >= 1");
    static constexpr std::uint64_t exact[] = {0, 3, 6, 11, 21, 40};
    if (n <= 5) return BigInt(exact[n]);
    BigInt p = pow2(n);
    BigInt degree_floor = p + n;
    BigInt refined;
    if (n <= 9)
        refined = p + 4 * n - 12;
    else
        refined = p + (static_cast<long long>(n) * n) / 4 + 4;
    return refined > degree_floor ? refined : degree_floor;
}

/// The previously published upper bound 2^n + 2^{n-2} + 1; stated for n >= 3.
inline BigInt upper_bound_prior(int n) {
    if (n < 3) throw std::invalid_argument("upper_bound_prior: n must be >= 3");
    return pow2(n) + pow2(n - 2) + 1;
}

/// Two-step recurrence bound, unrolled from the exact base values
/// B(3) = 11, B(4) = 21, B(5) = 40:
///   B(n) = B(n-2) + 3*2^{n-2} + C(n-3, ceil((n-3)/2)) + C(n-2, ceil((n-2)/2)).
inline BigInt upper_bound_recurrence(int n) {
    if (n < 3) throw std::invalid_argument("upper_bound_recurrence: n must be >= 3");
    if (n == 3) return BigInt(11);
    int k = n % 2 == 0 ? 4 : 5;
    BigInt b = k == 4 ? 21 : 40;
    for (k += 2; k <= n; k += 2)
        b += 3 * pow2(k - 2) + binomial(k - 3, (k - 2) / 2) + binomial(k - 2, (k - 1) / 2);
    return b;
}

/// Closed-form bound 2^n + 2^{n-3} + 28, valid for n >= 14.
inline BigInt upper_bound_closed(int n) {
    if (n < 14) throw std::invalid_argument("upper_bound_closed: n must be >= 14");
    return pow2(n) + pow2(n - 3) + 28;
}

/// One table row per dimension; upper_closed only defined from n = 14 on.
struct BoundsRow {
    int n = 0;
    BigInt lower;
    BigInt upper_prior;
    BigInt upper_recurrence;
    std::optional<BigInt> upper_closed;
};

inline std::vector<BoundsRow> comparison_table(int n_min, int n_max) {
    if (n_min < 3) throw std::invalid_argument("comparison_table: n_min must be >= 3");
    if (n_max < n_min) throw std::invalid_argument("comparison_table: n_max must be >= n_min");
    std::vector<BoundsRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        BoundsRow row;
        row.n = n;
        row.lower = lower_bound(n);
        row.upper_prior = upper_bound_prior(n);
        row.upper_recurrence = upper_bound_recurrence(n);
        if (n >= 14) row.upper_closed = upper_bound_closed(n);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Central-binomial inequality report for k = 1..k_max.
/// holds_wallis: C(2k,k) < 4^k / sqrt(pi*k), certified rationally via
///   C(2k,k)^2 * k * 355 < 16^k * 113 (355/113 > pi, so no roots or floats).
/// holds_power4: C(2k,k) < 4^{k-1}, exact integer comparison; guaranteed
///   by the former for k >= 6, and reported (not asserted) for smaller k.
struct CentralBinomialCheck {
    int k = 0;
    bool holds_wallis = false;
    bool holds_power4 = false;
};

inline std::vector<CentralBinomialCheck> central_binomial_checks(int k_max) {
    if (k_max < 1) throw std::invalid_argument("central_binomial_checks: k_max must be >= 1");
    std::vector<CentralBinomialCheck> out;
    out.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        BigInt c = binomial(2 * k, k);
        CentralBinomialCheck chk;
        chk.k = k;
        chk.holds_wallis = c * c * k * 355 < pow2(4 * k) * 113;
        chk.holds_power4 = c < pow2(2 * (k - 1));
        out.push_back(chk);
    }
    return out;
}

} // namespace qstr
