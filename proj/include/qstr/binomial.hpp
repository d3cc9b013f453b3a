#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qstr {

/// Arbitrary-precision signed integer used for all bound/label arithmetic.
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// C(a,b) fits in uint64_t for all a <= 66 (max entry C(66,33) ~ 7.2e18).
inline constexpr int kWordBinomMaxN = 66;

constexpr auto make_word_binom_table() {
    std::array<std::array<std::uint64_t, kWordBinomMaxN + 1>, kWordBinomMaxN + 1> c{};
    for (int a = 0; a <= kWordBinomMaxN; ++a) {
        c[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
    }
    return c;
}

inline constexpr auto kWordBinom = make_word_binom_table();

} // namespace detail

/// C(a,b) in machine words; valid for 0 <= a <= 66, returns 0 outside 0 <= b <= a.
constexpr std::uint64_t binom64(int a, int b) noexcept {
    if (b < 0 || b > a) return 0;
    return detail::kWordBinom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

/// Dense Pascal triangle of C(a,b) for 0 <= b <= a <= max_n, arbitrary precision.
/// Immutable after construction; safe for unrestricted concurrent reads.
class BinomialTable {
public:
    explicit BinomialTable(int max_n = 128) : max_n_(max_n) {
        if (max_n < 0) throw std::invalid_argument("BinomialTable: max_n must be nonnegative");
        entries_.resize(static_cast<std::size_t>(max_n + 1) * (max_n + 2) / 2);
        for (int a = 0; a <= max_n; ++a) {
            slot(a, 0) = 1;
            for (int b = 1; b <= a; ++b)
                slot(a, b) = at(a - 1, b - 1) + (b <= a - 1 ? at(a - 1, b) : BigInt(0));
        }
    }

    int max_n() const noexcept { return max_n_; }

    /// C(a,b); requires 0 <= b <= a <= max_n().
    const BigInt& at(int a, int b) const {
        return entries_[static_cast<std::size_t>(a) * (a + 1) / 2 + b];
    }

private:
    BigInt& slot(int a, int b) {
        return entries_[static_cast<std::size_t>(a) * (a + 1) / 2 + b];
    }

    int max_n_;
    std::vector<BigInt> entries_;
};

inline const BinomialTable& default_binomial_table() {
    static const BinomialTable table(128);
    return table;
}

/// C(a,b) with the usual out-of-range convention: 0 when b < 0 or b > a.
/// Table-backed for a <= 128, multiplicative (exact at every step) beyond.
inline BigInt binomial(long long a, long long b) {
    if (a < 0) throw std::invalid_argument("binomial: a must be nonnegative");
    if (b < 0 || b > a) return BigInt(0);
    if (a <= detail::kWordBinomMaxN) return BigInt(binom64(static_cast<int>(a), static_cast<int>(b)));
    if (a <= default_binomial_table().max_n())
        return default_binomial_table().at(static_cast<int>(a), static_cast<int>(b));
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long t = 1; t <= b; ++t) {
        r *= (a - b + t);
        r /= t; // exact: r is C(a-b+t, t) after this step
    }
    return r;
}

/// 2^e as a BigInt.
inline BigInt pow2(int e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << e;
}

} // namespace qstr
