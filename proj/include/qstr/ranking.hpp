#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "qstr/binomial.hpp"
#include "qstr/bitstring.hpp"

namespace qstr {

/// Which ordering of a fixed-weight class a Succ/Prec count refers to:
/// lex is ascending dictionary order, revlex the same list reversed.
enum class Order { lex, revlex };

/// Rank of `bits` within the fixed-weight strings of its length, lex order,
/// via the combinatorial number system. Word fast path (length <= 64); the
/// length itself is not needed because only positions right of each 1 count.
constexpr std::uint64_t lex_rank_u64(std::uint64_t bits) noexcept {
    std::uint64_t r = 0;
    int k = std::popcount(bits);
    std::uint64_t rem = bits;
    while (rem != 0) {
        int p = 63 - std::countl_zero(rem); // leftmost remaining 1
        r += binom64(p, k);
        --k;
        rem ^= 1ull << p;
    }
    return r;
}

/// Inverse of lex_rank_u64 for n <= 64; requires r < C(n, weight).
constexpr std::uint64_t lex_unrank_u64(int n, int weight, std::uint64_t r) noexcept {
    std::uint64_t x = 0;
    int k = weight;
    for (int p = n - 1; p >= 0 && k > 0; --p) {
        std::uint64_t c = binom64(p, k);
        if (r >= c) {
            x |= 1ull << p;
            r -= c;
            --k;
        }
    }
    return x;
}

/// Number of same-length, same-weight strings strictly smaller than x in lex
/// order. O(length) arithmetic; never enumerates.
inline BigInt lex_rank(const BitString& x) {
    if (x.length() <= 64) return BigInt(lex_rank_u64(x.word()));
    BigInt r = 0;
    int k = x.weight();
    for (int pos = 0; pos < x.length() && k > 0; ++pos) {
        if (x.bit(pos)) {
            r += binomial(x.length() - 1 - pos, k);
            --k;
        }
    }
    return r;
}

/// The weight-`weight` n-bit string of lex rank r; requires 0 <= r < C(n, weight).
inline BitString lex_unrank(int n, int weight, const BigInt& r) {
    if (n < 0 || weight < 0 || weight > n)
        throw std::invalid_argument("lex_unrank: weight out of range");
    if (r < 0 || r >= binomial(n, weight))
        throw std::invalid_argument("lex_unrank: rank out of range");
    if (n <= 64)
        return BitString::from_word(n, lex_unrank_u64(n, weight, static_cast<std::uint64_t>(r)));
    BigInt rem = r;
    int k = weight;
    std::vector<int> ones;
    for (int pos = 0; pos < n && k > 0; ++pos) {
        BigInt c = binomial(n - 1 - pos, k);
        if (rem >= c) {
            ones.push_back(pos);
            rem -= c;
            --k;
        }
    }
    std::string text(static_cast<std::size_t>(n), '0');
    for (int pos : ones) text[static_cast<std::size_t>(pos)] = '1';
    return BitString::parse(text);
}

/// Rank within the reverse-lex listing of the weight class: C(n,i)-1-lex_rank.
inline BigInt revlex_rank(const BitString& x) {
    return binomial(x.length(), x.weight()) - 1 - lex_rank(x);
}

/// |Succ(x, class)|: strings after x in its weight class under the ordering.
inline BigInt succ_count(const BitString& x, Order order) {
    BigInt size = binomial(x.length(), x.weight());
    return order == Order::revlex ? size - 1 - revlex_rank(x) : size - 1 - lex_rank(x);
}

/// |Prec(x, class)|: strings before x in its weight class under the ordering.
inline BigInt prec_count(const BitString& x, Order order) {
    return order == Order::lex ? lex_rank(x) : revlex_rank(x);
}

} // namespace qstr
