#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstr/binomial.hpp"
#include "qstr/bitstring.hpp"
#include "qstr/ranking.hpp"

namespace qstr {

// The canonical bijection f maps the n-bit strings, listed as
//   (weight classes of odd weight, ascending, each in reverse-lex order;
//    then weight classes of even weight, descending, each in lex order),
// onto {1, ..., 2^n} by position. The single rule reproduces both the even-n
// and odd-n class layouts: labels 1..2^{n-1} are exactly the odd-weight
// strings, labels 2^{n-1}+1..2^n exactly the even-weight ones.

/// Word-level evaluator of the canonical label for a fixed dimension
/// n in [1, 63]. O(n) arithmetic per call, no allocation.
class LabelEvaluator {
public:
    explicit LabelEvaluator(int n) : n_(n) {
        if (n < 1 || n > 63)
            throw std::invalid_argument("LabelEvaluator: n must be in [1, 63]");
        std::uint64_t acc = 0;
        for (int i = 1; i <= n; i += 2) {
            odd_base_[static_cast<std::size_t>(i)] = acc;
            acc += binom64(n, i);
        }
        acc = 1ull << (n - 1);
        for (int i = (n % 2 == 0) ? n : n - 1; i >= 0; i -= 2) {
            even_base_[static_cast<std::size_t>(i)] = acc;
            acc += binom64(n, i);
        }
    }

    int n() const noexcept { return n_; }

    /// Label of the n-bit string with binary value x.
    std::uint64_t label(std::uint64_t x) const noexcept {
        int i = std::popcount(x);
        std::uint64_t lr = lex_rank_u64(x);
        if (i & 1)
            return odd_base_[static_cast<std::size_t>(i)] + binom64(n_, i) - lr;
        return even_base_[static_cast<std::size_t>(i)] + lr + 1;
    }

private:
    int n_;
    std::array<std::uint64_t, 65> odd_base_{};
    std::array<std::uint64_t, 65> even_base_{};
};

/// f(x) for an n-bit string x, in {1, ..., 2^n}. O(n) arithmetic at any n.
inline BigInt label_of(int n, const BitString& x) {
    if (x.length() != n)
        throw std::invalid_argument("label_of: bitstring length does not match n");
    if (n < 1) throw std::invalid_argument("label_of: n must be positive");
    if (n <= 63) return BigInt(LabelEvaluator(n).label(x.word()));
    int i = x.weight();
    if (i % 2 == 1) {
        BigInt base = 0;
        for (int j = 1; j < i; j += 2) base += binomial(n, j);
        return base + binomial(n, i) - lex_rank(x);
    }
    BigInt base = pow2(n - 1);
    for (int j = i + 2; j <= n; j += 2) base += binomial(n, j);
    return base + lex_rank(x) + 1;
}

/// Inverse of label_of: the n-bit string with label v, 1 <= v <= 2^n.
/// Locates the weight class by cumulative binomials, then unranks.
inline BitString string_of(int n, const BigInt& v) {
    if (n < 1) throw std::invalid_argument("string_of: n must be positive");
    if (v < 1 || v > pow2(n))
        throw std::invalid_argument("string_of: label out of range [1, 2^n]");
    BigInt half = pow2(n - 1);
    if (v <= half) {
        BigInt cum = 0;
        for (int i = 1; i <= n; i += 2) {
            BigInt size = binomial(n, i);
            if (v <= cum + size) {
                BigInt rev = v - cum - 1;            // reverse-lex position in class
                return lex_unrank(n, i, size - 1 - rev);
            }
            cum += size;
        }
    } else {
        BigInt cum = half;
        for (int i = (n % 2 == 0) ? n : n - 1; i >= 0; i -= 2) {
            BigInt size = binomial(n, i);
            if (v <= cum + size) return lex_unrank(n, i, v - cum - 1);
            cum += size;
        }
    }
    throw std::logic_error("string_of: unreachable");
}

/// The full sequence of all 2^n strings in label order: seq[k] is the string
/// with label k+1. Deliberately dumb construction by popcount filtering, so
/// it can serve as the brute-force oracle for label_of/string_of.
inline std::vector<BitString> enumerate_sequence(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_sequence: n must be positive");
    if (n > 24) throw std::invalid_argument("enumerate_sequence: n > 24 (memory guard)");
    std::vector<BitString> seq;
    seq.reserve(1ull << n);
    std::uint64_t top = (1ull << n) - 1;
    for (int i = 1; i <= n; i += 2)                   // odd weights ascending, reverse-lex
        for (std::uint64_t x = top;; --x) {
            if (std::popcount(x) == i) seq.push_back(BitString::from_word(n, x));
            if (x == 0) break;
        }
    for (int i = (n % 2 == 0) ? n : n - 1; i >= 0; i -= 2) // even weights descending, lex
        for (std::uint64_t x = 0; x <= top; ++x)
            if (std::popcount(x) == i) seq.push_back(BitString::from_word(n, x));
    return seq;
}

/// An explicit bijection from the 2^n vertices of Q_n (indexed by binary
/// value) to {1, ..., 2^n}.
struct Labeling {
    int n = 0;
    std::vector<std::uint64_t> forward; // forward[v] = label of vertex v
    std::string description;
};

inline Labeling canonical_labeling(int n) {
    if (n < 1 || n > 24)
        throw std::invalid_argument("canonical_labeling: n must be in [1, 24]");
    LabelEvaluator f(n);
    Labeling lab;
    lab.n = n;
    lab.description = "canonical";
    lab.forward.resize(1ull << n);
    for (std::uint64_t v = 0; v < lab.forward.size(); ++v) lab.forward[v] = f.label(v);
    return lab;
}

/// Uniform-random bijection, used as a baseline in tests.
inline Labeling random_labeling(int n, std::uint64_t seed) {
    if (n < 1 || n > 24)
        throw std::invalid_argument("random_labeling: n must be in [1, 24]");
    Labeling lab;
    lab.n = n;
    lab.description = "random";
    lab.forward.resize(1ull << n);
    std::iota(lab.forward.begin(), lab.forward.end(), std::uint64_t{1});
    std::mt19937_64 rng(seed);
    std::shuffle(lab.forward.begin(), lab.forward.end(), rng);
    return lab;
}

} // namespace qstr
