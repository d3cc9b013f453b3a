#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qstr {

/// A fixed-length bit string x_1 x_2 ... x_n with x_1 the leftmost, most
/// significant position. Lexicographic comparison of equal-length strings
/// therefore coincides with numeric comparison of the binary value.
///
/// Strings up to 64 bits are stored in a single machine word (the hot
/// enumeration paths); longer strings fall back to a word vector so rank
/// arithmetic keeps working at any length.
class BitString {
public:
    BitString() = default;

    /// All-zero string of the given length.
    static BitString zeros(int length) {
        check_length(length);
        BitString s;
        s.len_ = length;
        if (length > 64) s.tail_.assign(word_count_for(length), 0);
        return s;
    }

    /// String of given length whose binary value is `bits` (length <= 64).
    static BitString from_word(int length, std::uint64_t bits) {
        check_length(length);
        if (length > 64) throw std::invalid_argument("BitString::from_word: length exceeds 64");
        if (length < 64 && (bits >> length) != 0)
            throw std::invalid_argument("BitString::from_word: value does not fit in length");
        BitString s;
        s.len_ = length;
        s.head_ = bits;
        return s;
    }

    /// Parse a nonempty string of '0'/'1' characters, leftmost character = x_1.
    static BitString parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("BitString::parse: empty string");
        BitString s = zeros(static_cast<int>(text.size()));
        for (std::size_t j = 0; j < text.size(); ++j) {
            if (text[j] == '1')
                s.set_bit(static_cast<int>(j));
            else if (text[j] != '0')
                throw std::invalid_argument("BitString::parse: invalid character (expected 0/1)");
        }
        return s;
    }

    int length() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    /// Bit at position pos, 0-based from the LEFT (pos 0 is x_1).
    bool bit(int pos) const {
        if (pos < 0 || pos >= len_) throw std::out_of_range("BitString::bit: position out of range");
        int g = len_ - 1 - pos;
        return (word_at(g >> 6) >> (g & 63)) & 1u;
    }

    /// Number of 1 bits.
    int weight() const noexcept {
        if (len_ <= 64) return std::popcount(head_);
        int w = 0;
        for (std::uint64_t v : tail_) w += std::popcount(v);
        return w;
    }

    /// Binary value; only valid for length() <= 64.
    std::uint64_t word() const {
        if (len_ > 64) throw std::logic_error("BitString::word: string longer than 64 bits");
        return head_;
    }

    /// k-th 64-bit word, little-endian (word 0 holds the rightmost bits).
    std::uint64_t word_at(int k) const noexcept {
        if (len_ <= 64) return k == 0 ? head_ : 0;
        return tail_[static_cast<std::size_t>(k)];
    }

    int word_count() const noexcept { return len_ == 0 ? 0 : word_count_for(len_); }

    /// One's complement: every bit flipped, same length.
    BitString complement() const {
        BitString s = *this;
        if (len_ == 0) return s;
        if (len_ <= 64) {
            s.head_ = ~head_ & low_mask(len_);
            return s;
        }
        for (auto& v : s.tail_) v = ~v;
        int top_bits = len_ & 63;
        if (top_bits != 0) s.tail_.back() &= low_mask(top_bits);
        return s;
    }

    /// New string b x (bit prepended on the left).
    BitString with_prefix(bool b) const {
        BitString s = zeros(len_ + 1);
        for (int k = 0; k < word_count(); ++k) s.set_word(k, word_at(k));
        if (b) {
            int g = len_; // new leftmost position
            s.set_word(g >> 6, s.word_at(g >> 6) | (1ull << (g & 63)));
        }
        return s;
    }

    /// New string x b (bit appended on the right).
    BitString with_suffix(bool b) const {
        BitString s = zeros(len_ + 1);
        std::uint64_t carry = b ? 1u : 0u;
        for (int k = 0; k < s.word_count(); ++k) {
            std::uint64_t w = k < word_count() ? word_at(k) : 0;
            s.set_word(k, (w << 1) | carry);
            carry = w >> 63;
        }
        return s;
    }

    std::string str() const {
        std::string out(static_cast<std::size_t>(len_), '0');
        for (int j = 0; j < len_; ++j)
            if (bit(j)) out[static_cast<std::size_t>(j)] = '1';
        return out;
    }

    /// Length-major order; equal lengths compare lexicographically.
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
        if (a.len_ != b.len_) return a.len_ <=> b.len_;
        for (int k = a.word_count() - 1; k >= 0; --k)
            if (a.word_at(k) != b.word_at(k)) return a.word_at(k) <=> b.word_at(k);
        return std::strong_ordering::equal;
    }

    friend bool operator==(const BitString& a, const BitString& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    static void check_length(int length) {
        if (length < 0) throw std::invalid_argument("BitString: negative length");
    }
    static int word_count_for(int length) noexcept { return (length + 63) >> 6; }
    static std::uint64_t low_mask(int bits) noexcept {
        return bits >= 64 ? ~0ull : (1ull << bits) - 1;
    }
    void set_bit(int pos) {
        int g = len_ - 1 - pos;
        set_word(g >> 6, word_at(g >> 6) | (1ull << (g & 63)));
    }
    void set_word(int k, std::uint64_t v) {
        if (len_ <= 64)
            head_ = v;
        else
            tail_[static_cast<std::size_t>(k)] = v;
    }

    int len_ = 0;
    std::uint64_t head_ = 0;          // bits when len_ <= 64
    std::vector<std::uint64_t> tail_; // words when len_ > 64
};

inline int weight(const BitString& x) noexcept { return x.weight(); }

inline BitString complement(const BitString& x) { return x.complement(); }

/// Number of positions where x and y differ; lengths must match.
inline int hamming_distance(const BitString& x, const BitString& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (int k = 0; k < x.word_count(); ++k)
        d += std::popcount(x.word_at(k) ^ y.word_at(k));
    return d;
}

inline std::ostream& operator<<(std::ostream& os, const BitString& x) { return os << x.str(); }

} // namespace qstr
