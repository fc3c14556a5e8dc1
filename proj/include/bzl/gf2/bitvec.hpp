#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bzl::gf2 {

/// Packed vector over GF(2). Bits at positions >= size() are always zero.
class BitVec {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + kWordBits - 1) / kWordBits, 0) {}

    static BitVec zeros(std::size_t len) { return BitVec(len); }

    static BitVec unit(std::size_t len, std::size_t i) {
        BitVec v(len);
        v.set(i);
        return v;
    }

    /// Builds a vector from explicit 0/1 coordinates, e.g. {1,0,1}.
    static BitVec from_bits(std::initializer_list<int> bits) {
        BitVec v(bits.size());
        std::size_t i = 0;
        for (int b : bits) {
            if (b & 1) v.set(i);
            ++i;
        }
        return v;
    }

    std::size_t size() const noexcept { return len_; }
    const std::vector<word_type>& words() const noexcept { return words_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
    }
    bool operator[](std::size_t i) const { return get(i); }

    void set(std::size_t i, bool value = true) {
        check_index(i);
        const word_type mask = word_type{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i / kWordBits] ^= word_type{1} << (i % kWordBits);
    }

    BitVec& operator^=(const BitVec& other) {
        if (other.len_ != len_) throw std::invalid_argument("BitVec: length mismatch in xor");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    BitVec& operator+=(const BitVec& other) { return *this ^= other; }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator+(BitVec a, const BitVec& b) { return a ^= b; }

    friend bool operator==(const BitVec& a, const BitVec& b) = default;

    bool is_zero() const noexcept {
        for (word_type w : words_)
            if (w != 0) return false;
        return true;
    }

    std::size_t popcount() const noexcept {
        std::size_t c = 0;
        for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Index of the lowest set coordinate, or size() when zero.
    std::size_t lowest() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return len_;
    }

    /// Dot product over GF(2).
    bool dot(const BitVec& other) const {
        if (other.len_ != len_) throw std::invalid_argument("BitVec: length mismatch in dot");
        word_type acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1;
    }

    /// Concatenation: coordinates of *this followed by those of tail.
    BitVec concat(const BitVec& tail) const {
        BitVec out(len_ + tail.len_);
        for (std::size_t i = lowest(); i < len_; i = next_set(i + 1)) out.set(i);
        for (std::size_t i = tail.lowest(); i < tail.len_; i = tail.next_set(i + 1)) out.set(len_ + i);
        return out;
    }

    /// Coordinates [from, from+count).
    BitVec slice(std::size_t from, std::size_t count) const {
        if (from + count > len_) throw std::out_of_range("BitVec: slice out of range");
        BitVec out(count);
        for (std::size_t i = next_set(from); i < from + count; i = next_set(i + 1)) out.set(i - from);
        return out;
    }

    /// First set index >= from, or size() if none.
    std::size_t next_set(std::size_t from) const noexcept {
        if (from >= len_) return len_;
        std::size_t w = from / kWordBits;
        word_type cur = words_[w] & (~word_type{0} << (from % kWordBits));
        while (true) {
            if (cur != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w == words_.size()) return len_;
            cur = words_[w];
        }
    }

    /// Indices of set coordinates in increasing order.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = lowest(); i < len_; i = next_set(i + 1)) out.push_back(i);
        return out;
    }

    /// Hex rendering with bit 0 as the least significant bit; ceil(len/4) digits.
    std::string to_hex() const {
        const std::size_t digits = (len_ + 3) / 4;
        std::string out(digits, '0');
        for (std::size_t d = 0; d < digits; ++d) {
            unsigned nib = 0;
            for (std::size_t b = 0; b < 4; ++b) {
                const std::size_t i = d * 4 + b;
                if (i < len_ && get(i)) nib |= 1U << b;
            }
            out[digits - 1 - d] = "0123456789abcdef"[nib];
        }
        return out;
    }

    static BitVec from_hex(std::string_view hex, std::size_t len) {
        if (hex.size() != (len + 3) / 4) throw std::invalid_argument("BitVec: hex width does not match length");
        BitVec v(len);
        for (std::size_t d = 0; d < hex.size(); ++d) {
            const char c = hex[hex.size() - 1 - d];
            unsigned nib = 0;
            if (c >= '0' && c <= '9')
                nib = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                nib = static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                nib = static_cast<unsigned>(c - 'A' + 10);
            else
                throw std::invalid_argument("BitVec: bad hex digit");
            for (std::size_t b = 0; b < 4; ++b) {
                if (!((nib >> b) & 1U)) continue;
                const std::size_t i = d * 4 + b;
                if (i >= len) throw std::invalid_argument("BitVec: hex sets a bit beyond length");
                v.set(i);
            }
        }
        return v;
    }

    /// "101" style rendering, coordinate 0 first.
    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitVec: index out of range");
    }

    std::size_t len_ = 0;
    std::vector<word_type> words_;
};

}  // namespace bzl::gf2
