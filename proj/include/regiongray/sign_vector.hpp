#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace regiongray {

// Sign vector over at most 64 hyperplanes; bit i set means coordinate i is '-'.
class SignVector {
public:
    static constexpr int max_size = 64;

    SignVector() = default;
    explicit SignVector(int size, std::uint64_t minus_bits = 0);

    // Parses a string over {'+','-'}.
    static SignVector parse(std::string_view text);

    int size() const { return size_; }
    std::uint64_t bits() const { return bits_; }
    bool negative(int i) const { return (bits_ >> i) & 1U; }
    int sign(int i) const { return negative(i) ? -1 : 1; }
    int minus_count() const { return std::popcount(bits_); }

    SignVector flipped(int i) const { return SignVector(size_, bits_ ^ (std::uint64_t{1} << i)); }
    SignVector opposite() const;
    SignVector masked(std::uint64_t mask) const { return SignVector(size_, bits_ & mask); }

    std::string str() const;

    friend bool operator==(const SignVector& a, const SignVector& b) {
        return a.size_ == b.size_ && a.bits_ == b.bits_;
    }
    // Lexicographic from coordinate 0 with '+' before '-'.
    friend bool operator<(const SignVector& a, const SignVector& b);

private:
    int size_ = 0;
    std::uint64_t bits_ = 0;
};

inline int hamming(const SignVector& a, const SignVector& b) { return std::popcount(a.bits() ^ b.bits()); }

std::uint64_t full_mask(int size);

}  // namespace regiongray

template <>
struct std::hash<regiongray::SignVector> {
    std::size_t operator()(const regiongray::SignVector& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits() * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(s.size()));
    }
};
