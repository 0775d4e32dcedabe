#include "regiongray/sign_vector.hpp"

#include "regiongray/errors.hpp"

namespace regiongray {

std::uint64_t full_mask(int size) {
    return size >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
}

SignVector::SignVector(int size, std::uint64_t minus_bits) : size_(size), bits_(minus_bits) {
    if (size < 0 || size > max_size) throw InputError("sign vectors support at most 64 coordinates");
    if ((minus_bits & ~full_mask(size)) != 0) throw InputError("sign vector bits exceed its length");
}

SignVector SignVector::parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(max_size)) throw InputError("sign string longer than 64");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '-')
            bits |= std::uint64_t{1} << i;
        else if (text[i] != '+')
            throw InputError("sign string may only contain '+' and '-': " + std::string(text));
    }
    return SignVector(static_cast<int>(text.size()), bits);
}

SignVector SignVector::opposite() const { return SignVector(size_, ~bits_ & full_mask(size_)); }

std::string SignVector::str() const {
    std::string out(static_cast<std::size_t>(size_), '+');
    for (int i = 0; i < size_; ++i)
        if (negative(i)) out[static_cast<std::size_t>(i)] = '-';
    return out;
}

bool operator<(const SignVector& a, const SignVector& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    int first = std::countr_zero(diff);
    return !a.negative(first);
}

}  // namespace regiongray
