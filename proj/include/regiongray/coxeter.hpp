#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regiongray/arrangement.hpp"

namespace regiongray {

struct ArrangementFamily {
    HyperplaneArrangement arrangement;
    SupersolvableChain chain;
};

// Normal order, which fixes sign-vector coordinates:
//   coordinate: e_1, ..., e_n
//   type A:     for j = 2..n: e_i - e_j (i = 1..j-1)
//   type B:     for j = 1..n: e_i - e_j (i < j), then e_i + e_j (i < j), then e_j
// The chain levels collect the normals supported on the first j coordinates.
ArrangementFamily coordinate_arrangement(int n);
ArrangementFamily type_a_arrangement(int n);
ArrangementFamily type_b_arrangement(int n);

std::size_t type_a_index(int i, int j);
std::size_t type_b_minus_index(int i, int j);
std::size_t type_b_plus_index(int i, int j);
std::size_t type_b_unit_index(int j);

using Permutation = std::vector<int>;        // one-line notation over 1..n
using SignedPermutation = std::vector<int>;  // window x_1..x_n, negative entries are barred
using FullNotation = std::vector<int>;       // x_{-n}..x_{-1}, x_1..x_n

bool is_permutation(const Permutation& p);
bool is_signed_permutation(const SignedPermutation& w);
FullNotation to_full(const SignedPermutation& w);
SignedPermutation to_window(const FullNotation& f);

// Coordinate family: '0' for '+', '1' for '-'.
std::string region_to_bits(const SignVector& r);
SignVector bits_to_region(std::string_view bits);
// Type A: lists the coordinates by increasing value.
Permutation region_to_permutation(const SignVector& r, int n);
SignVector permutation_to_region(const Permutation& p);
// Type B: lists the coordinates by increasing absolute value, barred where negative.
SignedPermutation region_to_signed_permutation(const SignVector& r, int n);
SignVector signed_permutation_to_region(const SignedPermutation& w);

std::string format_permutation(const std::vector<int>& p);
std::vector<int> parse_permutation(std::string_view text);

// Loopless reflected mixed-radix Gray code over digits 0..k-1 with focus pointers;
// digit 0 changes fastest.
class MixedRadixGray {
public:
    explicit MixedRadixGray(std::vector<int> radices);
    // Advances one step; returns the digit that changed or -1 when the sequence is exhausted.
    int next();
    // Direction (+1 or -1) of the last change of `digit`.
    int last_direction(int digit) const { return last_dir_[static_cast<std::size_t>(digit)]; }
    const std::vector<int>& digits() const { return a_; }

private:
    std::vector<int> m_, a_, f_, o_, last_dir_;
};

class BrgcGenerator {
public:
    explicit BrgcGenerator(int n);
    const std::string& current() const { return bits_; }
    bool next();

private:
    std::string bits_;
    MixedRadixGray gray_;
};

class SjtGenerator {
public:
    explicit SjtGenerator(int n);
    const Permutation& current() const { return perm_; }
    bool next();

private:
    int n_;
    Permutation perm_;
    std::vector<int> pos_;
    MixedRadixGray gray_;
};

class SignedSjtGenerator {
public:
    explicit SignedSjtGenerator(int n);
    // Full notation; the window is its second half.
    const FullNotation& full() const { return full_; }
    SignedPermutation window() const;
    bool next();

private:
    void swap_at(std::size_t p, std::size_t q);

    int n_;
    FullNotation full_;
    std::vector<std::size_t> pos_;  // indexed by value + n
    MixedRadixGray gray_;
};

std::vector<std::string> brgc_generate(int n);
std::vector<Permutation> sjt_generate(int n);
std::vector<SignedPermutation> signed_sjt_generate(int n);

// One rewriting step _b_ca_ -> _b_ac_ (a < b < c), over all permutations.
std::vector<std::pair<Permutation, Permutation>> sylvester_generators(int n);
// The same step on full notation with b > 0, mirrored to stay symmetric.
std::vector<std::pair<SignedPermutation, SignedPermutation>> typeb_sylvester_generators(int n);

std::vector<Permutation> all_permutations(int n);
std::vector<SignedPermutation> all_signed_permutations(int n);

}  // namespace regiongray
