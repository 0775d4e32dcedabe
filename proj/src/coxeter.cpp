#include "regiongray/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>

#include "regiongray/errors.hpp"

namespace regiongray {

std::size_t type_a_index(int i, int j) {
    return static_cast<std::size_t>((j - 1) * (j - 2) / 2 + (i - 1));
}
std::size_t type_b_minus_index(int i, int j) { return static_cast<std::size_t>((j - 1) * (j - 1) + (i - 1)); }
std::size_t type_b_plus_index(int i, int j) { return static_cast<std::size_t>((j - 1) * (j - 1) + (j - 1) + (i - 1)); }
std::size_t type_b_unit_index(int j) { return static_cast<std::size_t>(j * j - 1); }

namespace {

std::vector<long long> unit(int n, int i) {
    std::vector<long long> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

std::vector<long long> combo(int n, int i, int j, int sign) {
    auto v = unit(n, i);
    v[static_cast<std::size_t>(j - 1)] = sign;
    return v;
}

IndexSet prefix(std::size_t count) {
    IndexSet s(count);
    for (std::size_t i = 0; i < count; ++i) s[i] = i;
    return s;
}

}  // namespace

ArrangementFamily coordinate_arrangement(int n) {
    if (n < 1 || n > 64) throw InputError("coordinate family needs 1 <= n <= 64");
    std::vector<std::vector<long long>> normals;
    for (int i = 1; i <= n; ++i) normals.push_back(unit(n, i));
    SupersolvableChain chain;
    for (int j = std::min(n, 2); j <= n; ++j) chain.levels.push_back(prefix(static_cast<std::size_t>(j)));
    return {HyperplaneArrangement(n, normals), chain};
}

ArrangementFamily type_a_arrangement(int n) {
    if (n < 2 || n > 11) throw InputError("type A family needs 2 <= n <= 11");
    std::vector<std::vector<long long>> normals;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) normals.push_back(combo(n, i, j, -1));
    SupersolvableChain chain;
    for (int j = std::min(n, 3); j <= n; ++j) chain.levels.push_back(prefix(static_cast<std::size_t>(j * (j - 1) / 2)));
    return {HyperplaneArrangement(n, normals), chain};
}

ArrangementFamily type_b_arrangement(int n) {
    if (n < 1 || n > 8) throw InputError("type B family needs 1 <= n <= 8");
    std::vector<std::vector<long long>> normals;
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i < j; ++i) normals.push_back(combo(n, i, j, -1));
        for (int i = 1; i < j; ++i) normals.push_back(combo(n, i, j, 1));
        normals.push_back(unit(n, j));
    }
    SupersolvableChain chain;
    for (int j = std::min(n, 2); j <= n; ++j) chain.levels.push_back(prefix(static_cast<std::size_t>(j * j)));
    return {HyperplaneArrangement(n, normals), chain};
}

bool is_permutation(const Permutation& p) {
    std::vector<char> seen(p.size() + 1, 0);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool is_signed_permutation(const SignedPermutation& w) {
    Permutation a;
    for (int v : w) a.push_back(std::abs(v));
    return is_permutation(a);
}

FullNotation to_full(const SignedPermutation& w) {
    if (!is_signed_permutation(w)) throw InputError("not a signed permutation: " + format_permutation(w));
    FullNotation f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) f.push_back(-*it);
    f.insert(f.end(), w.begin(), w.end());
    return f;
}

SignedPermutation to_window(const FullNotation& f) {
    const std::size_t n = f.size() / 2;
    if (f.size() % 2 != 0) throw InputError("full notation has odd length");
    for (std::size_t i = 0; i < n; ++i)
        if (f[i] != -f[f.size() - 1 - i]) throw InputError("full notation is not fixed by reverse-negation");
    SignedPermutation w(f.begin() + static_cast<std::ptrdiff_t>(n), f.end());
    if (!is_signed_permutation(w)) throw InputError("not a signed permutation: " + format_permutation(w));
    return w;
}

std::string region_to_bits(const SignVector& r) {
    std::string s(static_cast<std::size_t>(r.size()), '0');
    for (int i = 0; i < r.size(); ++i)
        if (r.negative(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

SignVector bits_to_region(std::string_view bits) {
    std::string signs(bits);
    for (char& c : signs) {
        if (c == '0')
            c = '+';
        else if (c == '1')
            c = '-';
        else
            throw InputError("bit string may only contain 0 and 1");
    }
    return SignVector::parse(signs);
}

Permutation region_to_permutation(const SignVector& r, int n) {
    if (r.size() != n * (n - 1) / 2) throw InputError("sign vector does not match the type A arrangement");
    Permutation p(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int below = 0;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            bool j_smaller = i < j ? !r.negative(static_cast<int>(type_a_index(i, j)))
                                   : r.negative(static_cast<int>(type_a_index(j, i)));
            if (j_smaller) ++below;
        }
        if (p[static_cast<std::size_t>(below)] != 0) throw StructuralViolation("inconsistent type A sign vector " + r.str());
        p[static_cast<std::size_t>(below)] = i;
    }
    return p;
}

SignVector permutation_to_region(const Permutation& p) {
    if (!is_permutation(p)) throw InputError("not a permutation: " + format_permutation(p));
    const int n = static_cast<int>(p.size());
    std::vector<int> x(static_cast<std::size_t>(n + 1));
    for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(p[static_cast<std::size_t>(k)])] = k;
    std::uint64_t bits = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            if (x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(j)]) bits |= std::uint64_t{1} << type_a_index(i, j);
    return SignVector(n * (n - 1) / 2, bits);
}

SignedPermutation region_to_signed_permutation(const SignVector& r, int n) {
    if (r.size() != n * n) throw InputError("sign vector does not match the type B arrangement");
    SignedPermutation w(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int below = 0;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            int a = std::min(i, j), b = std::max(i, j);
            // |x_a| > |x_b| exactly when x_a - x_b and x_a + x_b share a sign.
            bool a_larger = r.negative(static_cast<int>(type_b_minus_index(a, b))) ==
                            r.negative(static_cast<int>(type_b_plus_index(a, b)));
            bool j_smaller = (a == i) ? a_larger : !a_larger;
            if (j_smaller) ++below;
        }
        if (w[static_cast<std::size_t>(below)] != 0) throw StructuralViolation("inconsistent type B sign vector " + r.str());
        w[static_cast<std::size_t>(below)] = r.negative(static_cast<int>(type_b_unit_index(i))) ? -i : i;
    }
    return w;
}

SignVector signed_permutation_to_region(const SignedPermutation& w) {
    if (!is_signed_permutation(w)) throw InputError("not a signed permutation: " + format_permutation(w));
    const int n = static_cast<int>(w.size());
    std::vector<int> x(static_cast<std::size_t>(n + 1));
    for (int k = 0; k < n; ++k) {
        int v = w[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(std::abs(v))] = v > 0 ? k + 1 : -(k + 1);
    }
    std::uint64_t bits = 0;
    auto set_if_negative = [&](std::size_t idx, int value) {
        if (value < 0) bits |= std::uint64_t{1} << idx;
    };
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            set_if_negative(type_b_minus_index(i, j), x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]);
            set_if_negative(type_b_plus_index(i, j), x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(j)]);
        }
        set_if_negative(type_b_unit_index(j), x[static_cast<std::size_t>(j)]);
    }
    return SignVector(n * n, bits);
}

std::string format_permutation(const std::vector<int>& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p[i]);
    }
    return out;
}

std::vector<int> parse_permutation(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
        int v = 0;
        auto token = text.substr(i, j - i);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || ptr != token.data() + token.size() || v == 0)
            throw InputError("bad permutation entry '" + std::string(token) + "'");
        out.push_back(v);
        i = j;
    }
    return out;
}

MixedRadixGray::MixedRadixGray(std::vector<int> radices) : m_(std::move(radices)) {
    const std::size_t k = m_.size();
    for (int r : m_)
        if (r < 2) throw InputError("mixed-radix digits need radix at least 2");
    a_.assign(k, 0);
    o_.assign(k, 1);
    last_dir_.assign(k, 1);
    f_.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) f_[j] = static_cast<int>(j);
}

int MixedRadixGray::next() {
    const int k = static_cast<int>(m_.size());
    int j = f_[0];
    f_[0] = 0;
    if (j == k) {
        f_[0] = k;
        return -1;
    }
    const auto u = static_cast<std::size_t>(j);
    a_[u] += o_[u];
    last_dir_[u] = o_[u];
    if (a_[u] == 0 || a_[u] == m_[u] - 1) {
        o_[u] = -o_[u];
        f_[u] = f_[u + 1];
        f_[u + 1] = j + 1;
    }
    return j;
}

BrgcGenerator::BrgcGenerator(int n) : bits_(static_cast<std::size_t>(n), '0'), gray_(std::vector<int>(static_cast<std::size_t>(n), 2)) {
    if (n < 1) throw InputError("n must be positive");
}

bool BrgcGenerator::next() {
    int d = gray_.next();
    if (d < 0) return false;
    char& c = bits_[bits_.size() - 1 - static_cast<std::size_t>(d)];
    c = c == '0' ? '1' : '0';
    return true;
}

namespace {

std::vector<int> sjt_radices(int n) {
    std::vector<int> r;
    for (int k = n; k >= 2; --k) r.push_back(k);
    return r;
}

std::vector<int> signed_radices(int n) {
    std::vector<int> r;
    for (int k = n; k >= 1; --k) r.push_back(2 * k);
    return r;
}

}  // namespace

SjtGenerator::SjtGenerator(int n) : n_(n), gray_(sjt_radices(std::max(n, 1))) {
    if (n < 1) throw InputError("n must be positive");
    for (int v = 1; v <= n; ++v) perm_.push_back(v);
    pos_.resize(static_cast<std::size_t>(n + 1));
    for (int v = 1; v <= n; ++v) pos_[static_cast<std::size_t>(v)] = v - 1;
}

bool SjtGenerator::next() {
    int d = gray_.next();
    if (d < 0) return false;
    int value = n_ - d;
    int p = pos_[static_cast<std::size_t>(value)];
    int q = gray_.last_direction(d) > 0 ? p - 1 : p + 1;
    int other = perm_[static_cast<std::size_t>(q)];
    std::swap(perm_[static_cast<std::size_t>(p)], perm_[static_cast<std::size_t>(q)]);
    pos_[static_cast<std::size_t>(value)] = q;
    pos_[static_cast<std::size_t>(other)] = p;
    return true;
}

SignedSjtGenerator::SignedSjtGenerator(int n) : n_(n), gray_(signed_radices(std::max(n, 1))) {
    if (n < 1) throw InputError("n must be positive");
    for (int v = n; v >= 1; --v) full_.push_back(-v);
    for (int v = 1; v <= n; ++v) full_.push_back(v);
    pos_.resize(static_cast<std::size_t>(2 * n + 1));
    for (std::size_t i = 0; i < full_.size(); ++i) pos_[static_cast<std::size_t>(full_[i] + n)] = i;
}

void SignedSjtGenerator::swap_at(std::size_t p, std::size_t q) {
    std::swap(full_[p], full_[q]);
    pos_[static_cast<std::size_t>(full_[p] + n_)] = p;
    pos_[static_cast<std::size_t>(full_[q] + n_)] = q;
}

bool SignedSjtGenerator::next() {
    int d = gray_.next();
    if (d < 0) return false;
    int value = n_ - d;
    std::size_t p = pos_[static_cast<std::size_t>(value + n_)];
    std::size_t q = gray_.last_direction(d) > 0 ? p - 1 : p + 1;
    const std::size_t last = full_.size() - 1;
    if (full_[q] == -value) {
        swap_at(p, q);
    } else {
        swap_at(p, q);
        swap_at(last - p, last - q);
    }
    return true;
}

SignedPermutation SignedSjtGenerator::window() const {
    return SignedPermutation(full_.begin() + n_, full_.end());
}

std::vector<std::string> brgc_generate(int n) {
    std::vector<std::string> out;
    BrgcGenerator g(n);
    do out.push_back(g.current());
    while (g.next());
    return out;
}

std::vector<Permutation> sjt_generate(int n) {
    std::vector<Permutation> out;
    SjtGenerator g(n);
    do out.push_back(g.current());
    while (g.next());
    return out;
}

std::vector<SignedPermutation> signed_sjt_generate(int n) {
    std::vector<SignedPermutation> out;
    SignedSjtGenerator g(n);
    do out.push_back(g.window());
    while (g.next());
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    Permutation p;
    for (int v = 1; v <= n; ++v) p.push_back(v);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<SignedPermutation> out;
    for (const auto& p : all_permutations(n)) {
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            SignedPermutation w = p;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1U) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <class Seq>
bool has_between_before(const Seq& s, std::size_t end, int a, int c, bool positive_only) {
    for (std::size_t k = 0; k < end; ++k) {
        int b = s[k];
        if (a < b && b < c && (!positive_only || b > 0)) return true;
    }
    return false;
}

}  // namespace

std::vector<std::pair<Permutation, Permutation>> sylvester_generators(int n) {
    if (n < 1) throw InputError("n must be positive");
    std::vector<std::pair<Permutation, Permutation>> out;
    for (const auto& p : all_permutations(n)) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            int c = p[i], a = p[i + 1];
            if (c > a && has_between_before(p, i, a, c, false)) {
                Permutation q = p;
                std::swap(q[i], q[i + 1]);
                out.emplace_back(p, q);
            }
        }
    }
    return out;
}

std::vector<std::pair<SignedPermutation, SignedPermutation>> typeb_sylvester_generators(int n) {
    if (n < 1) throw InputError("n must be positive");
    std::set<std::pair<SignedPermutation, SignedPermutation>> out;
    for (const auto& w : all_signed_permutations(n)) {
        FullNotation f = to_full(w);
        const std::size_t last = f.size() - 1;
        for (std::size_t i = 0; i < last; ++i) {
            int c = f[i], a = f[i + 1];
            if (c > a && has_between_before(f, i, a, c, true)) {
                FullNotation g = f;
                std::swap(g[i], g[i + 1]);
                if (c != -a) std::swap(g[last - i], g[last - i - 1]);
                out.emplace(w, to_window(g));
            }
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace regiongray
