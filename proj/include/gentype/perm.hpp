#ifndef GENTYPE_PERM_HPP
#define GENTYPE_PERM_HPP

// Permutations, cycle layers and the centralizer-equality decisions in the
// symmetric and alternating groups, with exhaustive oracles for small n.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"

namespace gentype {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), std::size_t{0}); }

    /// images[i] is the image of i + 1, 1-based.
    static Permutation from_images(const std::vector<std::size_t>& images) {
        Permutation p(images.size());
        std::vector<bool> seen(images.size(), false);
        for (std::size_t i = 0; i < images.size(); ++i) {
            const std::size_t v = images[i];
            if (v < 1 || v > images.size() || seen[v - 1]) fail(ErrorKind::ParseError, "image array is not a bijection");
            seen[v - 1] = true;
            p.img_[i] = v - 1;
        }
        return p;
    }

    /// Cycle notation such as "(1 2)(3 4)"; commas are accepted as
    /// separators. n = 0 means the largest point mentioned.
    static Permutation parse_cycles(const std::string& text, std::size_t n = 0) {
        std::vector<std::vector<std::size_t>> cycles;
        std::size_t pos = 0, top = 0;
        auto skip = [&] {
            while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
        };
        skip();
        while (pos < text.size()) {
            if (text[pos] != '(') fail(ErrorKind::ParseError, "expected '(' in cycle notation: " + text);
            ++pos;
            std::vector<std::size_t> cyc;
            for (;;) {
                skip();
                if (pos >= text.size()) fail(ErrorKind::ParseError, "unterminated cycle: " + text);
                if (text[pos] == ')') {
                    ++pos;
                    break;
                }
                if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    fail(ErrorKind::ParseError, "unexpected character in cycle notation: " + text);
                }
                std::size_t v = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
                    if (v > 1000000) fail(ErrorKind::ParseError, "point out of range: " + text);
                    ++pos;
                }
                if (v == 0) fail(ErrorKind::ParseError, "points are numbered from 1: " + text);
                cyc.push_back(v);
                top = std::max(top, v);
            }
            cycles.push_back(std::move(cyc));
            skip();
        }
        if (n == 0) n = top;
        if (top > n) fail(ErrorKind::ParseError, "point " + std::to_string(top) + " exceeds n = " + std::to_string(n));
        Permutation p(n);
        std::vector<bool> used(n, false);
        for (const auto& cyc : cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const std::size_t a = cyc[i] - 1;
                if (used[a]) fail(ErrorKind::ParseError, "cycles are not disjoint: " + text);
                used[a] = true;
                p.img_[a] = cyc[(i + 1) % cyc.size()] - 1;
            }
        }
        return p;
    }

    std::size_t n() const noexcept { return img_.size(); }
    /// 0-based image of the 0-based point i.
    std::size_t operator[](std::size_t i) const { return img_[i]; }
    std::vector<std::size_t> images() const {
        std::vector<std::size_t> out(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
        return out;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (img_[i] != i) return false;
        }
        return true;
    }

    /// Cycles with 0-based points, each starting at its smallest point,
    /// including fixed points as 1-cycles.
    std::vector<std::vector<std::size_t>> cycles() const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::vector<std::size_t> c;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                c.push_back(j);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    bool is_even() const {
        std::size_t transpositions = 0;
        for (const auto& c : cycles()) transpositions += c.size() - 1;
        return transpositions % 2 == 0;
    }

    Permutation pow(long long k) const {
        Permutation out(img_.size());
        for (const auto& c : cycles()) {
            const long long len = static_cast<long long>(c.size());
            const long long step = ((k % len) + len) % len;
            for (std::size_t i = 0; i < c.size(); ++i) {
                out.img_[c[i]] = c[static_cast<std::size_t>((static_cast<long long>(i) + step) % len)];
            }
        }
        return out;
    }

    Permutation inverse() const {
        Permutation out(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = i;
        return out;
    }

    /// (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.n() != b.n()) fail(ErrorKind::SizeMismatch, "composing permutations of different degree");
        Permutation out(a.n());
        for (std::size_t i = 0; i < a.n(); ++i) out.img_[i] = a.img_[b.img_[i]];
        return out;
    }

    bool commutes_with(const Permutation& o) const {
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (img_[o.img_[i]] != o.img_[img_[i]]) return false;
        }
        return true;
    }

    /// Cycle notation with 1-based points; fixed points omitted, "()" for the identity.
    std::string to_string() const {
        std::string s;
        for (const auto& c : cycles()) {
            if (c.size() < 2) continue;
            s += "(";
            for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i] + 1);
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    std::vector<std::size_t> img_;
};

struct CycleLayer {
    Permutation v;                     // product of the i-cycles
    std::vector<std::size_t> support;  // 1-based, sorted
    std::size_t cycle_count = 0;
};

using CycleLayers = std::map<std::size_t, CycleLayer>;

inline CycleLayers cycle_layers(const Permutation& g) {
    CycleLayers out;
    for (const auto& c : g.cycles()) {
        auto [it, fresh] = out.try_emplace(c.size(), CycleLayer{Permutation(g.n()), {}, 0});
        (void)fresh;
        CycleLayer& layer = it->second;
        ++layer.cycle_count;
        std::vector<std::size_t> imgs = layer.v.images();
        for (std::size_t i = 0; i < c.size(); ++i) {
            imgs[c[i]] = c[(i + 1) % c.size()] + 1;
            layer.support.push_back(c[i] + 1);
        }
        layer.v = Permutation::from_images(imgs);
    }
    for (auto& [len, layer] : out) std::sort(layer.support.begin(), layer.support.end());
    return out;
}

namespace detail {

inline const CycleLayer* find_layer(const CycleLayers& l, std::size_t i) {
    auto it = l.find(i);
    return it == l.end() ? nullptr : &it->second;
}

inline std::optional<std::size_t> local_exponent(const CycleLayers& lg, const CycleLayers& lh, std::size_t i) {
    const CycleLayer* a = find_layer(lg, i);
    const CycleLayer* b = find_layer(lh, i);
    if (!a && !b) return 1;
    if (!a || !b || a->support != b->support) return std::nullopt;
    for (std::size_t k = 1; k <= i; ++k) {
        if (std::gcd(k, i) != 1) continue;
        if (a->v.pow(static_cast<long long>(k)) == b->v) return k;
    }
    return std::nullopt;
}

inline void check_same_degree(const Permutation& g, const Permutation& h) {
    if (g.n() != h.n()) {
        fail(ErrorKind::SizeMismatch, "permutations of degree " + std::to_string(g.n()) + " and " + std::to_string(h.n()));
    }
}

}  // namespace detail

/// Smallest k in [1, i] coprime to i with w_i = v_i^k, where v_i and w_i are
/// the i-layers of g and h.
inline std::optional<std::size_t> locally_equivalent(const Permutation& g, const Permutation& h, std::size_t i) {
    detail::check_same_degree(g, h);
    if (i == 0) fail(ErrorKind::InvalidArgument, "cycle length must be positive");
    return detail::local_exponent(cycle_layers(g), cycle_layers(h), i);
}

/// Cycle lengths at which local equivalence fails.
inline std::vector<std::size_t> variation_set(const Permutation& g, const Permutation& h) {
    detail::check_same_degree(g, h);
    const auto lg = cycle_layers(g), lh = cycle_layers(h);
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= g.n(); ++i) {
        if (!detail::local_exponent(lg, lh, i)) out.push_back(i);
    }
    return out;
}

inline bool perm_equivalent(const Permutation& g, const Permutation& h) { return variation_set(g, h).empty(); }

enum class VariationKind { Equivalent, SCase1, SCase2, ACase1, ACase2, ACase3, ACase4, NotEqual };

inline std::string to_string(VariationKind k) {
    switch (k) {
        case VariationKind::Equivalent: return "equivalent";
        case VariationKind::SCase1: return "S-case-1";
        case VariationKind::SCase2: return "S-case-2";
        case VariationKind::ACase1: return "A-case-1";
        case VariationKind::ACase2: return "A-case-2";
        case VariationKind::ACase3: return "A-case-3";
        case VariationKind::ACase4: return "A-case-4";
        case VariationKind::NotEqual: return "not-equal";
    }
    return "not-equal";
}

struct VariationReport {
    bool equal = false;
    VariationKind kind = VariationKind::NotEqual;
    std::vector<std::size_t> variation;  // cycle lengths where local equivalence fails
};

namespace detail {

inline std::vector<std::size_t> layer_support(const CycleLayers& l, std::size_t i) {
    const CycleLayer* p = find_layer(l, i);
    return p ? p->support : std::vector<std::size_t>{};
}

inline std::size_t layer_cycles(const CycleLayers& l, std::size_t i) {
    const CycleLayer* p = find_layer(l, i);
    return p ? p->cycle_count : 0;
}

inline std::vector<std::size_t> merged(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

// On the common support U of layers {1, k}, one side has a single k-cycle and
// |U| - k fixed points while the other has the k-cycle's points fixed and
// (when |U| > k) a single k-cycle on the remaining points.
inline bool one_sided_swap(const CycleLayers& a, const CycleLayers& b, std::size_t k, std::size_t u_size,
                           bool complementary) {
    const auto ua = merged(layer_support(a, 1), layer_support(a, k));
    const auto ub = merged(layer_support(b, 1), layer_support(b, k));
    if (ua != ub || ua.size() != u_size) return false;
    if (layer_cycles(a, k) != 1) return false;
    const auto ka = layer_support(a, k);
    if (!complementary) return layer_cycles(b, k) == 0;
    if (layer_cycles(b, k) != 1) return false;
    const auto kb = layer_support(b, k);
    std::vector<std::size_t> both;
    std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(both));
    return both.empty();
}

inline bool variation_is(const std::vector<std::size_t>& v, std::initializer_list<std::size_t> want) {
    return v == std::vector<std::size_t>(want);
}

// Outside the layers in `skip`, all cycles (fixed points included) have odd
// and pairwise distinct lengths.
inline bool odd_distinct_elsewhere(const CycleLayers& l, const std::vector<std::size_t>& skip) {
    for (const auto& [len, layer] : l) {
        if (std::find(skip.begin(), skip.end(), len) != skip.end()) continue;
        if (len % 2 == 0 || layer.cycle_count > 1) return false;
    }
    return true;
}

inline bool two_cycle_exponents_differ(const Permutation& g, const Permutation& h, std::size_t m) {
    auto cycles_of_length = [m](const Permutation& p) {
        std::vector<std::vector<std::size_t>> out;
        for (auto& c : p.cycles()) {
            if (c.size() == m) out.push_back(std::move(c));
        }
        return out;
    };
    const auto cg = cycles_of_length(g), ch = cycles_of_length(h);
    if (cg.size() != 2 || ch.size() != 2) return false;
    // exponent e with h = g^e on the support of the given g-cycle
    auto exponent_on = [&](const std::vector<std::size_t>& c) -> std::optional<std::size_t> {
        for (std::size_t e = 1; e < m; ++e) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) ok = h[c[i]] == c[(i + e) % m];
            if (ok) return e;
        }
        return std::nullopt;
    };
    const auto e0 = exponent_on(cg[0]), e1 = exponent_on(cg[1]);
    return e0 && e1 && *e0 % m != *e1 % m;
}

}  // namespace detail

inline VariationReport sn_cent_equal(const Permutation& g, const Permutation& h) {
    detail::check_same_degree(g, h);
    VariationReport rep;
    rep.variation = variation_set(g, h);
    if (rep.variation.empty()) {
        rep.equal = true;
        rep.kind = VariationKind::Equivalent;
        return rep;
    }
    if (!detail::variation_is(rep.variation, {1, 2})) return rep;
    const auto lg = cycle_layers(g), lh = cycle_layers(h);
    if (detail::one_sided_swap(lg, lh, 2, 2, false) || detail::one_sided_swap(lh, lg, 2, 2, false)) {
        rep.equal = true;
        rep.kind = VariationKind::SCase1;
    } else if (detail::one_sided_swap(lg, lh, 2, 4, true)) {
        rep.equal = true;
        rep.kind = VariationKind::SCase2;
    }
    return rep;
}

inline VariationReport an_cent_equal(const Permutation& g, const Permutation& h) {
    detail::check_same_degree(g, h);
    if (!g.is_even()) fail(ErrorKind::OddPermutation, g.to_string() + " is odd");
    if (!h.is_even()) fail(ErrorKind::OddPermutation, h.to_string() + " is odd");
    VariationReport rep;
    rep.variation = variation_set(g, h);
    if (rep.variation.empty()) {
        rep.equal = true;
        rep.kind = VariationKind::Equivalent;
        return rep;
    }
    const auto lg = cycle_layers(g), lh = cycle_layers(h);
    const auto& v = rep.variation;
    auto elsewhere = [&] {
        return detail::odd_distinct_elsewhere(lg, v) && detail::odd_distinct_elsewhere(lh, v);
    };
    auto accept = [&rep](VariationKind k) {
        rep.equal = true;
        rep.kind = k;
        return rep;
    };
    if (detail::variation_is(v, {1, 2}) && detail::one_sided_swap(lg, lh, 2, 4, true)) {
        return accept(VariationKind::ACase1);
    }
    if (detail::variation_is(v, {2}) && detail::layer_cycles(lg, 2) == 2 && detail::layer_cycles(lh, 2) == 2 &&
        elsewhere()) {
        return accept(VariationKind::ACase2);
    }
    if (detail::variation_is(v, {1, 3}) &&
        (detail::one_sided_swap(lg, lh, 3, 3, false) || detail::one_sided_swap(lh, lg, 3, 3, false)) && elsewhere()) {
        return accept(VariationKind::ACase3);
    }
    if (v.size() == 1 && v[0] % 2 == 1 && v[0] > 1 && detail::two_cycle_exponents_differ(g, h, v[0]) && elsewhere()) {
        return accept(VariationKind::ACase4);
    }
    return rep;
}

enum class PermGroup { Symmetric, Alternating };

inline constexpr std::size_t kMaxBruteForceDegree = 9;

/// Every element of S_n (or A_n), in lexicographic order of image arrays.
inline std::vector<Permutation> enumerate_group(std::size_t n, PermGroup group) {
    if (n > kMaxBruteForceDegree) fail(ErrorKind::TooLarge, "group enumeration is limited to n <= 9");
    std::vector<std::size_t> imgs(n);
    std::iota(imgs.begin(), imgs.end(), std::size_t{1});
    std::vector<Permutation> out;
    do {
        Permutation p = Permutation::from_images(imgs);
        if (group == PermGroup::Symmetric || p.is_even()) out.push_back(std::move(p));
    } while (std::next_permutation(imgs.begin(), imgs.end()));
    return out;
}

/// Elements of `elements` commuting with g, in the order given.
inline std::vector<Permutation> centralizer_in(const Permutation& g, const std::vector<Permutation>& elements) {
    std::vector<Permutation> out;
    for (const auto& x : elements) {
        if (g.commutes_with(x)) out.push_back(x);
    }
    return out;
}

inline std::vector<Permutation> perm_centralizer_bruteforce(const Permutation& g, PermGroup group) {
    if (group == PermGroup::Alternating && !g.is_even()) fail(ErrorKind::OddPermutation, g.to_string() + " is odd");
    return centralizer_in(g, enumerate_group(g.n(), group));
}

/// prod over cycle lengths i of i^{m_i} m_i!
inline std::size_t sn_centralizer_order(const Permutation& g) {
    std::map<std::size_t, std::size_t> mult;
    for (const auto& c : g.cycles()) ++mult[c.size()];
    std::size_t order = 1;
    for (const auto& [len, m] : mult) {
        for (std::size_t j = 1; j <= m; ++j) order *= len * j;
    }
    return order;
}

}  // namespace gentype

#endif  // GENTYPE_PERM_HPP
