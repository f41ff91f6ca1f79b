#ifndef GENTYPE_TYPES_HPP
#define GENTYPE_TYPES_HPP

// Cycle type, Green type and generalized type of a matrix, and the
// equivalence of irreducible polynomials that generalized types are built on.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "frobenius.hpp"
#include "partition.hpp"

namespace gentype {

struct TypeTerm {
    Poly poly;  // monic irreducible; for generalized types, a class representative
    Partition partition;
};

namespace detail {

inline bool term_less(const TypeTerm& a, const TypeTerm& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    if (a.partition != b.partition) return a.partition < b.partition;
    return poly_less(a.poly, b.poly);
}

inline std::string terms_to_string(const std::vector<TypeTerm>& terms, bool brackets) {
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += " * ";
        std::string p = t.poly.to_string();
        s += brackets ? "[" + p + "]" : "(" + p + ")";
        s += "^" + t.partition.to_string();
    }
    return s.empty() ? "1" : s;
}

}  // namespace detail

/// f_1^{lambda_1} ... f_t^{lambda_t}; the f are pairwise distinct.
struct CycleType {
    std::vector<TypeTerm> terms;

    std::size_t dimension() const {
        std::size_t n = 0;
        for (const auto& t : terms) n += static_cast<std::size_t>(t.poly.degree()) * t.partition.size();
        return n;
    }
    bool is_primary() const { return terms.size() == 1; }
    std::string to_string() const { return detail::terms_to_string(terms, false); }
    friend bool operator==(const CycleType& a, const CycleType& b) {
        if (a.terms.size() != b.terms.size()) return false;
        for (std::size_t i = 0; i < a.terms.size(); ++i) {
            if (a.terms[i].poly != b.terms[i].poly || a.terms[i].partition != b.terms[i].partition) return false;
        }
        return true;
    }
};

struct GreenTerm {
    std::size_t degree;
    Partition partition;
    friend bool operator==(const GreenTerm& a, const GreenTerm& b) {
        return a.degree == b.degree && a.partition == b.partition;
    }
    friend bool operator<(const GreenTerm& a, const GreenTerm& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.partition < b.partition;
    }
};

struct GreenType {
    std::vector<GreenTerm> terms;  // sorted

    std::size_t dimension() const {
        std::size_t n = 0;
        for (const auto& t : terms) n += t.degree * t.partition.size();
        return n;
    }
    std::string to_string() const {
        std::string s;
        for (const auto& t : terms) s += (s.empty() ? "" : " * ") + std::to_string(t.degree) + "^" + t.partition.to_string();
        return s.empty() ? "1" : s;
    }
    friend bool operator==(const GreenType& a, const GreenType& b) { return a.terms == b.terms; }
};

/// Terms carry class representatives; compare with gentype_equal, never
/// representationally.
struct GeneralizedType {
    std::vector<TypeTerm> terms;

    std::size_t dimension() const {
        std::size_t n = 0;
        for (const auto& t : terms) n += static_cast<std::size_t>(t.poly.degree()) * t.partition.size();
        return n;
    }
    std::string to_string() const { return detail::terms_to_string(terms, true); }
};

/// Cycle type from invariant factors d_1 | ... | d_k: each invariant factor
/// in which f appears with exponent t contributes one part t to lambda_f.
inline CycleType cycle_type_from_invariant_factors(const std::vector<Poly>& factors,
                                                   std::uint64_t seed = kDefaultSeed) {
    std::vector<std::pair<Poly, std::vector<std::size_t>>> acc;
    for (const auto& d : factors) {
        if (d.degree() < 1) continue;
        for (const auto& fp : poly_factor(d, seed).factors) {
            auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& e) { return e.first == fp.poly; });
            if (it == acc.end()) {
                acc.emplace_back(fp.poly, std::vector<std::size_t>{fp.multiplicity});
            } else {
                it->second.push_back(fp.multiplicity);
            }
        }
    }
    CycleType ct;
    for (auto& [p, parts] : acc) ct.terms.push_back({p, Partition(parts)});
    std::sort(ct.terms.begin(), ct.terms.end(), detail::term_less);
    return ct;
}

inline CycleType cycle_type(const Matrix& x, std::uint64_t seed = kDefaultSeed) {
    if (!x.is_square()) fail(ErrorKind::NotSquare, "cycle_type of a non-square matrix");
    return cycle_type_from_invariant_factors(invariant_factors(x), seed);
}

inline GreenType green_type(const CycleType& ct) {
    GreenType g;
    for (const auto& t : ct.terms) g.terms.push_back({static_cast<std::size_t>(t.poly.degree()), t.partition});
    std::sort(g.terms.begin(), g.terms.end());
    return g;
}

/// sum_i d_i F(lambda_i)
inline std::size_t cent_dim_formula(const GreenType& t) {
    std::size_t total = 0;
    for (const auto& term : t.terms) total += term.degree * F_of_partition(term.partition);
    return total;
}

/// Block-diagonal matrix of cycle type f^lambda built from companion blocks.
inline Matrix primary_model(const Poly& f, const Partition& lambda) {
    std::vector<Matrix> blocks;
    for (auto part : lambda.parts()) blocks.push_back(companion(pow(f, part)));
    return block_diag(f.field(), blocks);
}

/// Matrix in rational canonical form with the given cycle type.
inline Matrix model_matrix(const Field& k, const std::vector<TypeTerm>& terms) {
    std::vector<Matrix> blocks;
    for (const auto& t : terms) blocks.push_back(primary_model(t.poly, t.partition));
    return block_diag(k, blocks);
}

struct EquivalenceWitness {
    Poly r;  // g(r) = 0 mod f: r(alpha) is a root of g
    Poly s;  // f(s) = 0 mod g, chosen so that s(r(alpha)) = alpha when possible
};

/// f ~ g iff deg f = deg g and g has a root in K[x]/(f).
inline std::optional<EquivalenceWitness> poly_equivalent(const Poly& f, const Poly& g,
                                                          std::uint64_t seed = kDefaultSeed) {
    if (f.field() != g.field()) fail(ErrorKind::CtxMismatch, "poly_equivalent over different fields");
    if (!f.is_monic() || !is_irreducible(f)) fail(ErrorKind::NotIrreducible, f.to_string() + " is not monic irreducible");
    if (!g.is_monic() || !is_irreducible(g)) fail(ErrorKind::NotIrreducible, g.to_string() + " is not monic irreducible");
    if (f.degree() != g.degree()) return std::nullopt;
    const Field& k = f.field();
    const Field lf = Field::extension_unchecked(k, f.coeffs());
    const auto g_roots = poly_roots_in_ext(g, lf, seed);
    if (g_roots.empty()) return std::nullopt;
    const Poly r = g_roots.front().expression;
    const Field lg = Field::extension_unchecked(k, g.coeffs());
    const auto f_roots = poly_roots_in_ext(f, lg, seed);
    if (f_roots.empty()) fail(ErrorKind::Internal, "equivalence is not symmetric for " + f.to_string() + ", " + g.to_string());
    const Poly x = Poly::x(k);
    for (const auto& cand : f_roots) {
        if (poly_compose_mod(cand.expression, r, f) == x % f) return EquivalenceWitness{r, cand.expression};
    }
    return EquivalenceWitness{r, f_roots.front().expression};
}

inline GeneralizedType generalized_type(const CycleType& ct) { return GeneralizedType{ct.terms}; }

inline GeneralizedType generalized_type(const Matrix& x, std::uint64_t seed = kDefaultSeed) {
    return generalized_type(cycle_type(x, seed));
}

struct TermMatch {
    std::size_t left;
    std::size_t right;
    EquivalenceWitness witness;  // between left.poly and right.poly
};

/// Bijection between the terms of two generalized types pairing equivalent
/// representatives with equal partitions, or nullopt if none exists. Since
/// equivalence is an equivalence relation, greedy matching inside each
/// (degree, partition) bucket is exact.
inline std::optional<std::vector<TermMatch>> match_generalized_types(const GeneralizedType& a,
                                                                      const GeneralizedType& b,
                                                                      std::uint64_t seed = kDefaultSeed) {
    if (a.terms.size() != b.terms.size()) return std::nullopt;
    std::vector<bool> used(b.terms.size(), false);
    std::vector<TermMatch> out;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const auto& ta = a.terms[i];
        bool matched = false;
        for (std::size_t j = 0; j < b.terms.size() && !matched; ++j) {
            const auto& tb = b.terms[j];
            if (used[j] || tb.poly.degree() != ta.poly.degree() || tb.partition != ta.partition) continue;
            if (auto w = poly_equivalent(ta.poly, tb.poly, seed)) {
                used[j] = true;
                out.push_back({i, j, std::move(*w)});
                matched = true;
            }
        }
        if (!matched) return std::nullopt;
    }
    return out;
}

inline bool gentype_equal(const GeneralizedType& a, const GeneralizedType& b, std::uint64_t seed = kDefaultSeed) {
    return match_generalized_types(a, b, seed).has_value();
}

}  // namespace gentype

#endif  // GENTYPE_TYPES_HPP
