#ifndef GENTYPE_FROBENIUS_HPP
#define GENTYPE_FROBENIUS_HPP

// Rational canonical form by Krylov chaining: pick a vector whose local
// minimal polynomial is the global one, split off an invariant complement to
// its cyclic subspace and recurse. The change of basis is kept throughout.

#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace gentype {

struct KrylovChain {
    std::vector<Vector> vectors;  // v, Av, ..., A^{d-1} v
    Poly minpoly;                 // monic, degree d
};

namespace detail {

inline Vector apply_poly(const Poly& h, const Matrix& a, const Vector& v) {
    Vector acc(v.size(), a.field().zero());
    for (std::size_t i = h.coeffs().size(); i-- > 0;) {
        acc = a * acc;
        const FieldElem c = a.field().embed(h.coeffs()[i]);
        for (std::size_t k = 0; k < v.size(); ++k) acc[k] = acc[k] + c * v[k];
    }
    return acc;
}

inline bool is_zero_vec(const Vector& v) {
    for (const auto& e : v) {
        if (!e.is_zero()) return false;
    }
    return true;
}

inline std::size_t valuation(Poly p, const Poly& b) {
    std::size_t e = 0;
    while (!p.is_zero()) {
        auto [q, r] = divmod(p, b);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++e;
    }
    return e;
}

}  // namespace detail

/// Krylov chain of v under A together with the local minimal polynomial of v.
inline KrylovChain krylov_chain(const Matrix& a, const Vector& v) {
    const Field& f = a.field();
    const std::size_t n = a.rows();
    struct Row {
        Vector r;
        std::size_t pivot;
        Vector comb;  // coefficients over powers of A
    };
    std::vector<Row> rows;
    KrylovChain out;
    Vector w = v;
    for (std::size_t k = 0; k <= n; ++k) {
        Vector r = w;
        Vector comb(n + 1, f.zero());
        comb[k] = f.one();
        for (const auto& row : rows) {
            if (r[row.pivot].is_zero()) continue;
            const FieldElem c = r[row.pivot];
            for (std::size_t i = 0; i < n; ++i) {
                if (!row.r[i].is_zero()) r[i] = r[i] - c * row.r[i];
            }
            for (std::size_t i = 0; i <= n; ++i) {
                if (!row.comb[i].is_zero()) comb[i] = comb[i] - c * row.comb[i];
            }
        }
        std::size_t piv = 0;
        while (piv < n && r[piv].is_zero()) ++piv;
        if (piv == n) {
            out.minpoly = Poly(f, comb);
            return out;
        }
        const FieldElem inv = r[piv].inv();
        for (auto& e : r) e = e * inv;
        for (auto& e : comb) e = e * inv;
        rows.push_back({std::move(r), piv, std::move(comb)});
        out.vectors.push_back(w);
        w = a * w;
    }
    fail(ErrorKind::Internal, "Krylov chain exceeded the dimension");
}

/// Pairwise coprime monic polynomials such that each input is a product of
/// powers of them.
inline std::vector<Poly> gcd_free_basis(const std::vector<Poly>& input) {
    std::vector<Poly> basis;
    auto add = [&basis](const Poly& p) {
        if (p.degree() < 1) return;
        Poly m = p.monic();
        for (const auto& b : basis) {
            if (b == m) return;
        }
        basis.push_back(std::move(m));
    };
    for (const auto& p : input) add(p);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
                Poly g = poly_gcd(basis[i], basis[j]);
                if (g.is_one()) continue;
                Poly a = basis[i] / g;
                Poly b = basis[j] / g;
                basis.erase(basis.begin() + static_cast<long>(j));
                basis.erase(basis.begin() + static_cast<long>(i));
                add(g);
                add(a);
                add(b);
                changed = true;
            }
        }
    }
    return basis;
}

/// A vector whose local minimal polynomial equals the minimal polynomial of A.
/// Standard basis vectors are tried in index order; if none is maximal the
/// vector is assembled from primary projections over a gcd-free basis of the
/// local minimal polynomials.
inline Vector maximal_vector(const Matrix& a) {
    const Field& f = a.field();
    const std::size_t n = a.rows();
    std::vector<Poly> mins;
    Poly lcm = Poly::constant(f.one());
    for (std::size_t j = 0; j < n; ++j) {
        Vector e(n, f.zero());
        e[j] = f.one();
        mins.push_back(krylov_chain(a, e).minpoly);
        lcm = (lcm * mins.back()) / poly_gcd(lcm, mins.back());
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (mins[j].degree() == lcm.degree()) {
            Vector e(n, f.zero());
            e[j] = f.one();
            return e;
        }
    }
    Vector u(n, f.zero());
    for (const auto& b : gcd_free_basis(mins)) {
        std::size_t best = 0, best_e = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t e = detail::valuation(mins[j], b);
            if (e > best_e) {
                best_e = e;
                best = j;
            }
        }
        if (best_e == 0) continue;
        Vector e(n, f.zero());
        e[best] = f.one();
        const Poly rest = mins[best] / pow(b, best_e);
        const Vector w = detail::apply_poly(rest, a, e);
        for (std::size_t k = 0; k < n; ++k) u[k] = u[k] + w[k];
    }
    return u;
}

struct FrobeniusForm {
    std::vector<Poly> invariant_factors;  // d_1 | d_2 | ... | d_k, all monic
    Matrix transform;                     // P with P A P^{-1} = form()
    Matrix transform_inverse;             // P^{-1}; its columns are the cyclic bases

    Matrix form() const {
        std::vector<Matrix> blocks;
        for (const auto& d : invariant_factors) blocks.push_back(companion(d));
        return block_diag(transform.field(), blocks);
    }
};

namespace detail {

// Returns invariant factors and T with T^{-1} A T block-diagonal companion.
inline std::pair<std::vector<Poly>, Matrix> frobenius_rec(const Matrix& a) {
    const Field& f = a.field();
    const std::size_t n = a.rows();
    if (n == 0) return {{}, Matrix(f, 0, 0)};
    const Vector u = maximal_vector(a);
    KrylovChain chain = krylov_chain(a, u);
    const std::size_t d = chain.vectors.size();
    if (d == n) return {{chain.minpoly}, Matrix::from_columns(f, n, chain.vectors)};

    // extend the cyclic basis with standard vectors
    std::vector<Vector> basis = chain.vectors;
    for (std::size_t j = 0; j < n && basis.size() < n; ++j) {
        Vector e(n, f.zero());
        e[j] = f.one();
        basis.push_back(e);
        if (rank(Matrix::from_columns(f, n, basis)) < basis.size()) basis.pop_back();
    }
    const Matrix qinv = inverse(Matrix::from_columns(f, n, basis));
    // functionals phi A^i, i < d, where phi reads the last cyclic coordinate
    Matrix functionals(f, d, n);
    Vector phi = qinv.row(d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n; ++j) functionals(i, j) = phi[j];
        Vector next(n, f.zero());
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!phi[k].is_zero()) next[j] = next[j] + phi[k] * a(k, j);
            }
        }
        phi = std::move(next);
    }
    const auto comp = mat_kernel(functionals);
    if (comp.size() != n - d) fail(ErrorKind::Internal, "invariant complement has the wrong dimension");
    const Matrix b = Matrix::from_columns(f, n, comp);
    const Matrix ab = a * b;
    Matrix restricted(f, n - d, n - d);
    for (std::size_t j = 0; j < n - d; ++j) {
        auto x = mat_solve(b, ab.col(j));
        if (!x) fail(ErrorKind::Internal, "complement is not invariant");
        for (std::size_t i = 0; i < n - d; ++i) restricted(i, j) = (*x)[i];
    }
    auto [factors, tu] = frobenius_rec(restricted);
    const Matrix lower = b * tu;
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < lower.cols(); ++j) cols.push_back(lower.col(j));
    for (auto& v : chain.vectors) cols.push_back(std::move(v));
    factors.push_back(std::move(chain.minpoly));
    return {std::move(factors), Matrix::from_columns(f, n, cols)};
}

}  // namespace detail

inline FrobeniusForm frobenius_form(const Matrix& a) {
    if (!a.is_square()) fail(ErrorKind::NotSquare, "frobenius_form of a non-square matrix");
    auto [factors, t] = detail::frobenius_rec(a);
    FrobeniusForm out{std::move(factors), inverse(t), t};
#ifndef NDEBUG
    if (out.transform * a * out.transform_inverse != out.form()) {
        fail(ErrorKind::Internal, "Frobenius transform does not conjugate to the companion form");
    }
    for (std::size_t i = 1; i < out.invariant_factors.size(); ++i) {
        if (!(out.invariant_factors[i] % out.invariant_factors[i - 1]).is_zero()) {
            fail(ErrorKind::Internal, "invariant factors are not a divisibility chain");
        }
    }
#endif
    return out;
}

inline std::vector<Poly> invariant_factors(const Matrix& a) { return frobenius_form(a).invariant_factors; }

inline Poly charpoly(const Matrix& a) {
    Poly p = Poly::constant(a.field().one());
    for (const auto& d : invariant_factors(a)) p = p * d;
    return p;
}

inline Poly minpoly(const Matrix& a) {
    auto fs = invariant_factors(a);
    return fs.empty() ? Poly::constant(a.field().one()) : fs.back();
}

/// Invertible P with P^{-1} A P = B, or nullopt when A and B are not similar.
inline std::optional<Matrix> similar_conjugator(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) fail(ErrorKind::CtxMismatch, "similar_conjugator over different fields");
    if (!a.is_square() || !b.is_square()) fail(ErrorKind::NotSquare, "similar_conjugator needs square matrices");
    if (a.rows() != b.rows()) fail(ErrorKind::SizeMismatch, "similar_conjugator size mismatch");
    const auto fa = frobenius_form(a);
    const auto fb = frobenius_form(b);
    if (fa.invariant_factors != fb.invariant_factors) return std::nullopt;
    return fa.transform_inverse * fb.transform;
}

inline bool are_similar(const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && invariant_factors(a) == invariant_factors(b);
}

}  // namespace gentype

#endif  // GENTYPE_FROBENIUS_HPP
