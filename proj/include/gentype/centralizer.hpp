#ifndef GENTYPE_CENTRALIZER_HPP
#define GENTYPE_CENTRALIZER_HPP

// Centralizer algebras: bases, primary decomposition, Jordan-Chevalley
// decomposition, polynomial witnesses between matrices of equal generalized
// type, and the conjugacy decision with an explicit certificate.

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "frobenius.hpp"
#include "matrix.hpp"
#include "types.hpp"

namespace gentype {

/// Row-major flattening of a matrix into a vector of length rows*cols.
inline Vector vectorize(const Matrix& m) { return m.entries(); }

inline Matrix unvectorize(const Field& f, std::size_t n, const Vector& v) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    }
    return m;
}

struct CentralizerBasis {
    Matrix source;
    std::vector<Matrix> basis;
    std::size_t dim = 0;

    std::vector<Vector> vectors() const {
        std::vector<Vector> out;
        for (const auto& b : basis) out.push_back(vectorize(b));
        return out;
    }
};

/// Matrix of the commutator map Z -> XZ - ZX on row-major vec(Z).
inline Matrix commutator_map(const Matrix& x) {
    const std::size_t n = x.rows();
    const Field& f = x.field();
    Matrix m(f, n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                // (XZ)_{ij} = sum_k X_{ik} Z_{kj}
                if (!x(i, k).is_zero()) m(row, k * n + j) = m(row, k * n + j) + x(i, k);
                // (ZX)_{ij} = sum_k Z_{ik} X_{kj}
                if (!x(k, j).is_zero()) m(row, i * n + k) = m(row, i * n + k) - x(k, j);
            }
        }
    }
    return m;
}

inline CentralizerBasis centralizer_basis(const Matrix& x) {
    if (!x.is_square()) fail(ErrorKind::NotSquare, "centralizer of a non-square matrix");
    const std::size_t n = x.rows();
    CentralizerBasis out{x, {}, 0};
    for (const auto& v : mat_kernel(commutator_map(x))) out.basis.push_back(unvectorize(x.field(), n, v));
    out.dim = out.basis.size();
    return out;
}

/// Canonical (reduced echelon) form of the span of a set of n x n matrices.
inline Matrix matrix_span(const Field& f, std::size_t n, const std::vector<Matrix>& ms) {
    std::vector<Vector> vs;
    for (const auto& m : ms) vs.push_back(vectorize(m));
    return row_space(f, n * n, vs);
}

inline bool same_matrix_span(const Field& f, std::size_t n, const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    return matrix_span(f, n, a) == matrix_span(f, n, b);
}

/// { P^{-1} Z P : Z in ms }
inline std::vector<Matrix> conjugate_all(const std::vector<Matrix>& ms, const Matrix& p) {
    const Matrix pinv = inverse(p);
    std::vector<Matrix> out;
    out.reserve(ms.size());
    for (const auto& z : ms) out.push_back(pinv * z * p);
    return out;
}

struct PrimaryComponent {
    Poly f;
    std::vector<Vector> subspace_basis;  // column vectors spanning ker f(X)^{m_f}
    Partition lambda;
};

inline std::vector<PrimaryComponent> primary_decomposition(const Matrix& x, std::uint64_t seed = kDefaultSeed) {
    const CycleType ct = cycle_type(x, seed);
    std::vector<PrimaryComponent> out;
    for (const auto& t : ct.terms) {
        const Matrix fx = mat_eval_poly(pow(t.poly, t.partition.size()), x);
        out.push_back({t.poly, mat_kernel(fx), t.partition});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.f, b.f); });
    return out;
}

struct JCDecomposition {
    Matrix S;
    Matrix N;
    Poly s_expr;  // s_expr(X) = S
    Poly n_expr;  // n_expr(X) = N
};

inline Poly radical(const Poly& m, std::uint64_t seed = kDefaultSeed) {
    Poly r = Poly::constant(m.field().one());
    for (const auto& fp : poly_factor(m, seed).factors) r = r * fp.poly;
    return r;
}

/// Semisimple part of x modulo m as a polynomial: Newton iteration for a root
/// of the radical of m in K[x]/(m), starting from x.
inline Poly semisimple_expression(const Poly& m, std::uint64_t seed = kDefaultSeed) {
    const Field& k = m.field();
    const Poly rad = radical(m, seed);
    const Poly drad = rad.derivative();
    Poly z = Poly::x(k) % m;
    for (std::size_t iter = 0; iter <= 64; ++iter) {
        const Poly rz = poly_compose_mod(rad, z, m);
        if (rz.is_zero()) return z;
        const Poly dz = poly_compose_mod(drad, z, m);
        const auto xg = poly_xgcd(dz, m);
        if (!xg.g.is_one()) {
            fail(ErrorKind::NonSquarefreeDerivativeUnit, "derivative of the radical is not a unit modulo " + m.to_string());
        }
        z = (z - poly_mulmod(rz, xg.s % m, m)) % m;
    }
    fail(ErrorKind::Internal, "Newton iteration for the semisimple part did not converge");
}

inline JCDecomposition jordan_chevalley(const Matrix& x, std::uint64_t seed = kDefaultSeed) {
    if (!x.is_square()) fail(ErrorKind::NotSquare, "jordan_chevalley of a non-square matrix");
    const Field& k = x.field();
    const std::size_t n = x.rows();
    if (n == 0) return {x, x, Poly(k), Poly(k)};
    const Poly m = minpoly(x);
    const Poly s_expr = semisimple_expression(m, seed);
    const Poly n_expr = Poly::x(k) - s_expr;
    JCDecomposition jc{mat_eval_poly(s_expr, x), mat_eval_poly(n_expr, x), s_expr, n_expr};
    const Poly ms = minpoly(jc.S);
    if (jc.S + jc.N != x || jc.S * jc.N != jc.N * jc.S || !mat_pow(jc.N, n).is_zero() ||
        !poly_gcd(ms, ms.derivative()).is_one()) {
        fail(ErrorKind::Internal, "Jordan-Chevalley decomposition failed verification");
    }
    return jc;
}

namespace detail {

inline std::size_t orbit_guard(std::size_t n, long d) {
    std::size_t fact = 1;
    for (long i = 2; i <= d; ++i) {
        if (fact > (std::size_t{1} << 40)) break;
        fact *= static_cast<std::size_t>(i);
    }
    return std::max<std::size_t>(n, 1) * fact;
}

}  // namespace detail

/// Polynomial p, reduced modulo f^{largest part}, such that p(M) has cycle
/// type g^lambda for M of cycle type f^lambda. Uses r directly when that
/// works; otherwise takes S = (s o r)^{(a)}(M) as the semisimple part of M
/// and returns r(S) + (M - S) as a polynomial in M.
inline Poly primary_witness(const Poly& f, const Poly& g, const Partition& lambda, const Poly& r, const Poly& s,
                            std::uint64_t seed = kDefaultSeed) {
    const Field& k = f.field();
    const Poly mod = pow(f, lambda.largest());
    const Matrix model = primary_model(f, lambda);
    const CycleType target{{TypeTerm{g, lambda}}};
    const Poly r_mod = r % mod;
    if (cycle_type(mat_eval_poly(r_mod, model), seed) == target) return r_mod;

    const Poly x = Poly::x(k);
    const Poly t = poly_compose_mod(s, r, mod);
    const std::size_t guard = detail::orbit_guard(model.rows(), f.degree());
    // smallest a0 with t^(a0) = x mod f, i.e. fixing every root of f
    Poly ta = t % f;
    std::size_t a0 = 1;
    while (ta != x % f) {
        if (++a0 > guard) fail(ErrorKind::Internal, "composition powers of s o r never fix the roots of " + f.to_string());
        ta = poly_compose_mod(t, ta, f);
    }
    Poly step = t;
    for (std::size_t i = 1; i < a0; ++i) step = poly_compose_mod(t, step, mod);
    // iterate a = a0, 2 a0, ... until f(t^(a)) = 0 modulo f^{largest part}
    Poly semisimple = step;
    for (std::size_t a = a0; !poly_compose_mod(f, semisimple, mod).is_zero(); a += a0) {
        if (a > guard) fail(ErrorKind::Internal, "semisimple part not reached by composition powers");
        semisimple = poly_compose_mod(step, semisimple, mod);
    }
    const Poly p = (poly_compose_mod(r, semisimple, mod) + x - semisimple) % mod;
    if (cycle_type(mat_eval_poly(p, model), seed) != target) {
        fail(ErrorKind::Internal, "Jordan-Chevalley witness has the wrong cycle type");
    }
    return p;
}

struct WitnessPair {
    Poly p;  // p(X) similar to Y
    Poly q;  // q(Y) similar to X
};

inline std::optional<WitnessPair> witness_polynomials(const Matrix& x, const Matrix& y,
                                                      std::uint64_t seed = kDefaultSeed) {
    if (x.field() != y.field()) fail(ErrorKind::CtxMismatch, "witness_polynomials over different fields");
    if (!x.is_square() || !y.is_square()) fail(ErrorKind::NotSquare, "witness_polynomials needs square matrices");
    if (x.rows() != y.rows()) fail(ErrorKind::SizeMismatch, "witness_polynomials size mismatch");
    const Field& k = x.field();
    const CycleType cx = cycle_type(x, seed);
    const CycleType cy = cycle_type(y, seed);
    const auto match = match_generalized_types(generalized_type(cx), generalized_type(cy), seed);
    if (!match) return std::nullopt;
    if (cx.terms.empty()) return WitnessPair{Poly::x(k), Poly::x(k)};

    std::vector<Poly> p_res, p_mod, q_res, q_mod;
    for (const auto& m : *match) {
        const auto& tx = cx.terms[m.left];
        const auto& ty = cy.terms[m.right];
        p_res.push_back(primary_witness(tx.poly, ty.poly, tx.partition, m.witness.r, m.witness.s, seed));
        p_mod.push_back(pow(tx.poly, tx.partition.largest()));
        q_res.push_back(primary_witness(ty.poly, tx.poly, ty.partition, m.witness.s, m.witness.r, seed));
        q_mod.push_back(pow(ty.poly, ty.partition.largest()));
    }
    WitnessPair w{poly_crt(p_res, p_mod), poly_crt(q_res, q_mod)};
    if (!are_similar(mat_eval_poly(w.p, x), y) || !are_similar(mat_eval_poly(w.q, y), x)) {
        fail(ErrorKind::Internal, "witness polynomials failed the similarity check");
    }
    return w;
}

struct ConjugacyCertificate {
    bool verdict = false;
    std::optional<Poly> p;
    std::optional<Poly> q;
    std::optional<Matrix> conjugator;  // P^{-1} Cent(X) P = Cent(Y)
    GeneralizedType type_x;
    GeneralizedType type_y;
};

inline ConjugacyCertificate centralizers_conjugate(const Matrix& x, const Matrix& y,
                                                   std::uint64_t seed = kDefaultSeed) {
    if (x.field() != y.field()) fail(ErrorKind::CtxMismatch, "centralizers_conjugate over different fields");
    if (!x.is_square() || !y.is_square()) fail(ErrorKind::NotSquare, "centralizers_conjugate needs square matrices");
    if (x.rows() != y.rows()) fail(ErrorKind::SizeMismatch, "centralizers_conjugate size mismatch");
    ConjugacyCertificate cert;
    cert.type_x = generalized_type(x, seed);
    cert.type_y = generalized_type(y, seed);
    auto w = witness_polynomials(x, y, seed);
    if (!w) return cert;

    const Matrix px = mat_eval_poly(w->p, x);
    auto conj = similar_conjugator(px, y);
    if (!conj) fail(ErrorKind::Internal, "p(X) is not similar to Y");
    const std::size_t n = x.rows();
    const auto cent_x = centralizer_basis(x).basis;
    if (!same_matrix_span(x.field(), n, cent_x, centralizer_basis(px).basis)) {
        fail(ErrorKind::Internal, "Cent(X) differs from Cent(p(X))");
    }
    if (!same_matrix_span(x.field(), n, conjugate_all(cent_x, *conj), centralizer_basis(y).basis)) {
        fail(ErrorKind::Internal, "conjugator does not carry Cent(X) onto Cent(Y)");
    }
    cert.verdict = true;
    cert.p = std::move(w->p);
    cert.q = std::move(w->q);
    cert.conjugator = std::move(*conj);
    return cert;
}

inline constexpr std::size_t kBruteForceLimit = std::size_t{1} << 25;

/// All invertible n x n matrices over a prime field, in counter order.
inline std::vector<Matrix> enumerate_gl(const Field& f, std::size_t n) {
    if (f.kind() != FieldKind::PrimeField) fail(ErrorKind::UnsupportedField, "GL_n enumeration needs a prime field");
    const std::uint64_t p = f.characteristic();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (total > kBruteForceLimit / p) fail(ErrorKind::TooLarge, "p^(n^2) exceeds 2^25");
        total *= p;
    }
    std::vector<Matrix> out;
    std::vector<std::uint64_t> digits(n * n, 0);
    for (std::size_t c = 0; c < total; ++c) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = f.from_int(static_cast<long long>(digits[i]));
        if (is_invertible(m)) out.push_back(std::move(m));
        for (std::size_t i = 0; i < n * n; ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return out;
}

/// Exhaustive oracle: some g in GL_n(F_p) has g^{-1} Cent(X) g = Cent(Y).
inline bool cent_conjugate_bruteforce(const Matrix& x, const Matrix& y, const std::vector<Matrix>& group,
                                      unsigned jobs = 1) {
    if (x.field() != y.field()) fail(ErrorKind::CtxMismatch, "cent_conjugate_bruteforce over different fields");
    if (x.rows() != y.rows()) fail(ErrorKind::SizeMismatch, "cent_conjugate_bruteforce size mismatch");
    const Field& f = x.field();
    const std::size_t n = x.rows();
    const auto cx = centralizer_basis(x).basis;
    const Matrix target = matrix_span(f, n, centralizer_basis(y).basis);
    if (cx.size() != target.rows()) return false;
    std::atomic<bool> found{false};
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end && !found.load(std::memory_order_relaxed); ++i) {
            if (matrix_span(f, n, conjugate_all(cx, group[i])) == target) found = true;
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker(0, group.size());
    } else {
        std::vector<std::thread> threads;
        const std::size_t chunk = (group.size() + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            const std::size_t b = t * chunk, e = std::min(group.size(), b + chunk);
            if (b < e) threads.emplace_back(worker, b, e);
        }
        for (auto& th : threads) th.join();
    }
    return found;
}

inline bool cent_conjugate_bruteforce(const Matrix& x, const Matrix& y) {
    if (x.field().kind() != FieldKind::PrimeField) {
        fail(ErrorKind::UnsupportedField, "brute-force oracle needs a prime field");
    }
    return cent_conjugate_bruteforce(x, y, enumerate_gl(x.field(), x.rows()));
}

}  // namespace gentype

#endif  // GENTYPE_CENTRALIZER_HPP
