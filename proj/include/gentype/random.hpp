#ifndef GENTYPE_RANDOM_HPP
#define GENTYPE_RANDOM_HPP

// Seeded generators for matrices, polynomials, partitions and types.

#include <algorithm>
#include <random>
#include <vector>

#include "factor.hpp"
#include "matrix.hpp"
#include "types.hpp"

namespace gentype {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Matrix random_matrix(const Field& f, std::size_t n, Rng& rng, long long bound = 9) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_element(f, rng, bound);
    }
    return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng, long long bound = 2) {
    for (;;) {
        Matrix m = random_matrix(f, n, rng, bound);
        if (is_invertible(m)) return m;
    }
}

/// P^{-1} X P for a random invertible P.
inline Matrix random_conjugate(const Matrix& x, Rng& rng, long long bound = 2) {
    const Matrix p = random_invertible(x.field(), x.rows(), rng, bound);
    return inverse(p) * x * p;
}

inline Matrix random_permutation_matrix(const Field& f, std::size_t n, Rng& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = f.one();
    return m;
}

inline Poly random_poly(const Field& f, std::size_t deg, Rng& rng, long long bound = 3) {
    std::vector<FieldElem> c;
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(random_element(f, rng, bound));
    return Poly(f, std::move(c));
}

inline Poly random_monic(const Field& f, std::size_t deg, Rng& rng, long long bound = 3) {
    std::vector<FieldElem> c;
    for (std::size_t i = 0; i < deg; ++i) c.push_back(random_element(f, rng, bound));
    c.push_back(f.one());
    return Poly(f, std::move(c));
}

inline Poly random_irreducible(const Field& f, std::size_t deg, Rng& rng, long long bound = 3) {
    for (std::size_t attempt = 0; attempt < 10000; ++attempt) {
        Poly p = random_monic(f, deg, rng, bound);
        if (is_irreducible(p)) return p;
    }
    fail(ErrorKind::Internal, "no irreducible polynomial of degree " + std::to_string(deg) + " found");
}

inline Partition random_partition(std::size_t n, Rng& rng) {
    std::vector<std::size_t> parts;
    while (n > 0) {
        const std::size_t p = uniform_index(rng, 1, n);
        parts.push_back(p);
        n -= p;
    }
    return Partition(std::move(parts));
}

/// Random cycle type of dimension n with irreducibles of degree <= max_degree.
inline std::vector<TypeTerm> random_type(const Field& f, std::size_t n, Rng& rng, std::size_t max_degree = 3,
                                         long long bound = 3) {
    std::vector<std::pair<Poly, std::vector<std::size_t>>> acc;
    std::size_t rest = n;
    while (rest > 0) {
        const std::size_t d = uniform_index(rng, 1, std::min(max_degree, rest));
        Poly p = random_irreducible(f, d, rng, bound);
        const std::size_t part = uniform_index(rng, 1, rest / d);
        auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& e) { return e.first == p; });
        if (it == acc.end()) {
            acc.emplace_back(std::move(p), std::vector<std::size_t>{part});
        } else {
            it->second.push_back(part);
        }
        rest -= d * part;
    }
    std::vector<TypeTerm> out;
    for (auto& [p, parts] : acc) out.push_back({p, Partition(parts)});
    std::sort(out.begin(), out.end(), detail::term_less);
    return out;
}

}  // namespace gentype

#endif  // GENTYPE_RANDOM_HPP
