#include <gtest/gtest.h>

#include "gentype/centralizer.hpp"
#include "gentype/random.hpp"

using namespace gentype;

namespace {

const Field& Q() {
    static const Field q = Field::rationals();
    return q;
}
Poly qp(std::vector<long long> c) { return Poly::from_ints(Q(), std::move(c)); }

Matrix unit(const Field& k, std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(k, n, n);
    m(i, j) = k.one();
    return m;
}

}  // namespace

TEST(CentralizerBasis, Examples) {
    const Field f2 = Field::prime(2);
    const auto a = centralizer_basis(diagonal(f2, {1, 0}));
    EXPECT_EQ(a.dim, 2u);
    EXPECT_TRUE(same_matrix_span(f2, 2, a.basis, {unit(f2, 2, 0, 0), unit(f2, 2, 1, 1)}));

    const auto s = centralizer_basis(Matrix::identity(Q(), 3).scaled(Q().from_int(7)));
    EXPECT_EQ(s.dim, 9u);

    const Matrix c = companion(qp({-2, 0, 1}));
    const auto b = centralizer_basis(c);
    EXPECT_EQ(b.dim, 2u);
    EXPECT_TRUE(same_matrix_span(Q(), 2, b.basis, {Matrix::identity(Q(), 2), c}));
}

TEST(CentralizerBasis, MembersCommuteAndDimensionLaw) {
    Rng rng(50);
    for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull}) {
        const Field k = p == 0 ? Q() : Field::prime(p);
        for (int i = 0; i < 25; ++i) {
            const std::size_t n = uniform_index(rng, 1, p == 0 ? 5 : 6);
            const Matrix x = i % 2 ? random_matrix(k, n, rng, 9)
                                   : random_conjugate(model_matrix(k, random_type(k, n, rng)), rng);
            const auto cb = centralizer_basis(x);
            for (const auto& z : cb.basis) EXPECT_EQ(x * z, z * x);
            EXPECT_EQ(cb.dim, n * n - rank(commutator_map(x)));
            EXPECT_EQ(cb.dim, cent_dim_formula(green_type(cycle_type(x))));
        }
    }
}

TEST(CentralizerBasis, NotSquare) {
    try {
        centralizer_basis(Matrix(Q(), 1, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSquare);
    }
}

TEST(PrimaryDecomposition, Examples) {
    const Field f2 = Field::prime(2);
    const auto a = primary_decomposition(diagonal(f2, {1, 0}));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].f, Poly::x(f2));
    EXPECT_EQ(a[0].subspace_basis.size(), 1u);
    EXPECT_EQ(a[1].subspace_basis.size(), 1u);

    const Matrix m = companion(pow(qp({-1, 1}), 3));
    const auto b = primary_decomposition(m);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].subspace_basis.size(), 3u);
    EXPECT_EQ(b[0].lambda, Partition({3}));

    const auto c = primary_decomposition(companion(qp({0, -2, 0, 1})));
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].subspace_basis.size(), 1u);
    EXPECT_EQ(c[1].subspace_basis.size(), 2u);
}

TEST(PrimaryDecomposition, ComponentsSpanTheSpace) {
    Rng rng(51);
    for (std::uint64_t p : {0ull, 3ull}) {
        const Field k = p == 0 ? Q() : Field::prime(p);
        for (int i = 0; i < 15; ++i) {
            const std::size_t n = uniform_index(rng, 1, 6);
            const Matrix x = random_conjugate(model_matrix(k, random_type(k, n, rng)), rng);
            std::vector<Vector> all;
            for (const auto& c : primary_decomposition(x)) all.insert(all.end(), c.subspace_basis.begin(), c.subspace_basis.end());
            EXPECT_EQ(all.size(), n);
            EXPECT_EQ(rank(Matrix::from_columns(k, n, all)), n);
        }
    }
}

TEST(PrimaryDecomposition, EqualCentralizersGiveEqualComponents) {
    Rng rng(52);
    for (std::uint64_t p : {0ull, 3ull, 5ull}) {
        const Field k = p == 0 ? Q() : Field::prime(p);
        for (int i = 0; i < 10; ++i) {
            const std::size_t n = uniform_index(rng, 2, 5);
            const Matrix x = random_conjugate(model_matrix(k, random_type(k, n, rng)), rng);
            const Matrix y = x + Matrix::identity(k, n);
            if (!same_matrix_span(k, n, centralizer_basis(x).basis, centralizer_basis(y).basis)) continue;
            auto spaces = [&](const Matrix& m) {
                std::vector<Matrix> out;
                for (const auto& c : primary_decomposition(m)) out.push_back(row_space(k, n, c.subspace_basis));
                std::sort(out.begin(), out.end(), [](const Matrix& a, const Matrix& b) { return a.to_string() < b.to_string(); });
                return out;
            };
            EXPECT_EQ(spaces(x), spaces(y));
        }
    }
}

TEST(NilpotentRecognition, EqualCentralizerSpansForceSimilarity) {
    const Field f2 = Field::prime(2);
    Rng rng(53);
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<Matrix> nilps;
        for (const auto& lambda : partitions_of(n)) {
            std::vector<Matrix> blocks;
            for (auto part : lambda.parts()) blocks.push_back(companion(pow(Poly::x(f2), part)));
            const Matrix m = block_diag(f2, blocks);
            nilps.push_back(m);
            for (int c = 0; c < 3; ++c) nilps.push_back(random_conjugate(m, rng));
        }
        for (const auto& m : nilps) {
            for (const auto& k : nilps) {
                if (same_matrix_span(f2, n, centralizer_basis(m).basis, centralizer_basis(k).basis)) {
                    EXPECT_EQ(invariant_factors(m), invariant_factors(k));
                }
            }
        }
    }
}

TEST(JordanChevalley, Examples) {
    const Matrix n = Matrix::from_ints(Q(), {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    const auto a = jordan_chevalley(n);
    EXPECT_TRUE(a.S.is_zero());
    EXPECT_EQ(a.N, n);

    const Matrix x = companion(pow(qp({-1, 1}), 2));
    const auto b = jordan_chevalley(x);
    EXPECT_EQ(b.S, Matrix::identity(Q(), 2));
    EXPECT_EQ(b.N, x - Matrix::identity(Q(), 2));

    const Poly f = qp({-2, 0, 1});
    const Matrix y = companion(pow(f, 2));
    const auto c = jordan_chevalley(y);
    EXPECT_TRUE(mat_eval_poly(f, c.S).is_zero());
    EXPECT_EQ(c.S + c.N, y);
    EXPECT_EQ(c.S * c.N, c.N * c.S);
    EXPECT_TRUE((c.N * c.N).is_zero());
    EXPECT_FALSE(c.N.is_zero());
    EXPECT_EQ(mat_eval_poly(c.s_expr, y), c.S);
    EXPECT_EQ(mat_eval_poly(c.n_expr, y), c.N);
}

TEST(JordanChevalley, EquationsAndUniquenessUnderConjugation) {
    Rng rng(54);
    for (std::uint64_t p : {0ull, 2ull, 3ull}) {
        const Field k = p == 0 ? Q() : Field::prime(p);
        for (int i = 0; i < 15; ++i) {
            const std::size_t n = uniform_index(rng, 1, 5);
            const Matrix x = random_conjugate(model_matrix(k, random_type(k, n, rng)), rng);
            const auto jc = jordan_chevalley(x);
            const Poly ms = minpoly(jc.S);
            EXPECT_EQ(jc.S + jc.N, x);
            EXPECT_EQ(jc.S * jc.N, jc.N * jc.S);
            EXPECT_TRUE(mat_pow(jc.N, n).is_zero());
            EXPECT_TRUE(poly_gcd(ms, ms.derivative()).is_one());
            const Matrix pm = random_invertible(k, n, rng);
            const Matrix pinv = inverse(pm);
            const auto jc2 = jordan_chevalley(pinv * x * pm);
            EXPECT_EQ(jc2.S, pinv * jc.S * pm);
            EXPECT_EQ(jc2.N, pinv * jc.N * pm);
        }
    }
}

TEST(WitnessPolynomials, Examples) {
    const Matrix x = companion(qp({-2, 0, 1}));
    const auto same = witness_polynomials(x, x);
    ASSERT_TRUE(same);
    EXPECT_TRUE(are_similar(mat_eval_poly(same->p, x), x));

    const Matrix y = companion(qp({-8, 0, 1}));
    const auto w = witness_polynomials(x, y);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->p, qp({0, 2}));
    EXPECT_EQ(w->q, Poly(Q(), {Q().zero(), Q().from_rational(mpq_class(1, 2))}));

    const Field f3 = Field::prime(3);
    const Matrix a = companion(Poly::from_ints(f3, {1, 0, 1}));
    const Matrix b = companion(Poly::from_ints(f3, {2, 1, 1}));
    const auto w3 = witness_polynomials(a, b);
    ASSERT_TRUE(w3);
    EXPECT_EQ(frobenius_form(mat_eval_poly(w3->p, a)).invariant_factors, frobenius_form(b).invariant_factors);
    EXPECT_TRUE(are_similar(mat_eval_poly(Poly::from_ints(f3, {1, 1}), a), b));

    EXPECT_FALSE(witness_polynomials(x, companion(qp({-3, 0, 1}))));
}

TEST(WitnessPolynomials, Errors) {
    try {
        witness_polynomials(Matrix(Q(), 2, 2), Matrix(Q(), 3, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeMismatch);
    }
    try {
        witness_polynomials(Matrix(Q(), 2, 2), Matrix(Field::prime(2), 2, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CtxMismatch);
    }
}

TEST(WitnessPolynomials, JordanChevalleyRouteWhenRKillsTheNilpotentPart) {
    // Over F_3 with f = x^2 + 1, r = x^3 maps each root of f to the other root,
    // but r(M) for M of type f^(2) is semisimple, so the direct choice fails.
    const Field f3 = Field::prime(3);
    const Poly f = Poly::from_ints(f3, {1, 0, 1});
    const Poly r = Poly::from_ints(f3, {0, 0, 0, 1});
    const Partition lambda({2});
    const Matrix m = primary_model(f, lambda);
    EXPECT_NE(cycle_type(mat_eval_poly(r, m)), (CycleType{{{f, lambda}}}));
    const Poly p = primary_witness(f, f, lambda, r, r);
    EXPECT_EQ(cycle_type(mat_eval_poly(p, m)), (CycleType{{{f, lambda}}}));
    EXPECT_TRUE(same_matrix_span(f3, 4, centralizer_basis(m).basis, centralizer_basis(mat_eval_poly(p, m)).basis));
}

TEST(WitnessPolynomials, MultiComponentGluing) {
    Rng rng(55);
    const Field f5 = Field::prime(5);
    for (int i = 0; i < 10; ++i) {
        const Poly f1 = random_irreducible(f5, 1, rng), g1 = random_irreducible(f5, 1, rng);
        const Poly f2 = random_irreducible(f5, 2, rng), g2 = random_irreducible(f5, 2, rng);
        const Partition l1 = random_partition(uniform_index(rng, 1, 2), rng);
        const Partition l2 = random_partition(uniform_index(rng, 1, 2), rng);
        const Matrix x = random_conjugate(model_matrix(f5, {{f1, l1}, {f2, l2}}), rng);
        const Matrix y = random_conjugate(model_matrix(f5, {{g1, l1}, {g2, l2}}), rng);
        const auto w = witness_polynomials(x, y);
        ASSERT_TRUE(w);
        EXPECT_TRUE(are_similar(mat_eval_poly(w->p, x), y));
        EXPECT_TRUE(are_similar(mat_eval_poly(w->q, y), x));
        EXPECT_TRUE(same_matrix_span(f5, x.rows(), centralizer_basis(x).basis,
                                     centralizer_basis(mat_eval_poly(w->p, x)).basis));
    }
}

TEST(CentralizersConjugate, Examples) {
    const Field f2 = Field::prime(2);
    const Matrix a = diagonal(f2, {1, 0});
    const Matrix b = Matrix::from_ints(f2, {{1, 1}, {0, 0}});
    const auto c = centralizers_conjugate(a, b);
    EXPECT_TRUE(c.verdict);
    ASSERT_TRUE(c.conjugator);
    EXPECT_FALSE(same_matrix_span(f2, 2, centralizer_basis(a).basis, centralizer_basis(b).basis));
    EXPECT_TRUE(same_matrix_span(f2, 2, conjugate_all(centralizer_basis(a).basis, *c.conjugator),
                                 centralizer_basis(b).basis));

    const auto no = centralizers_conjugate(companion(qp({-2, 0, 1})), companion(qp({-3, 0, 1})));
    EXPECT_FALSE(no.verdict);
    EXPECT_FALSE(no.p);
    EXPECT_FALSE(no.conjugator);

    const Matrix x = companion(qp({-2, 0, 1}));
    const auto self = centralizers_conjugate(x, x);
    EXPECT_TRUE(self.verdict);
    EXPECT_TRUE(same_matrix_span(Q(), 2, conjugate_all(centralizer_basis(x).basis, *self.conjugator),
                                 centralizer_basis(x).basis));
}

TEST(CentBruteForce, Examples) {
    const Field f2 = Field::prime(2);
    const Matrix a = diagonal(f2, {1, 0});
    EXPECT_TRUE(cent_conjugate_bruteforce(a, Matrix::from_ints(f2, {{1, 1}, {0, 0}})));
    EXPECT_FALSE(cent_conjugate_bruteforce(a, diagonal(f2, {1, 1})));
    Rng rng(56);
    EXPECT_TRUE(cent_conjugate_bruteforce(a, random_conjugate(a, rng)));
    EXPECT_EQ(enumerate_gl(f2, 2).size(), 6u);
    EXPECT_EQ(enumerate_gl(f2, 3).size(), 168u);
}

TEST(CentBruteForce, Guards) {
    try {
        enumerate_gl(Field::prime(3), 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
    try {
        cent_conjugate_bruteforce(Matrix(Q(), 2, 2), Matrix(Q(), 2, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedField);
    }
}

TEST(CentBruteForce, ParallelMatchesSequential) {
    const Field f2 = Field::prime(2);
    const auto group = enumerate_gl(f2, 3);
    const Matrix x = diagonal(f2, {1, 0, 0});
    const Matrix y = Matrix::from_ints(f2, {{1, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    EXPECT_EQ(cent_conjugate_bruteforce(x, y, group, 1), cent_conjugate_bruteforce(x, y, group, 3));
}
