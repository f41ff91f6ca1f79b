#include <gtest/gtest.h>

#include "gentype/frobenius.hpp"
#include "gentype/random.hpp"

using namespace gentype;

namespace {

const Field& Q() {
    static const Field q = Field::rationals();
    return q;
}

// Characteristic polynomial by the Faddeev-LeVerrier recurrence (char 0 only).
Poly charpoly_leverrier(const Matrix& a) {
    const std::size_t n = a.rows();
    const Field& k = a.field();
    std::vector<FieldElem> c(n + 1, k.zero());
    c[n] = k.one();
    Matrix m(k, n, n);
    for (std::size_t j = 1; j <= n; ++j) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m(i, i) + c[n - j + 1];
        Matrix am = a * m;
        FieldElem tr = k.zero();
        for (std::size_t i = 0; i < n; ++i) tr = tr + am(i, i);
        c[n - j] = -tr / k.from_int(static_cast<long long>(j));
    }
    return Poly(k, c);
}

}  // namespace

TEST(MatKernel, Examples) {
    EXPECT_TRUE(mat_kernel(Matrix::identity(Q(), 3)).empty());
    const Field f2 = Field::prime(2);
    EXPECT_EQ(mat_kernel(Matrix(f2, 2, 2)).size(), 2u);
    const auto k = mat_kernel(Matrix::from_ints(f2, {{1, 1}, {1, 1}}));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (Vector{f2.one(), f2.one()}));
}

TEST(MatKernel, RankNullity) {
    Rng rng(21);
    for (std::uint64_t p : {0ull, 2ull, 3ull}) {
        const Field k = p == 0 ? Q() : Field::prime(p);
        for (int i = 0; i < 40; ++i) {
            const std::size_t r = uniform_index(rng, 1, 5), c = uniform_index(rng, 1, 5);
            Matrix a(k, r, c);
            for (std::size_t x = 0; x < r; ++x) {
                for (std::size_t y = 0; y < c; ++y) a(x, y) = random_element(k, rng, 2);
            }
            const auto ker = mat_kernel(a);
            EXPECT_EQ(rank(a) + ker.size(), c);
            for (const auto& v : ker) {
                for (const auto& e : a * v) EXPECT_TRUE(e.is_zero());
            }
        }
    }
}

TEST(FrobeniusForm, Examples) {
    const Poly f = Poly::from_ints(Q(), {-2, 0, 0, 1});
    const auto ff = frobenius_form(companion(f));
    ASSERT_EQ(ff.invariant_factors.size(), 1u);
    EXPECT_EQ(ff.invariant_factors[0], f);
    EXPECT_EQ(ff.transform, Matrix::identity(Q(), 3));

    const Field f2 = Field::prime(2);
    const auto d = frobenius_form(diagonal(f2, {1, 0}));
    ASSERT_EQ(d.invariant_factors.size(), 1u);
    EXPECT_EQ(d.invariant_factors[0], Poly::from_ints(f2, {0, 1, 1}));

    const auto z = frobenius_form(Matrix(Q(), 3, 3));
    ASSERT_EQ(z.invariant_factors.size(), 3u);
    for (const auto& p : z.invariant_factors) EXPECT_EQ(p, Poly::x(Q()));
}

TEST(FrobeniusForm, NotSquare) {
    try {
        frobenius_form(Matrix(Q(), 2, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSquare);
    }
}

TEST(FrobeniusForm, TransformAndDivisibility) {
    Rng rng(8);
    for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull}) {
        const Field k = p == 0 ? Q() : Field::prime(p);
        for (int i = 0; i < 40; ++i) {
            const std::size_t n = uniform_index(rng, 1, 6);
            const Matrix a = i % 2 ? random_matrix(k, n, rng, 3)
                                   : random_conjugate(model_matrix(k, random_type(k, n, rng)), rng);
            const auto ff = frobenius_form(a);
            EXPECT_EQ(ff.transform * a * ff.transform_inverse, ff.form());
            EXPECT_EQ(ff.transform * ff.transform_inverse, Matrix::identity(k, n));
            for (std::size_t j = 1; j < ff.invariant_factors.size(); ++j) {
                EXPECT_TRUE((ff.invariant_factors[j] % ff.invariant_factors[j - 1]).is_zero());
            }
            const Poly m = minpoly(a);
            EXPECT_TRUE(mat_eval_poly(m, a).is_zero());
            for (const auto& fp : poly_factor(m).factors) EXPECT_FALSE(mat_eval_poly(m / fp.poly, a).is_zero());
            // deterministic for a fixed input
            EXPECT_EQ(frobenius_form(a).transform, ff.transform);
        }
    }
}

TEST(FrobeniusForm, CharpolyMatchesLeverrier) {
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        const Matrix a = random_matrix(Q(), uniform_index(rng, 1, 6), rng, 5);
        EXPECT_EQ(charpoly(a), charpoly_leverrier(a));
    }
}

TEST(FrobeniusForm, NonCyclicStandardBasis) {
    // No standard basis vector is cyclic here: the local minimal polynomials
    // are x - 1 and x - 2 but the matrix is cyclic.
    const Matrix a = Matrix::from_ints(Q(), {{1, 0}, {0, 2}});
    const auto ff = frobenius_form(a);
    ASSERT_EQ(ff.invariant_factors.size(), 1u);
    EXPECT_EQ(ff.invariant_factors[0], Poly::from_ints(Q(), {2, -3, 1}));
    EXPECT_EQ(ff.transform * a * ff.transform_inverse, ff.form());
}

TEST(SimilarConjugator, Examples) {
    const Field f2 = Field::prime(2);
    const Matrix a = Matrix::from_ints(f2, {{1, 0}, {0, 0}});
    const Matrix b = Matrix::from_ints(f2, {{1, 1}, {0, 0}});
    auto p = similar_conjugator(a, a);
    ASSERT_TRUE(p);
    EXPECT_EQ(inverse(*p) * a * *p, a);
    p = similar_conjugator(a, b);
    ASSERT_TRUE(p);
    EXPECT_EQ(inverse(*p) * a * *p, b);
    EXPECT_FALSE(similar_conjugator(a, Matrix::identity(f2, 2)));
}

TEST(SimilarConjugator, Errors) {
    try {
        similar_conjugator(Matrix(Q(), 2, 2), Matrix(Q(), 3, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeMismatch);
    }
    try {
        similar_conjugator(Matrix(Q(), 2, 2), Matrix(Field::prime(2), 2, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CtxMismatch);
    }
}

TEST(SimilarConjugator, ComposesOnConjugateTriples) {
    Rng rng(17);
    for (std::uint64_t p : {0ull, 3ull}) {
        const Field k = p == 0 ? Q() : Field::prime(p);
        for (int i = 0; i < 15; ++i) {
            const Matrix a = random_conjugate(model_matrix(k, random_type(k, uniform_index(rng, 1, 5), rng)), rng);
            const Matrix b = random_conjugate(a, rng);
            const Matrix c = random_conjugate(a, rng);
            const auto pab = similar_conjugator(a, b);
            const auto pbc = similar_conjugator(b, c);
            ASSERT_TRUE(pab && pbc);
            EXPECT_EQ(inverse(*pab) * a * *pab, b);
            EXPECT_EQ(inverse(*pbc) * b * *pbc, c);
            const Matrix pac = *pab * *pbc;
            EXPECT_EQ(inverse(pac) * a * pac, c);
        }
    }
}

TEST(MatEvalPoly, Examples) {
    const Matrix a = Matrix::from_ints(Q(), {{1, 2}, {3, 4}});
    EXPECT_EQ(mat_eval_poly(Poly::x(Q()), a), a);
    const Poly f = Poly::from_ints(Q(), {-2, 0, 1});
    EXPECT_TRUE(mat_eval_poly(f, companion(f)).is_zero());
    const Matrix j2 = Matrix::from_ints(Q(), {{0, 1}, {0, 0}});
    EXPECT_TRUE(mat_eval_poly(Poly::from_ints(Q(), {0, 0, 1}), j2).is_zero());
}

TEST(Companion, Convention) {
    // ones on the subdiagonal, negated coefficients in the last column
    const Matrix c = companion(Poly::from_ints(Q(), {5, 6, 7, 1}));
    EXPECT_EQ(c, Matrix::from_ints(Q(), {{0, 0, -5}, {1, 0, -6}, {0, 1, -7}}));
}
