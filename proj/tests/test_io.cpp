#include <gtest/gtest.h>

#include "gentype/json_io.hpp"
#include "gentype/random.hpp"

using namespace gentype;
using gentype::io::json;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

}  // namespace

TEST(JsonIo, PolyText) {
    const Field q = Field::rationals();
    EXPECT_EQ(io::parse_poly_text(q, "x^2 - 2"), Poly::from_ints(q, {-2, 0, 1}));
    EXPECT_EQ(io::parse_poly_text(q, "3x^3 + 1/2*x - 7"),
              Poly(q, {q.from_int(-7), q.from_rational(mpq_class(1, 2)), q.zero(), q.from_int(3)}));
    EXPECT_EQ(io::parse_poly_text(q, "x"), Poly::x(q));
    EXPECT_EQ(io::parse_poly_text(q, "-x + 1"), Poly::from_ints(q, {1, -1}));
    const Field f5 = Field::prime(5);
    EXPECT_EQ(io::parse_poly_text(f5, "x^2 + 7"), Poly::from_ints(f5, {2, 0, 1}));
    for (const std::string bad : {"x^", "2 +", "x^2 ** 3", "y + 1", ""}) {
        EXPECT_EQ(kind_of([&] { io::parse_poly_text(q, bad); }), ErrorKind::ParseError) << bad;
    }
}

TEST(JsonIo, PolyToStringParsesBack) {
    Rng rng(70);
    for (std::uint64_t p : {0ull, 2ull, 7ull}) {
        const Field k = p == 0 ? Field::rationals() : Field::prime(p);
        for (int i = 0; i < 30; ++i) {
            const Poly a = random_poly(k, uniform_index(rng, 0, 5), rng, 9);
            EXPECT_EQ(io::parse_poly_text(k, a.to_string()), a) << a.to_string();
            EXPECT_EQ(io::poly_from_json(k, io::poly_to_json(a)), a);
        }
    }
}

TEST(JsonIo, FieldDescriptors) {
    EXPECT_EQ(io::field_from_json(json::parse(R"({"kind":"Q"})")).kind(), FieldKind::Rationals);
    EXPECT_EQ(io::field_from_json(json::parse(R"({"kind":"Fp","p":7})")).characteristic(), 7u);
    const Field f4 = io::field_from_json(json::parse(R"({"kind":"ext","base":{"kind":"Fp","p":2},"modulus":[1,1,1]})"));
    EXPECT_EQ(f4.order(), 4);
    EXPECT_EQ(io::field_from_json(io::field_to_json(f4)).modulus(), f4.modulus());
    EXPECT_EQ(kind_of([] { io::field_from_json(json::parse(R"({"kind":"R"})")); }), ErrorKind::UnsupportedField);
    EXPECT_EQ(kind_of([] { io::field_from_json(json::parse(R"({"kind":"Fp","p":6})")); }), ErrorKind::CompositeModulus);
    EXPECT_EQ(kind_of([] { io::field_from_json(json::parse(R"({"kind":"Fp"})")); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { io::field_from_json(json::parse("[]")); }), ErrorKind::ParseError);
}

TEST(JsonIo, MatrixRoundTrip) {
    Rng rng(71);
    const Field f2 = Field::prime(2);
    const Field f4 = make_extension(f2, Poly::from_ints(f2, {1, 1, 1}));
    for (const Field& k : {Field::rationals(), Field::prime(3), f4}) {
        const Matrix m = random_matrix(k, 3, rng, 9);
        const Matrix back = io::matrix_from_json(json::parse(io::matrix_file_json(m).dump()));
        EXPECT_EQ(back, m);
    }
    const Matrix c = io::matrix_from_json(json::parse(R"({"field":{"kind":"Q"},"companion":"x^2 - 2"})"));
    EXPECT_EQ(c, companion(Poly::from_ints(Field::rationals(), {-2, 0, 1})));
    EXPECT_EQ(io::matrix_from_json(json::parse(R"({"field":{"kind":"Q"},"rows":[["1/2","-3"],[0,1]]})"))(0, 0),
              Field::rationals().from_rational(mpq_class(1, 2)));
    EXPECT_EQ(kind_of([] { io::matrix_from_json(json::parse(R"({"field":{"kind":"Q"},"rows":[[1,2],[3]]})")); }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { io::matrix_from_json(json::parse(R"({"rows":[[1]]})")); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { io::matrix_from_json(json::parse(R"({"field":{"kind":"Q"},"rows":[["1/0"]]})")); }),
              ErrorKind::DivisionByZero);
}

TEST(JsonIo, Permutations) {
    EXPECT_EQ(io::permutation_from_text("[2,1,3]"), Permutation::parse_cycles("(1 2)", 3));
    EXPECT_EQ(io::permutation_from_text("(1 2)(3 4)", 5).n(), 5u);
    EXPECT_EQ(kind_of([] { io::permutation_from_text("[2,1", 0); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { io::permutation_from_text("[2,1]", 3); }), ErrorKind::SizeMismatch);
}

TEST(JsonIo, ReportsAndErrors) {
    const auto r = sn_cent_equal(Permutation::parse_cycles("(1 2)", 4), Permutation::parse_cycles("(3 4)", 4));
    const json j = io::variation_report_to_json(r);
    EXPECT_EQ(j["kind"], "S-case-2");
    EXPECT_EQ(j["equal"], true);
    EXPECT_EQ(j["variation"], json::array({1, 2}));
    const json e = io::error_to_json(ErrorKind::ParseError, "bad");
    EXPECT_EQ(e["error"]["message"], "bad");
    EXPECT_TRUE(e["error"]["kind"].is_string());
}

TEST(JsonIo, CertificateShape) {
    const Field q = Field::rationals();
    const Matrix x = companion(Poly::from_ints(q, {-2, 0, 1}));
    const Matrix y = companion(Poly::from_ints(q, {-8, 0, 1}));
    const json c = io::certificate_to_json(centralizers_conjugate(x, y));
    EXPECT_EQ(c["verdict"], true);
    EXPECT_EQ(c["p_text"], "2*x");
    EXPECT_EQ(c["q_text"], "1/2*x");
    EXPECT_TRUE(c["conjugator"].is_array());
    EXPECT_EQ(c["generalized_type_x"][0]["text"], "x^2 - 2");
}
