#ifndef GENTYPE_JSON_IO_HPP
#define GENTYPE_JSON_IO_HPP

// JSON reading and writing for fields, elements, polynomials, matrices,
// types, certificates and permutation reports. Needs nlohmann/json.

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "centralizer.hpp"
#include "perm.hpp"
#include "types.hpp"

namespace gentype::io {

using json = nlohmann::json;

// ---- fields and elements ----------------------------------------------------

inline json elem_to_json(const FieldElem& a);

inline json field_to_json(const Field& f) {
    switch (f.kind()) {
        case FieldKind::Rationals: return {{"kind", "Q"}};
        case FieldKind::PrimeField: return {{"kind", "Fp"}, {"p", f.characteristic()}};
        case FieldKind::Extension: break;
    }
    json mod = json::array();
    for (const auto& c : f.modulus()) mod.push_back(elem_to_json(c));
    return {{"kind", "ext"}, {"base", field_to_json(f.base())}, {"modulus", mod}};
}

inline json elem_to_json(const FieldElem& a) {
    switch (a.field().kind()) {
        case FieldKind::Rationals: return a.rational().get_str();
        case FieldKind::PrimeField: return a.residue();
        case FieldKind::Extension: break;
    }
    json arr = json::array();
    for (const auto& c : a.coeffs()) arr.push_back(elem_to_json(c));
    return arr;
}

inline mpq_class parse_rational(const std::string& s) {
    std::string t;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    bool slash = false, digits = false;
    for (std::size_t k = i; k < t.size(); ++k) {
        if (t[k] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else if (std::isdigit(static_cast<unsigned char>(t[k]))) {
            digits = true;
        } else {
            fail(ErrorKind::ParseError, "not a rational number: \"" + s + "\"");
        }
    }
    if (!digits) fail(ErrorKind::ParseError, "not a rational number: \"" + s + "\"");
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    mpq_class q;
    if (q.set_str(t, 10) != 0) fail(ErrorKind::ParseError, "not a rational number: \"" + s + "\"");
    if (q.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
}

inline FieldElem elem_from_json(const Field& f, const json& j) {
    if (f.kind() == FieldKind::Extension && j.is_array()) {
        if (j.size() > f.degree()) fail(ErrorKind::ParseError, "too many coefficients for " + f.to_string());
        std::vector<FieldElem> c;
        for (const auto& e : j) c.push_back(elem_from_json(f.base(), e));
        while (c.size() < f.degree()) c.push_back(f.base().zero());
        return f.from_coeffs(std::move(c));
    }
    if (j.is_number_integer()) {
        return f.from_mpz(mpz_class(j.dump()));
    }
    if (j.is_string()) {
        const mpq_class q = parse_rational(j.get<std::string>());
        return f.from_rational(q);
    }
    fail(ErrorKind::ParseError, "cannot read a field element of " + f.to_string() + " from " + j.dump());
}

// Polynomial in x with integer or rational coefficients, e.g. "x^2 - 2",
// "3x^3 + 1/2*x - 7".
inline Poly parse_poly_text(const Field& f, const std::string& text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t.empty()) fail(ErrorKind::ParseError, "empty polynomial");
    std::vector<FieldElem> coeffs;
    auto add = [&](std::size_t deg, const FieldElem& c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, f.zero());
        coeffs[deg] = coeffs[deg] + c;
    };
    std::size_t pos = 0;
    auto digits = [&] {
        const std::size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        return t.substr(start, pos - start);
    };
    while (pos < t.size()) {
        bool neg = false;
        if (t[pos] == '+' || t[pos] == '-') {
            neg = t[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            fail(ErrorKind::ParseError, "expected + or - in \"" + text + "\"");
        }
        std::string num = digits();
        if (!num.empty() && pos < t.size() && t[pos] == '/') {
            ++pos;
            const std::string den = digits();
            if (den.empty()) fail(ErrorKind::ParseError, "bad fraction in \"" + text + "\"");
            num += "/" + den;
        }
        FieldElem c = num.empty() ? f.one() : f.from_rational(parse_rational(num));
        if (neg) c = -c;
        std::size_t deg = 0;
        if (pos < t.size() && t[pos] == '*') {
            ++pos;
            if (pos >= t.size() || t[pos] != 'x') fail(ErrorKind::ParseError, "expected x after * in \"" + text + "\"");
        }
        if (pos < t.size() && t[pos] == 'x') {
            ++pos;
            deg = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                const std::string e = digits();
                if (e.empty() || e.size() > 4) fail(ErrorKind::ParseError, "bad exponent in \"" + text + "\"");
                deg = std::stoul(e);
            }
        } else if (num.empty()) {
            fail(ErrorKind::ParseError, "missing term in \"" + text + "\"");
        }
        add(deg, c);
    }
    return Poly(f, std::move(coeffs));
}

inline json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(elem_to_json(c));
    return arr;
}

inline Poly poly_from_json(const Field& f, const json& j) {
    if (j.is_string()) return parse_poly_text(f, j.get<std::string>());
    if (!j.is_array()) fail(ErrorKind::ParseError, "polynomial must be a coefficient array or a string");
    std::vector<FieldElem> c;
    for (const auto& e : j) c.push_back(elem_from_json(f, e));
    return Poly(f, std::move(c));
}

inline Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        fail(ErrorKind::ParseError, "field descriptor needs a \"kind\"");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") {
        if (!j.contains("p") || !j["p"].is_number_unsigned()) fail(ErrorKind::ParseError, "Fp descriptor needs a positive \"p\"");
        const auto p = j["p"].get<std::uint64_t>();
        if (p > (std::uint64_t{1} << 62)) fail(ErrorKind::UnsupportedField, "prime too large");
        return Field::prime(p);
    }
    if (kind == "ext") {
        if (!j.contains("base") || !j.contains("modulus")) fail(ErrorKind::ParseError, "ext descriptor needs base and modulus");
        const Field base = field_from_json(j["base"]);
        const Poly m = poly_from_json(base, j["modulus"]);
        if (!m.is_monic()) fail(ErrorKind::InvalidArgument, "extension modulus must be monic");
        return make_extension(base, m);
    }
    fail(ErrorKind::UnsupportedField, "unknown field kind \"" + kind + "\"");
}

// ---- matrices ----------------------------------------------------------------

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(elem_to_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

inline Matrix matrix_rows_from_json(const Field& f, const json& rows) {
    if (!rows.is_array()) fail(ErrorKind::ParseError, "\"rows\" must be an array of arrays");
    std::vector<Vector> out;
    for (const auto& r : rows) {
        if (!r.is_array()) fail(ErrorKind::ParseError, "\"rows\" must be an array of arrays");
        Vector v;
        for (const auto& e : r) v.push_back(elem_from_json(f, e));
        if (!out.empty() && v.size() != out.front().size()) fail(ErrorKind::ParseError, "ragged matrix rows");
        out.push_back(std::move(v));
    }
    return Matrix::from_rows(f, out);
}

/// {"field": ..., "rows": [[...]]} or {"field": ..., "companion": poly}.
inline Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field")) fail(ErrorKind::ParseError, "matrix file needs \"field\"");
    const Field f = field_from_json(j["field"]);
    if (j.contains("rows")) return matrix_rows_from_json(f, j["rows"]);
    if (j.contains("companion")) {
        const Poly p = poly_from_json(f, j["companion"]);
        if (!p.is_monic() || p.degree() < 1) fail(ErrorKind::InvalidArgument, "companion needs a monic polynomial");
        return companion(p);
    }
    fail(ErrorKind::ParseError, "matrix file needs \"rows\" or \"companion\"");
}

inline json matrix_file_json(const Matrix& m) { return {{"field", field_to_json(m.field())}, {"rows", matrix_to_json(m)}}; }

// ---- types -------------------------------------------------------------------

inline json partition_to_json(const Partition& p) { return p.parts(); }

inline json cycle_type_to_json(const CycleType& ct) {
    json arr = json::array();
    for (const auto& t : ct.terms) {
        arr.push_back({{"poly", poly_to_json(t.poly)}, {"text", t.poly.to_string()},
                       {"partition", partition_to_json(t.partition)}});
    }
    return arr;
}

inline json green_type_to_json(const GreenType& gt) {
    json arr = json::array();
    for (const auto& t : gt.terms) arr.push_back({{"degree", t.degree}, {"partition", partition_to_json(t.partition)}});
    return arr;
}

inline json generalized_type_to_json(const GeneralizedType& gt) {
    json arr = json::array();
    for (const auto& t : gt.terms) {
        arr.push_back({{"class_rep", poly_to_json(t.poly)}, {"text", t.poly.to_string()},
                       {"partition", partition_to_json(t.partition)}});
    }
    return arr;
}

inline json certificate_to_json(const ConjugacyCertificate& c) {
    json out = {{"verdict", c.verdict}};
    out["p"] = c.p ? poly_to_json(*c.p) : json(nullptr);
    out["q"] = c.q ? poly_to_json(*c.q) : json(nullptr);
    out["p_text"] = c.p ? json(c.p->to_string()) : json(nullptr);
    out["q_text"] = c.q ? json(c.q->to_string()) : json(nullptr);
    out["conjugator"] = c.conjugator ? matrix_to_json(*c.conjugator) : json(nullptr);
    out["generalized_type_x"] = generalized_type_to_json(c.type_x);
    out["generalized_type_y"] = generalized_type_to_json(c.type_y);
    return out;
}

// ---- permutations ------------------------------------------------------------

/// Cycle notation string or JSON image array.
inline Permutation permutation_from_json(const json& j, std::size_t n = 0) {
    if (j.is_string()) return Permutation::parse_cycles(j.get<std::string>(), n);
    if (j.is_array()) {
        std::vector<std::size_t> imgs;
        for (const auto& e : j) {
            if (!e.is_number_unsigned()) fail(ErrorKind::ParseError, "image arrays hold positive integers");
            imgs.push_back(e.get<std::size_t>());
        }
        if (n != 0 && imgs.size() != n) fail(ErrorKind::SizeMismatch, "image array length differs from n");
        return Permutation::from_images(imgs);
    }
    fail(ErrorKind::ParseError, "permutation must be cycle notation or an image array");
}

/// Reads "(1 2)(3 4)" or "[2,1,4,3]".
inline Permutation permutation_from_text(const std::string& s, std::size_t n = 0) {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '[') {
        json j;
        try {
            j = json::parse(s);
        } catch (const json::exception& e) {
            fail(ErrorKind::ParseError, e.what());
        }
        return permutation_from_json(j, n);
    }
    return Permutation::parse_cycles(s, n);
}

inline json variation_report_to_json(const VariationReport& r) {
    return {{"equal", r.equal}, {"kind", to_string(r.kind)}, {"variation", r.variation}};
}

inline json error_to_json(ErrorKind k, const std::string& message) {
    return {{"error", {{"kind", to_string(k)}, {"message", message}}}};
}

}  // namespace gentype::io

#endif  // GENTYPE_JSON_IO_HPP
