#ifndef GENTYPE_FIELD_HPP
#define GENTYPE_FIELD_HPP

// Exact field contexts: Q, F_p and simple extensions base[x]/(f), possibly
// stacked into towers. Elements carry their context and are always stored in
// canonical form, so equality is representational.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"

namespace gentype {

enum class FieldKind { Rationals, PrimeField, Extension };

class FieldElem;
struct FieldData;

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % d == 0) return n == d;
    }
    mpz_class z(std::to_string(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

/// Shared, immutable handle to a field of computation.
class Field {
public:
    Field() = default;

    static Field rationals();
    static Field prime(std::uint64_t p);
    /// `modulus` is monic over `base`, constant term first. Irreducibility is
    /// not checked here; make_extension() is the checked entry point.
    static Field extension_unchecked(const Field& base, std::vector<FieldElem> modulus);

    bool valid() const noexcept { return d_ != nullptr; }
    FieldKind kind() const;
    std::uint64_t characteristic() const;
    std::size_t degree() const;
    std::size_t absolute_degree() const;
    bool is_finite() const;
    const mpz_class& order() const;
    const Field& base() const;
    const std::vector<FieldElem>& modulus() const;
    /// The prime field (Q or F_p) at the bottom of the tower.
    Field prime_field() const;
    /// True when `sub` is this field or appears somewhere below it in the tower.
    bool contains_subfield(const Field& sub) const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long long v) const;
    FieldElem from_mpz(const mpz_class& v) const;
    FieldElem from_rational(const mpq_class& v) const;
    FieldElem from_coeffs(std::vector<FieldElem> coeffs) const;
    FieldElem generator() const;
    /// Lift an element of a subfield in the tower into this field.
    FieldElem embed(const FieldElem& a) const;

    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    explicit Field(std::shared_ptr<const FieldData> d) : d_(std::move(d)) {}
    const FieldData& data() const;

    std::shared_ptr<const FieldData> d_;
};

class FieldElem {
public:
    FieldElem() = default;

    const Field& field() const noexcept { return f_; }
    bool valid() const noexcept { return f_.valid(); }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const;
    std::uint64_t residue() const;
    /// Coefficients over the immediate base, length = degree of the extension.
    const std::vector<FieldElem>& coeffs() const;

    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(const mpz_class& e) const;
    FieldElem pow(std::uint64_t e) const { return pow(mpz_class(std::to_string(e))); }

    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
    FieldElem& operator/=(const FieldElem& b) { return *this = *this / b; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    std::string to_string() const;

private:
    using Repr = std::variant<std::monostate, mpq_class, std::uint64_t, std::vector<FieldElem>>;
    FieldElem(Field f, Repr r) : f_(std::move(f)), v_(std::move(r)) {}

    Field f_;
    Repr v_;

    friend class Field;
};

struct FieldData {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0;
    Field base;
    std::vector<FieldElem> modulus;
    std::size_t degree = 1;
    std::size_t absolute_degree = 1;
    mpz_class order = 0;
};

namespace detail {

// Dense coefficient vectors over a single field, constant term first. These
// back extension-field arithmetic and are reused by Poly.
using CoeffVec = std::vector<FieldElem>;

inline void trim(CoeffVec& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline CoeffVec vec_add(const CoeffVec& a, const CoeffVec& b) {
    CoeffVec r = a.size() >= b.size() ? a : b;
    const CoeffVec& s = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    trim(r);
    return r;
}

inline CoeffVec vec_sub(const CoeffVec& a, const CoeffVec& b) {
    CoeffVec r = a;
    if (r.size() < b.size()) {
        r.reserve(b.size());
        for (std::size_t i = r.size(); i < b.size(); ++i) r.push_back(b[i].field().zero());
    }
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    trim(r);
    return r;
}

inline CoeffVec vec_mul(const CoeffVec& a, const CoeffVec& b) {
    if (a.empty() || b.empty()) return {};
    CoeffVec r(a.size() + b.size() - 1, a[0].field().zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    trim(r);
    return r;
}

/// Division with remainder; `b` must be nonzero.
inline std::pair<CoeffVec, CoeffVec> vec_divmod(const CoeffVec& a, const CoeffVec& b) {
    if (b.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    CoeffVec r = a;
    trim(r);
    if (r.size() < b.size()) return {CoeffVec{}, r};
    const FieldElem lc_inv = b.back().inv();
    const bool monic = b.back().is_one();
    CoeffVec q(r.size() - b.size() + 1, b[0].field().zero());
    for (std::size_t i = r.size(); i-- >= b.size();) {
        if (r[i].is_zero()) continue;
        FieldElem c = monic ? r[i] : r[i] * lc_inv;
        std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = r[shift + j] - c * b[j];
    }
    trim(q);
    trim(r);
    return {q, r};
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
inline CoeffVec vec_inverse_mod(const CoeffVec& a, const CoeffVec& m) {
    CoeffVec r0 = m, r1 = a;
    trim(r1);
    if (r1.empty()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    const FieldElem one = m[0].field().one();
    CoeffVec s0, s1{one};
    while (r1.size() > 1) {
        auto [q, r] = vec_divmod(r0, r1);
        CoeffVec s = vec_sub(s0, vec_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) fail(ErrorKind::DivisionByZero, "element is a zero divisor");
    const FieldElem c = r1[0].inv();
    for (auto& e : s1) e = e * c;
    return vec_divmod(s1, m).second;
}

inline std::mutex& prime_field_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Field

inline const FieldData& Field::data() const {
    if (!d_) fail(ErrorKind::InvalidArgument, "use of an empty field handle");
    return *d_;
}

inline Field Field::rationals() {
    static const Field q = [] {
        auto d = std::make_shared<FieldData>();
        d->kind = FieldKind::Rationals;
        return Field(std::move(d));
    }();
    return q;
}

inline Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 62)) fail(ErrorKind::TooLarge, "prime modulus too large");
    if (!is_prime_u64(p)) fail(ErrorKind::CompositeModulus, "F_" + std::to_string(p) + " is not a field");
    static std::map<std::uint64_t, Field> cache;
    std::lock_guard<std::mutex> lock(detail::prime_field_mutex());
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto d = std::make_shared<FieldData>();
    d->kind = FieldKind::PrimeField;
    d->p = p;
    d->order = mpz_class(std::to_string(p));
    Field f(std::move(d));
    cache.emplace(p, f);
    return f;
}

inline Field Field::extension_unchecked(const Field& base, std::vector<FieldElem> modulus) {
    detail::trim(modulus);
    if (modulus.size() < 2) fail(ErrorKind::InvalidArgument, "extension modulus must have degree >= 1");
    for (const auto& c : modulus) {
        if (c.field() != base) fail(ErrorKind::CtxMismatch, "modulus coefficients are not over the base field");
    }
    if (!modulus.back().is_one()) fail(ErrorKind::InvalidArgument, "extension modulus must be monic");
    auto d = std::make_shared<FieldData>();
    d->kind = FieldKind::Extension;
    d->p = base.characteristic();
    d->base = base;
    d->degree = modulus.size() - 1;
    d->absolute_degree = d->degree * base.absolute_degree();
    if (base.is_finite()) {
        mpz_pow_ui(d->order.get_mpz_t(), base.order().get_mpz_t(), d->degree);
    }
    d->modulus = std::move(modulus);
    return Field(std::move(d));
}

inline FieldKind Field::kind() const { return data().kind; }
inline std::uint64_t Field::characteristic() const { return data().p; }
inline std::size_t Field::degree() const { return data().degree; }
inline std::size_t Field::absolute_degree() const { return data().absolute_degree; }
inline bool Field::is_finite() const { return data().p != 0; }

inline const mpz_class& Field::order() const {
    if (!is_finite()) fail(ErrorKind::UnsupportedField, "order of an infinite field");
    return data().order;
}

inline const Field& Field::base() const {
    if (kind() != FieldKind::Extension) fail(ErrorKind::NotAnExtension, to_string() + " is not an extension");
    return data().base;
}

inline const std::vector<FieldElem>& Field::modulus() const {
    if (kind() != FieldKind::Extension) fail(ErrorKind::NotAnExtension, to_string() + " is not an extension");
    return data().modulus;
}

inline Field Field::prime_field() const {
    Field f = *this;
    while (f.kind() == FieldKind::Extension) f = f.base();
    return f;
}

inline bool Field::contains_subfield(const Field& sub) const {
    Field f = *this;
    while (true) {
        if (f == sub) return true;
        if (f.kind() != FieldKind::Extension) return false;
        f = f.base();
    }
}

inline bool operator==(const Field& a, const Field& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    const FieldData& x = *a.d_;
    const FieldData& y = *b.d_;
    if (x.kind != y.kind || x.p != y.p || x.degree != y.degree) return false;
    if (x.kind != FieldKind::Extension) return true;
    return x.base == y.base && x.modulus == y.modulus;
}

inline FieldElem Field::zero() const {
    switch (kind()) {
        case FieldKind::Rationals: return FieldElem(*this, mpq_class(0));
        case FieldKind::PrimeField: return FieldElem(*this, std::uint64_t{0});
        case FieldKind::Extension: break;
    }
    return FieldElem(*this, std::vector<FieldElem>(degree(), base().zero()));
}

inline FieldElem Field::one() const { return from_int(1); }

inline FieldElem Field::from_int(long long v) const {
    switch (kind()) {
        case FieldKind::Rationals: return FieldElem(*this, mpq_class(mpz_class(std::to_string(v))));
        case FieldKind::PrimeField: {
            const auto p = static_cast<long long>(characteristic());
            long long r = v % p;
            if (r < 0) r += p;
            return FieldElem(*this, static_cast<std::uint64_t>(r));
        }
        case FieldKind::Extension: break;
    }
    return embed(base().from_int(v));
}

inline FieldElem Field::from_mpz(const mpz_class& v) const {
    switch (kind()) {
        case FieldKind::Rationals: return FieldElem(*this, mpq_class(v));
        case FieldKind::PrimeField: {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), characteristic());
            return FieldElem(*this, static_cast<std::uint64_t>(r.get_ui()));
        }
        case FieldKind::Extension: break;
    }
    return embed(base().from_mpz(v));
}

inline FieldElem Field::from_rational(const mpq_class& v) const {
    if (kind() == FieldKind::Rationals) {
        mpq_class c = v;
        c.canonicalize();
        return FieldElem(*this, std::move(c));
    }
    return from_mpz(v.get_num()) / from_mpz(v.get_den());
}

inline FieldElem Field::from_coeffs(std::vector<FieldElem> coeffs) const {
    if (kind() != FieldKind::Extension) fail(ErrorKind::NotAnExtension, "from_coeffs on a non-extension field");
    for (const auto& c : coeffs) {
        if (c.field() != base()) fail(ErrorKind::CtxMismatch, "coefficient not over the base field");
    }
    detail::trim(coeffs);
    if (coeffs.size() > degree()) coeffs = detail::vec_divmod(coeffs, modulus()).second;
    coeffs.resize(degree(), base().zero());
    return FieldElem(*this, std::move(coeffs));
}

inline FieldElem Field::generator() const {
    std::vector<FieldElem> c(degree(), base().zero());
    if (degree() == 1) {
        // x reduced modulo a linear modulus x + c0 is -c0.
        c[0] = -modulus()[0];
    } else {
        c[1] = base().one();
    }
    return FieldElem(*this, std::move(c));
}

inline FieldElem Field::embed(const FieldElem& a) const {
    if (a.field() == *this) return a;
    if (kind() != FieldKind::Extension || !contains_subfield(a.field())) {
        fail(ErrorKind::CtxMismatch, "cannot embed an element of " + a.field().to_string() + " into " + to_string());
    }
    std::vector<FieldElem> c(degree(), base().zero());
    c[0] = base().embed(a);
    return FieldElem(*this, std::move(c));
}

inline std::string Field::to_string() const {
    if (!d_) return "<none>";
    switch (kind()) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::PrimeField: return "F_" + std::to_string(characteristic());
        case FieldKind::Extension: break;
    }
    std::string s = base().to_string() + "[x]/(";
    bool first = true;
    for (std::size_t i = modulus().size(); i-- > 0;) {
        const auto& c = modulus()[i];
        if (c.is_zero()) continue;
        if (!first) s += " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs.find_first_of(" /-") != std::string::npos) cs = "(" + cs + ")";
        if (i == 0) {
            s += cs;
            continue;
        }
        if (!c.is_one()) s += cs + "*";
        s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// FieldElem

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) fail(ErrorKind::DivisionByZero, "division by zero in F_" + std::to_string(p));
    // extended Euclid on signed 128-bit to stay exact for p < 2^62
    __int128 t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

inline void check_same(const FieldElem& a, const FieldElem& b) {
    if (!a.valid() || !b.valid()) fail(ErrorKind::InvalidArgument, "use of an uninitialised field element");
    if (a.field() != b.field()) {
        fail(ErrorKind::CtxMismatch, "elements of " + a.field().to_string() + " and " + b.field().to_string());
    }
}

}  // namespace detail

inline bool FieldElem::is_zero() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    if (auto* r = std::get_if<std::uint64_t>(&v_)) return *r == 0;
    if (auto* c = std::get_if<std::vector<FieldElem>>(&v_)) {
        for (const auto& e : *c) {
            if (!e.is_zero()) return false;
        }
        return true;
    }
    fail(ErrorKind::InvalidArgument, "use of an uninitialised field element");
}

inline bool FieldElem::is_one() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
    if (auto* r = std::get_if<std::uint64_t>(&v_)) return *r == 1;
    if (auto* c = std::get_if<std::vector<FieldElem>>(&v_)) {
        if (!(*c)[0].is_one()) return false;
        for (std::size_t i = 1; i < c->size(); ++i) {
            if (!(*c)[i].is_zero()) return false;
        }
        return true;
    }
    fail(ErrorKind::InvalidArgument, "use of an uninitialised field element");
}

inline const mpq_class& FieldElem::rational() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
    fail(ErrorKind::CtxMismatch, "element is not rational");
}

inline std::uint64_t FieldElem::residue() const {
    if (auto* r = std::get_if<std::uint64_t>(&v_)) return *r;
    fail(ErrorKind::CtxMismatch, "element is not in a prime field");
}

inline const std::vector<FieldElem>& FieldElem::coeffs() const {
    if (auto* c = std::get_if<std::vector<FieldElem>>(&v_)) return *c;
    fail(ErrorKind::NotAnExtension, "element is not in an extension field");
}

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    detail::check_same(a, b);
    switch (a.f_.kind()) {
        case FieldKind::Rationals: return FieldElem(a.f_, mpq_class(a.rational() + b.rational()));
        case FieldKind::PrimeField: {
            const std::uint64_t p = a.f_.characteristic();
            std::uint64_t s = a.residue() + b.residue();
            if (s >= p) s -= p;
            return FieldElem(a.f_, s);
        }
        case FieldKind::Extension: break;
    }
    std::vector<FieldElem> c = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + bc[i];
    return FieldElem(a.f_, std::move(c));
}

inline FieldElem FieldElem::operator-() const {
    switch (f_.kind()) {
        case FieldKind::Rationals: return FieldElem(f_, mpq_class(-rational()));
        case FieldKind::PrimeField: {
            const std::uint64_t r = residue();
            return FieldElem(f_, r == 0 ? std::uint64_t{0} : f_.characteristic() - r);
        }
        case FieldKind::Extension: break;
    }
    std::vector<FieldElem> c = coeffs();
    for (auto& e : c) e = -e;
    return FieldElem(f_, std::move(c));
}

inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    detail::check_same(a, b);
    switch (a.f_.kind()) {
        case FieldKind::Rationals: return FieldElem(a.f_, mpq_class(a.rational() * b.rational()));
        case FieldKind::PrimeField:
            return FieldElem(a.f_, detail::mulmod(a.residue(), b.residue(), a.f_.characteristic()));
        case FieldKind::Extension: break;
    }
    auto prod = detail::vec_mul(a.coeffs(), b.coeffs());
    return a.f_.from_coeffs(std::move(prod));
}

inline FieldElem FieldElem::inv() const {
    switch (f_.kind()) {
        case FieldKind::Rationals:
            if (is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in Q");
            return FieldElem(f_, mpq_class(1 / rational()));
        case FieldKind::PrimeField: return FieldElem(f_, detail::invmod(residue(), f_.characteristic()));
        case FieldKind::Extension: break;
    }
    if (is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in " + f_.to_string());
    auto c = detail::vec_inverse_mod(coeffs(), f_.modulus());
    return f_.from_coeffs(std::move(c));
}

inline FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    detail::check_same(a, b);
    return a * b.inv();
}

inline FieldElem FieldElem::pow(const mpz_class& e) const {
    if (sgn(e) < 0) return inv().pow(mpz_class(-e));
    FieldElem result = f_.one();
    FieldElem base = *this;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
    }
    return result;
}

inline bool operator==(const FieldElem& a, const FieldElem& b) {
    if (!a.valid() || !b.valid()) return a.valid() == b.valid();
    return a.f_ == b.f_ && a.v_ == b.v_;
}

inline std::string FieldElem::to_string() const {
    if (!valid()) return "<none>";
    switch (f_.kind()) {
        case FieldKind::Rationals: return rational().get_str();
        case FieldKind::PrimeField: return std::to_string(residue());
        case FieldKind::Extension: break;
    }
    std::string s;
    const auto& c = coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c[i].to_string();
        if (cs.find_first_of(" /-") != std::string::npos) cs = "(" + cs + ")";
        if (i == 0) {
            s += cs;
            continue;
        }
        if (!c[i].is_one()) s += cs + "*";
        s += i == 1 ? "a" : "a^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

/// Deterministic total order used for canonical sorting. Over Q values are
/// ordered by absolute value with the positive sign first; finite-field
/// residues numerically; extension elements lexicographically from the
/// constant coefficient up.
inline bool canonical_less(const FieldElem& a, const FieldElem& b) {
    detail::check_same(a, b);
    switch (a.field().kind()) {
        case FieldKind::Rationals: {
            const int c = cmp(abs(a.rational()), abs(b.rational()));
            if (c != 0) return c < 0;
            return sgn(a.rational()) > sgn(b.rational());
        }
        case FieldKind::PrimeField: return a.residue() < b.residue();
        case FieldKind::Extension: break;
    }
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == y[i]) continue;
        return canonical_less(x[i], y[i]);
    }
    return false;
}

/// Uniform random element of a finite field; over Q an integer in [-bound, bound].
template <class Rng>
FieldElem random_element(const Field& f, Rng& rng, long long bound = 9) {
    switch (f.kind()) {
        case FieldKind::Rationals: {
            std::uniform_int_distribution<long long> d(-bound, bound);
            return f.from_int(d(rng));
        }
        case FieldKind::PrimeField: {
            std::uniform_int_distribution<std::uint64_t> d(0, f.characteristic() - 1);
            return f.from_int(static_cast<long long>(d(rng)));
        }
        case FieldKind::Extension: break;
    }
    std::vector<FieldElem> c;
    c.reserve(f.degree());
    for (std::size_t i = 0; i < f.degree(); ++i) c.push_back(random_element(f.base(), rng, bound));
    return f.from_coeffs(std::move(c));
}

/// All elements of a finite field, in a fixed order.
inline std::vector<FieldElem> enumerate_field(const Field& f) {
    if (!f.is_finite() || f.order() > 1 << 16) fail(ErrorKind::TooLarge, "field too large to enumerate");
    if (f.kind() == FieldKind::PrimeField) {
        std::vector<FieldElem> out;
        for (std::uint64_t i = 0; i < f.characteristic(); ++i) out.push_back(f.from_int(static_cast<long long>(i)));
        return out;
    }
    const auto base_elems = enumerate_field(f.base());
    std::vector<std::vector<FieldElem>> acc{{}};
    for (std::size_t i = 0; i < f.degree(); ++i) {
        std::vector<std::vector<FieldElem>> next;
        for (const auto& prefix : acc) {
            for (const auto& b : base_elems) {
                auto v = prefix;
                v.push_back(b);
                next.push_back(std::move(v));
            }
        }
        acc = std::move(next);
    }
    std::vector<FieldElem> out;
    out.reserve(acc.size());
    for (auto& c : acc) out.push_back(f.from_coeffs(std::move(c)));
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const FieldElem& v) { return os << v.to_string(); }

}  // namespace gentype

#endif  // GENTYPE_FIELD_HPP
