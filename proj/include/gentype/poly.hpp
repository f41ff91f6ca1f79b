#ifndef GENTYPE_POLY_HPP
#define GENTYPE_POLY_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace gentype {

/// Dense univariate polynomial, constant term first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(Field f) : f_(std::move(f)) {}
    Poly(Field f, std::vector<FieldElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        for (auto& c : c_) {
            if (c.field() != f_) c = f_.embed(c);
        }
        detail::trim(c_);
    }

    static Poly x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
    static Poly constant(const FieldElem& c) { return Poly(c.field(), {c}); }
    static Poly monomial(const FieldElem& c, std::size_t deg) {
        std::vector<FieldElem> v(deg + 1, c.field().zero());
        v[deg] = c;
        return Poly(c.field(), std::move(v));
    }
    /// Integer coefficients, constant term first.
    static Poly from_ints(const Field& f, const std::vector<long long>& coeffs) {
        std::vector<FieldElem> v;
        v.reserve(coeffs.size());
        for (long long c : coeffs) v.push_back(f.from_int(c));
        return Poly(f, std::move(v));
    }

    const Field& field() const noexcept { return f_; }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    FieldElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
    FieldElem leading() const { return c_.empty() ? f_.zero() : c_.back(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Poly monic() const {
        if (c_.empty() || c_.back().is_one()) return *this;
        const FieldElem inv = c_.back().inv();
        std::vector<FieldElem> v = c_;
        for (auto& e : v) e = e * inv;
        return Poly(f_, std::move(v));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(f_);
        std::vector<FieldElem> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * f_.from_int(static_cast<long long>(i)));
        return Poly(f_, std::move(v));
    }

    FieldElem eval(const FieldElem& a) const {
        const Field& g = a.field();
        FieldElem acc = g.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + g.embed(c_[i]);
        return acc;
    }

    /// This polynomial with coefficients lifted into an overfield.
    Poly lift_to(const Field& g) const {
        std::vector<FieldElem> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(g.embed(c));
        return Poly(g, std::move(v));
    }

    Poly operator-() const {
        std::vector<FieldElem> v = c_;
        for (auto& e : v) e = -e;
        return Poly(f_, std::move(v));
    }

    Poly scaled(const FieldElem& s) const {
        std::vector<FieldElem> v = c_;
        for (auto& e : v) e = e * s;
        return Poly(f_, std::move(v));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_same(a, b);
        return Poly(a.f_, detail::vec_add(a.c_, b.c_));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        check_same(a, b);
        return Poly(a.f_, detail::vec_sub(a.c_, b.c_));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_same(a, b);
        return Poly(a.f_, detail::vec_mul(a.c_, b.c_));
    }
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        check_same(a, b);
        if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
        auto [q, r] = detail::vec_divmod(a.c_, b.c_);
        return {Poly(a.f_, std::move(q)), Poly(a.f_, std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const auto& c = c_[i];
            if (c.is_zero()) continue;
            std::string cs = c.to_string();
            bool neg = false;
            if (f_.kind() == FieldKind::Rationals && cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            const bool unit = c.is_one();
            if (f_.kind() == FieldKind::Extension && !unit && cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            if (i == 0) {
                s += cs;
            } else {
                if (!unit) s += cs + "*";
                s += i == 1 ? var : var + "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    static void check_same(const Poly& a, const Poly& b) {
        if (a.f_ != b.f_) {
            fail(ErrorKind::CtxMismatch, "polynomials over " + a.f_.to_string() + " and " + b.f_.to_string());
        }
    }

    Field f_;
    std::vector<FieldElem> c_;
};

/// Deterministic order: by degree, then coefficients from the constant term up.
inline bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == b.coeffs()[i]) continue;
        return canonical_less(a.coeffs()[i], b.coeffs()[i]);
    }
    return false;
}

inline Poly pow(const Poly& a, std::size_t e) {
    Poly r = Poly::constant(a.field().one());
    for (std::size_t i = 0; i < e; ++i) r = r * a;
    return r;
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    if (a.field() != b.field()) fail(ErrorKind::CtxMismatch, "poly_gcd over different fields");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct XgcdResult {
    Poly g;  // monic
    Poly s;
    Poly t;  // s*a + t*b = g
};

inline XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) fail(ErrorKind::CtxMismatch, "poly_xgcd over different fields");
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f.one()), s1(f);
    Poly t0(f), t1 = Poly::constant(f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = s0 - q * s1;
        Poly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const FieldElem inv = r0.leading().inv();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Inverse of `a` modulo `m`; DivisionByZero when they are not coprime.
inline Poly poly_inverse_mod(const Poly& a, const Poly& m) {
    auto x = poly_xgcd(a % m, m);
    if (!x.g.is_one()) fail(ErrorKind::DivisionByZero, "polynomial is not invertible modulo " + m.to_string());
    return x.s % m;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly poly_powmod(const Poly& a, const mpz_class& e, const Poly& m) {
    if (sgn(e) < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
    Poly result = Poly::constant(a.field().one()) % m;
    const Poly base = a % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = poly_mulmod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_mulmod(result, base, m);
    }
    return result;
}

/// r(inner) reduced modulo m, by Horner's rule.
inline Poly poly_compose_mod(const Poly& r, const Poly& inner, const Poly& m) {
    if (r.field() != inner.field() || r.field() != m.field()) fail(ErrorKind::CtxMismatch, "poly_compose_mod");
    if (m.is_zero()) fail(ErrorKind::DivisionByZero, "compose modulo zero");
    const Poly in = inner % m;
    Poly acc(r.field());
    for (std::size_t i = r.coeffs().size(); i-- > 0;) {
        acc = poly_mulmod(acc, in, m) + Poly::constant(r.coeffs()[i]);
    }
    return acc % m;
}

/// r(inner) without reduction.
inline Poly poly_compose(const Poly& r, const Poly& inner) {
    if (r.field() != inner.field()) fail(ErrorKind::CtxMismatch, "poly_compose");
    Poly acc(r.field());
    for (std::size_t i = r.coeffs().size(); i-- > 0;) acc = acc * inner + Poly::constant(r.coeffs()[i]);
    return acc;
}

/// The unique p with deg p < deg(prod moduli) and p = residues[i] mod moduli[i].
inline Poly poly_crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli) {
    if (residues.empty() || residues.size() != moduli.size()) {
        fail(ErrorKind::InvalidArgument, "poly_crt needs equally many residues and moduli, at least one");
    }
    const Field& f = moduli[0].field();
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i].field() != f || residues[i].field() != f) fail(ErrorKind::CtxMismatch, "poly_crt");
        if (moduli[i].is_zero()) fail(ErrorKind::NonCoprimeModuli, "zero modulus");
    }
    Poly acc = residues[0] % moduli[0];
    Poly mod = moduli[0];
    for (std::size_t i = 1; i < moduli.size(); ++i) {
        auto x = poly_xgcd(mod, moduli[i]);
        if (!x.g.is_one()) fail(ErrorKind::NonCoprimeModuli, "moduli share the factor " + x.g.to_string());
        // acc + mod * ((res_i - acc) * inv(mod) mod m_i)
        const Poly inv = x.s % moduli[i];
        const Poly delta = ((residues[i] - acc) * inv) % moduli[i];
        acc = acc + mod * delta;
        mod = mod * moduli[i];
        acc = acc % mod;
    }
    return acc;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& v) { return os << v.to_string(); }

}  // namespace gentype

#endif  // GENTYPE_POLY_HPP
