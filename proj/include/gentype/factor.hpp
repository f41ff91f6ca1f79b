#ifndef GENTYPE_FACTOR_HPP
#define GENTYPE_FACTOR_HPP

// Complete factorisation over Q and over finite fields (prime fields and
// towers above them), checked extension construction, and root finding in
// simple extensions.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "frobenius.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace gentype {

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;
inline constexpr long kMaxRationalFactorDegree = 24;

struct FactorPower {
    Poly poly;  // monic irreducible
    std::size_t multiplicity;
};

struct Factorization {
    FieldElem unit;
    std::vector<FactorPower> factors;  // sorted by poly_less

    Poly expand() const {
        Poly p = Poly::constant(unit);
        for (const auto& fp : factors) p = p * pow(fp.poly, fp.multiplicity);
        return p;
    }
};

namespace detail {

inline void sort_factors(std::vector<FactorPower>& fs) {
    std::sort(fs.begin(), fs.end(), [](const FactorPower& a, const FactorPower& b) {
        if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
        return poly_less(a.poly, b.poly);
    });
    // merge equal factors
    std::vector<FactorPower> out;
    for (auto& f : fs) {
        if (!out.empty() && out.back().poly == f.poly) {
            out.back().multiplicity += f.multiplicity;
        } else {
            out.push_back(std::move(f));
        }
    }
    fs = std::move(out);
}

// ---------------------------------------------------------------------------
// finite fields

inline FieldElem pth_root(const FieldElem& a) {
    const Field& f = a.field();
    if (f.kind() == FieldKind::PrimeField) return a;
    const mpz_class e = f.order() / mpz_class(std::to_string(f.characteristic()));
    return a.pow(e);
}

inline Poly poly_pth_root(const Poly& a) {
    const std::size_t p = a.field().characteristic();
    std::vector<FieldElem> c;
    for (std::size_t i = 0; i < a.coeffs().size(); i += p) c.push_back(pth_root(a.coeffs()[i]));
    return Poly(a.field(), std::move(c));
}

/// Squarefree decomposition of a monic polynomial over a finite field:
/// pairs (coprime squarefree part, multiplicity).
inline std::vector<FactorPower> squarefree_finite(const Poly& f) {
    std::vector<FactorPower> out;
    if (f.degree() < 1) return out;
    const std::size_t p = f.field().characteristic();
    const Poly d = f.derivative();
    if (d.is_zero()) {
        for (auto& fp : squarefree_finite(poly_pth_root(f))) out.push_back({fp.poly, fp.multiplicity * p});
        return out;
    }
    Poly c = poly_gcd(f, d);
    Poly w = f / c;
    std::size_t i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i});
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one()) {
        for (auto& fp : squarefree_finite(poly_pth_root(c.monic()))) out.push_back({fp.poly, fp.multiplicity * p});
    }
    return out;
}

/// Distinct-degree factorisation of a squarefree monic polynomial.
inline std::vector<std::pair<Poly, std::size_t>> distinct_degree(const Poly& f) {
    std::vector<std::pair<Poly, std::size_t>> out;
    const mpz_class& q = f.field().order();
    const Poly x = Poly::x(f.field());
    Poly rest = f;
    Poly h = x % rest;
    for (std::size_t i = 1; rest.degree() >= static_cast<long>(2 * i); ++i) {
        h = poly_powmod(h, q, rest);
        Poly g = poly_gcd(rest, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, static_cast<std::size_t>(rest.degree()));
    return out;
}

template <class Rng>
Poly random_poly_below(const Field& f, long deg, Rng& rng) {
    std::vector<FieldElem> c;
    for (long i = 0; i < deg; ++i) c.push_back(random_element(f, rng));
    return Poly(f, std::move(c));
}

/// Equal-degree splitting of a squarefree monic product of degree-d irreducibles.
template <class Rng>
void equal_degree(const Poly& f, std::size_t d, Rng& rng, std::vector<Poly>& out) {
    if (f.degree() <= static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    const Field& k = f.field();
    const mpz_class& q = k.order();
    const bool even = k.characteristic() == 2;
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    const mpz_class half = (qd - 1) / 2;
    const std::size_t trace_len = k.absolute_degree() * d;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Poly a = random_poly_below(k, f.degree(), rng);
        if (a.degree() < 1) continue;
        Poly b(k);
        if (even) {
            // absolute trace a + a^2 + ... + a^(2^(md-1))
            Poly t = a;
            b = a;
            for (std::size_t i = 1; i < trace_len; ++i) {
                t = poly_mulmod(t, t, f);
                b = b + t;
            }
        } else {
            b = poly_powmod(a, half, f) - Poly::constant(k.one());
        }
        Poly g = poly_gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
    fail(ErrorKind::Internal, "equal-degree splitting did not converge");
}

inline Factorization factor_finite(const Poly& a, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Factorization out{a.leading(), {}};
    const Poly f = a.monic();
    for (const auto& sf : squarefree_finite(f)) {
        for (const auto& [part, d] : distinct_degree(sf.poly)) {
            std::vector<Poly> irr;
            equal_degree(part, d, rng, irr);
            for (auto& g : irr) out.factors.push_back({g.monic(), sf.multiplicity});
        }
    }
    sort_factors(out.factors);
    return out;
}

// ---------------------------------------------------------------------------
// integer polynomials for Zassenhaus

using ZPoly = std::vector<mpz_class>;

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

inline ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
    return a;
}

inline ZPoly zadd(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    ztrim(a);
    return a;
}

inline ZPoly zmod(ZPoly a, const mpz_class& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
    return a;
}

inline ZPoly zsymmetric(ZPoly a, const mpz_class& m) {
    const mpz_class half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    ztrim(a);
    return a;
}

inline ZPoly zscale(ZPoly a, const mpz_class& s) {
    for (auto& c : a) c *= s;
    ztrim(a);
    return a;
}

inline mpz_class zcontent(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

/// Primitive part with positive leading coefficient.
inline ZPoly zprimitive(ZPoly a) {
    if (a.empty()) return a;
    mpz_class g = zcontent(a);
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

/// Exact division over Z; nullopt when b does not divide a.
inline std::optional<ZPoly> zdivexact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) return std::nullopt;
    ZPoly r = a;
    if (r.size() < b.size()) {
        if (r.empty()) return ZPoly{};
        return std::nullopt;
    }
    ZPoly q(r.size() - b.size() + 1, 0);
    for (std::size_t i = r.size(); i-- >= b.size();) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
        mpz_class c = r[i] / b.back();
        const std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    }
    ztrim(r);
    if (!r.empty()) return std::nullopt;
    ztrim(q);
    return q;
}

inline Poly z_to_fp(const ZPoly& a, const Field& fp) {
    std::vector<FieldElem> c;
    for (const auto& x : a) c.push_back(fp.from_mpz(x));
    return Poly(fp, std::move(c));
}

inline ZPoly fp_to_z(const Poly& a) {
    ZPoly r;
    for (const auto& c : a.coeffs()) r.emplace_back(std::to_string(c.residue()));
    ztrim(r);
    return r;
}

// One linear Hensel lift of f = g*h (mod p) to mod p^k; g, h monic mod p and
// coprime, f monic mod p^k.
inline std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const Poly& g1, const Poly& h1, std::uint64_t p,
                                           std::size_t k) {
    const Field& fp = g1.field();
    const auto bez = poly_xgcd(g1, h1);
    if (!bez.g.is_one()) fail(ErrorKind::Internal, "Hensel factors are not coprime modulo p");
    const mpz_class pz(std::to_string(p));
    ZPoly g = fp_to_z(g1), h = fp_to_z(h1);
    mpz_class pj = pz;
    for (std::size_t j = 1; j < k; ++j) {
        const mpz_class next = pj * pz;
        ZPoly e = zmod(zsub(f, zmul(g, h)), next);
        for (auto& c : e) c /= pj;
        const Poly ep = z_to_fp(e, fp);
        auto [q, dg] = divmod(bez.t * ep, g1);
        const Poly dh = bez.s * ep + q * h1;
        g = zmod(zadd(g, zscale(fp_to_z(dg), pj)), next);
        h = zmod(zadd(h, zscale(fp_to_z(dh), pj)), next);
        pj = next;
    }
    return {g, h};
}

inline std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<Poly>& us, std::uint64_t p, std::size_t k,
                                       const mpz_class& modulus) {
    if (us.size() == 1) return {zmod(f, modulus)};
    Poly rest = Poly::constant(us[0].field().one());
    for (std::size_t i = 1; i < us.size(); ++i) rest = rest * us[i];
    auto [g, h] = hensel_pair(f, us[0], rest, p, k);
    std::vector<ZPoly> out{g};
    auto tail = hensel_multi(h, std::vector<Poly>(us.begin() + 1, us.end()), p, k, modulus);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

inline std::uint64_t next_prime(std::uint64_t p) {
    do {
        ++p;
    } while (!is_prime_u64(p));
    return p;
}

/// Zassenhaus factorisation of a primitive squarefree integer polynomial.
inline std::vector<ZPoly> zassenhaus(const ZPoly& f, std::uint64_t seed) {
    const long n = static_cast<long>(f.size()) - 1;
    if (n <= 1) return {f};
    if (n > kMaxRationalFactorDegree) {
        fail(ErrorKind::TooLarge, "rational factorisation is capped at degree " + std::to_string(kMaxRationalFactorDegree));
    }
    const mpz_class lc = f.back();

    // pick the prime with the fewest modular factors among a few candidates
    std::uint64_t best_p = 0;
    std::vector<Poly> best_factors;
    std::uint64_t p = 2;
    int good = 0;
    for (int tries = 0; tries < 200 && good < 5; ++tries) {
        p = next_prime(p);
        if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
        const Field fp = Field::prime(p);
        const Poly fm = z_to_fp(f, fp);
        if (!poly_gcd(fm, fm.derivative()).is_one()) continue;
        ++good;
        auto fac = factor_finite(fm, seed);
        if (best_p == 0 || fac.factors.size() < best_factors.size()) {
            best_p = p;
            best_factors.clear();
            for (auto& fpow : fac.factors) best_factors.push_back(fpow.poly);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_p == 0) fail(ErrorKind::Internal, "no suitable prime for Zassenhaus");
    if (best_factors.size() == 1) return {f};

    // coefficient bound for factors scaled by lc
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound += 1;
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    bound = bound * two_n * abs(lc) * 2 + 1;
    const mpz_class pz(std::to_string(best_p));
    std::size_t k = 1;
    mpz_class modulus = pz;
    while (modulus <= bound) {
        modulus *= pz;
        ++k;
    }

    // monic version of f modulo p^k
    mpz_class lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    const ZPoly fmonic = zmod(zscale(f, lc_inv), modulus);
    std::vector<ZPoly> lifted = hensel_multi(fmonic, best_factors, best_p, k, modulus);

    std::vector<ZPoly> result;
    ZPoly rest = f;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{rest.back()};
            for (auto i : idx) cand = zmod(zmul(cand, lifted[i]), modulus);
            cand = zprimitive(zsymmetric(cand, modulus));
            if (auto q = zdivexact(rest, cand)) {
                result.push_back(cand);
                rest = *q;
                for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
                found = true;
                break;
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rest.size() > 1) result.push_back(zprimitive(rest));
    return result;
}

inline Poly z_to_q(const ZPoly& a) {
    const Field q = Field::rationals();
    std::vector<FieldElem> c;
    for (const auto& x : a) c.push_back(q.from_mpz(x));
    return Poly(q, std::move(c));
}

/// Clears denominators: primitive integer polynomial with the same roots.
inline ZPoly q_to_z(const Poly& a) {
    mpz_class l = 1;
    for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
    ZPoly r;
    for (const auto& c : a.coeffs()) r.push_back(mpz_class(c.rational() * l));
    return zprimitive(r);
}

/// Yun's squarefree decomposition over a field of characteristic zero.
inline std::vector<FactorPower> squarefree_char0(const Poly& f) {
    std::vector<FactorPower> out;
    if (f.degree() < 1) return out;
    const Poly fd = f.derivative();
    Poly a = poly_gcd(f, fd);
    Poly b = f.monic() / a;
    Poly c = fd.scaled(f.leading().inv()) / a;
    Poly d = c - b.derivative();
    for (std::size_t i = 1; b.degree() > 0; ++i) {
        Poly g = poly_gcd(b, d);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        if (g.degree() > 0) out.push_back({g.monic(), i});
    }
    return out;
}

inline Factorization factor_rational(const Poly& a, std::uint64_t seed) {
    Factorization out{a.leading(), {}};
    for (const auto& sf : squarefree_char0(a.monic())) {
        for (const auto& z : zassenhaus(q_to_z(sf.poly), seed)) {
            out.factors.push_back({z_to_q(z).monic(), sf.multiplicity});
        }
    }
    sort_factors(out.factors);
    return out;
}

inline bool factorable_field(const Field& f) { return f.kind() == FieldKind::Rationals || f.is_finite(); }

}  // namespace detail

/// Complete factorisation into monic irreducibles over Q, F_p or a finite
/// extension tower over F_p.
inline Factorization poly_factor(const Poly& a, std::uint64_t seed = kDefaultSeed) {
    if (a.is_zero()) fail(ErrorKind::ZeroPolynomial, "factorisation of the zero polynomial");
    if (!detail::factorable_field(a.field())) {
        fail(ErrorKind::UnsupportedField, "factorisation over " + a.field().to_string() + " is not supported");
    }
    if (a.degree() == 0) return {a.leading(), {}};
    if (a.field().kind() == FieldKind::Rationals) return detail::factor_rational(a, seed);
    return detail::factor_finite(a, seed);
}

inline bool is_irreducible(const Poly& a) {
    if (a.degree() < 1) return false;
    if (a.degree() == 1) return true;
    const auto fac = poly_factor(a);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

/// base[x]/(f) for monic irreducible f; the coset of x is the generator.
inline Field make_extension(const Field& base, const Poly& f) {
    if (f.field() != base) fail(ErrorKind::CtxMismatch, "modulus is not over the base field");
    if (f.degree() < 1) fail(ErrorKind::InvalidArgument, "extension modulus must have degree >= 1");
    if (!f.is_monic()) fail(ErrorKind::InvalidArgument, "extension modulus must be monic");
    if (f.degree() > 1 && !is_irreducible(f)) {
        fail(ErrorKind::ReducibleModulus, f.to_string() + " is reducible over " + base.to_string());
    }
    return Field::extension_unchecked(base, f.coeffs());
}

/// A root of g in L = K[x]/(f) together with r over K, deg r < deg f, such
/// that r(generator) is the root.
struct ExtRoot {
    FieldElem root;
    Poly expression;
};

namespace detail {

inline Matrix kronecker_sum(const Matrix& a, const Matrix& b, const FieldElem& s) {
    // a (x) I + s * I (x) b
    const std::size_t m = a.rows(), d = b.rows();
    const Field& f = a.field();
    Matrix out(f, m * d, m * d);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k) out(i * d + k, j * d + k) = out(i * d + k, j * d + k) + a(i, j);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t l = 0; l < d; ++l) {
                if (!b(k, l).is_zero()) out(i * d + k, i * d + l) = out(i * d + k, i * d + l) + s * b(k, l);
            }
        }
    }
    return out;
}

inline std::vector<FieldElem> linear_roots_finite(const Poly& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Field& l = g.field();
    const Poly x = Poly::x(l);
    const Poly gm = g.monic();
    Poly split = poly_gcd(gm, poly_powmod(x, l.order(), gm) - x);
    std::vector<FieldElem> roots;
    if (split.degree() < 1) return roots;
    std::vector<Poly> lin;
    equal_degree(split, 1, rng, lin);
    for (const auto& h : lin) roots.push_back(-h.monic().coeff(0));
    return roots;
}

inline std::vector<FieldElem> linear_roots_number_field(const Poly& g, const Field& l, std::uint64_t seed) {
    const Field& q = l.base();
    Poly gs = g.monic();
    gs = gs / poly_gcd(gs, gs.derivative());
    std::vector<FieldElem> roots;
    if (gs.degree() < 1) return roots;
    const Poly f(q, l.modulus());
    const long d = f.degree();
    const Matrix cg = companion(gs);
    const Matrix cf = companion(f);
    long shift = 0;
    Poly norm(q);
    for (int attempt = 0;; ++attempt) {
        if (attempt > 64) fail(ErrorKind::Internal, "no squarefree norm found");
        shift = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
        norm = charpoly(kronecker_sum(cg, cf, q.from_int(shift)));
        if (poly_gcd(norm, norm.derivative()).is_one()) break;
    }
    const Poly gl = gs.lift_to(l);
    const Poly y_shift = Poly(l, {l.generator() * l.from_int(shift), l.one()});
    for (const auto& fp : poly_factor(norm, seed).factors) {
        if (fp.poly.degree() != d) continue;
        const Poly h = poly_compose(fp.poly.lift_to(l), y_shift);
        const Poly common = poly_gcd(gl, h);
        if (common.degree() == 1) roots.push_back(-common.coeff(0));
    }
    return roots;
}

}  // namespace detail

/// All roots in L = K[x]/(f) of g over K, each with its expression in the
/// generator, sorted by canonical_less on the roots.
inline std::vector<ExtRoot> poly_roots_in_ext(const Poly& g, const Field& l, std::uint64_t seed = kDefaultSeed) {
    if (l.kind() != FieldKind::Extension) fail(ErrorKind::NotAnExtension, l.to_string() + " is not an extension");
    const Field& k = l.base();
    if (g.field() != k) fail(ErrorKind::NotAnExtension, "polynomial is not over the base of " + l.to_string());
    if (g.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    std::vector<FieldElem> roots;
    if (l.is_finite()) {
        roots = detail::linear_roots_finite(g.lift_to(l), seed);
    } else if (k.kind() == FieldKind::Rationals) {
        roots = detail::linear_roots_number_field(g, l, seed);
    } else {
        fail(ErrorKind::UnsupportedField, "root finding over " + l.to_string() + " is not supported");
    }
    std::sort(roots.begin(), roots.end(), canonical_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::vector<ExtRoot> out;
    for (auto& r : roots) {
        Poly expr(k, r.coeffs());
        out.push_back({std::move(r), std::move(expr)});
    }
    return out;
}

}  // namespace gentype

#endif  // GENTYPE_FACTOR_HPP
