#ifndef GENTYPE_VERIFY_HPP
#define GENTYPE_VERIFY_HPP

// Randomized and exhaustive verification suites. Instances are generated
// up front from the seed, run on a worker pool, and reported in instance
// order, so output does not depend on the number of workers.

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "centralizer.hpp"
#include "json_io.hpp"
#include "perm.hpp"
#include "random.hpp"

namespace gentype::verify {

using io::json;

struct Options {
    std::uint64_t seed = kDefaultSeed;
    std::size_t scale = 0;  // 0 selects the suite default
    unsigned jobs = 1;
};

struct Report {
    std::string suite;
    std::size_t instances_checked = 0;
    std::vector<json> failures;
    double elapsed_seconds = 0.0;

    bool passed() const { return failures.empty(); }

    json to_json(bool with_timing = false) const {
        json out = {{"suite", suite}, {"instances_checked", instances_checked}, {"passed", passed()},
                    {"failures", failures}};
        if (with_timing) out["elapsed_seconds"] = elapsed_seconds;
        return out;
    }
};

/// A unit of work; returns counterexample records, empty when it passes.
struct Instance {
    std::size_t weight = 1;  // checks performed
    std::function<std::vector<json>()> run;
};

inline Report run_instances(const std::string& name, const std::vector<Instance>& instances, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::vector<json>> results(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            try {
                results[i] = instances[i].run();
            } catch (const Error& e) {
                results[i] = {json{{"instance", i}, {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}};
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, instances.size()))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    Report rep{name, 0, {}, 0.0};
    for (std::size_t i = 0; i < instances.size(); ++i) {
        rep.instances_checked += instances[i].weight;
        for (auto& f : results[i]) rep.failures.push_back(std::move(f));
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

namespace detail {

inline std::vector<json> single(bool ok, json record) {
    if (ok) return {};
    return {std::move(record)};
}

inline std::size_t scaled(std::size_t base, const Options& o) { return base * std::max<std::size_t>(1, o.scale); }

inline Field small_prime(std::size_t i) {
    static const std::uint64_t primes[] = {2, 3, 5};
    return Field::prime(primes[i % 3]);
}

// Primary matrix of cycle type f^lambda with d |lambda| <= max_dim, randomly conjugated.
struct PrimaryInstance {
    Poly f;
    Partition lambda;
    Matrix m;
};

inline PrimaryInstance random_primary(const Field& k, Rng& rng, std::size_t max_dim = 6) {
    const std::size_t d = uniform_index(rng, 1, 3);
    Poly f = random_irreducible(k, d, rng);
    Partition lambda = random_partition(uniform_index(rng, 1, max_dim / d), rng);
    Matrix m = random_conjugate(primary_model(f, lambda), rng);
    return {std::move(f), std::move(lambda), std::move(m)};
}

// Model matrix over Q with single-digit entries, conjugated by a permutation.
inline Matrix small_rational_structured(std::size_t n, Rng& rng) {
    const Field q = Field::rationals();
    for (;;) {
        Matrix m = random_permutation_matrix(q, n, rng);
        m = inverse(m) * model_matrix(q, random_type(q, n, rng, 2, 1)) * m;
        bool small = true;
        for (std::size_t i = 0; i < n && small; ++i) {
            for (std::size_t j = 0; j < n && small; ++j) small = abs(m(i, j).rational()) <= 9;
        }
        if (small) return m;
    }
}

// All invariant-factor chains d_1 | ... | d_k of total degree n.
inline std::vector<Matrix> similarity_class_representatives(const Field& k, std::size_t n) {
    std::vector<std::vector<Poly>> monic_by_degree(n + 1);
    const auto elems = enumerate_field(k);
    for (std::size_t d = 1; d <= n; ++d) {
        std::vector<std::vector<FieldElem>> acc{{}};
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<std::vector<FieldElem>> next;
            for (const auto& a : acc) {
                for (const auto& e : elems) {
                    auto b = a;
                    b.push_back(e);
                    next.push_back(std::move(b));
                }
            }
            acc = std::move(next);
        }
        for (auto& c : acc) {
            c.push_back(k.one());
            monic_by_degree[d].emplace_back(k, std::move(c));
        }
    }
    std::vector<Matrix> reps;
    std::vector<Poly> chain;
    std::function<void(std::size_t, const Poly&)> rec = [&](std::size_t rest, const Poly& prev) {
        if (rest == 0) {
            std::vector<Matrix> blocks;
            for (const auto& d : chain) blocks.push_back(companion(d));
            reps.push_back(block_diag(k, blocks));
            return;
        }
        for (std::size_t d = std::max<long>(1, prev.degree()); d <= rest; ++d) {
            for (const auto& c : monic_by_degree[d]) {
                if (!(c % prev).is_zero()) continue;
                chain.push_back(c);
                rec(rest - d, c);
                chain.pop_back();
            }
        }
    };
    rec(n, Poly::constant(k.one()));
    return reps;
}

}  // namespace detail

// ---- suites ------------------------------------------------------------------

inline std::vector<Instance> suite_main_theorem_f2(const Options& o) {
    const Field f2 = Field::prime(2);
    const std::size_t top = o.scale == 0 ? 3 : o.scale;
    std::vector<Instance> out;
    for (std::size_t n = std::min<std::size_t>(2, top); n <= top; ++n) {
        auto group = std::make_shared<const std::vector<Matrix>>(enumerate_gl(f2, n));
        auto reps = std::make_shared<const std::vector<Matrix>>(detail::similarity_class_representatives(f2, n));
        for (std::size_t i = 0; i < reps->size(); ++i) {
            for (std::size_t j = i; j < reps->size(); ++j) {
                out.push_back({1, [group, reps, i, j, seed = o.seed] {
                                   const Matrix& x = (*reps)[i];
                                   const Matrix& y = (*reps)[j];
                                   const bool theorem = centralizers_conjugate(x, y, seed).verdict;
                                   const bool oracle = cent_conjugate_bruteforce(x, y, *group);
                                   return detail::single(theorem == oracle,
                                                         {{"x", io::matrix_to_json(x)}, {"y", io::matrix_to_json(y)},
                                                          {"theorem", theorem}, {"oracle", oracle}});
                               }});
            }
        }
    }
    return out;
}

inline std::vector<Instance> suite_centdim(const Options& o) {
    Rng rng(o.seed);
    std::vector<Instance> out;
    const std::size_t count = detail::scaled(200, o);
    auto add = [&](Matrix x) {
        out.push_back({1, [x = std::move(x), seed = o.seed] {
                           const std::size_t dim = centralizer_basis(x).dim;
                           const std::size_t formula = cent_dim_formula(green_type(cycle_type(x, seed)));
                           return detail::single(dim == formula, {{"x", io::matrix_file_json(x)},
                                                                  {"expected", formula}, {"got", dim}});
                       }});
    };
    for (std::size_t fi = 0; fi < 3; ++fi) {
        const Field k = detail::small_prime(fi);
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t n = uniform_index(rng, 1, 6);
            add(i % 2 == 0 ? random_matrix(k, n, rng) : random_conjugate(model_matrix(k, random_type(k, n, rng)), rng));
        }
    }
    const Field q = Field::rationals();
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = uniform_index(rng, 1, 5);
        add(i % 2 == 0 ? random_matrix(q, n, rng, 9) : detail::small_rational_structured(n, rng));
    }
    return out;
}

inline std::vector<Instance> suite_nilpclass(const Options& o) {
    Rng rng(o.seed);
    std::vector<Instance> out;
    const std::size_t count = detail::scaled(100, o);
    for (std::size_t i = 0; i < count; ++i) {
        const Field k = i % 4 == 3 ? Field::rationals() : detail::small_prime(i);
        auto inst = detail::random_primary(k, rng);
        out.push_back({1, [inst = std::move(inst), seed = o.seed] {
                           const auto& [f, lambda, m] = inst;
                           const std::size_t d = static_cast<std::size_t>(f.degree());
                           const CycleType want_m{{TypeTerm{f, lambda}}};
                           const Matrix fm = mat_eval_poly(f, m);
                           const CycleType want_n{{TypeTerm{Poly::x(f.field()), lambda.replicated(d)}}};
                           const CycleType got_m = cycle_type(m, seed);
                           const CycleType got_n = cycle_type(fm, seed);
                           const bool ok = got_m == want_m && is_nilpotent(fm) && got_n == want_n;
                           return detail::single(ok, {{"m", io::matrix_file_json(m)}, {"f", f.to_string()},
                                                      {"lambda", lambda.parts()},
                                                      {"expected", want_n.to_string()}, {"got", got_n.to_string()}});
                       }});
    }
    return out;
}

inline std::vector<Instance> suite_dominance(const Options& o) {
    Rng rng(o.seed);
    std::vector<Instance> out;
    const std::size_t count = detail::scaled(200, o);
    for (std::size_t i = 0; i < count; ++i) {
        const Field k = i % 4 == 3 ? Field::rationals() : detail::small_prime(i);
        auto inst = detail::random_primary(k, rng);
        Poly h = random_poly(k, uniform_index(rng, 0, 4), rng);
        out.push_back({1, [inst = std::move(inst), h = std::move(h), seed = o.seed] {
                           const auto& [f, lambda, x] = inst;
                           const std::size_t d = static_cast<std::size_t>(f.degree());
                           const GreenType gt = green_type(cycle_type(mat_eval_poly(h, x), seed));
                           bool ok = gt.terms.size() == 1;
                           if (ok) {
                               const std::size_t e = gt.terms[0].degree;
                               const Partition& mu = gt.terms[0].partition;
                               ok = d % e == 0 && e * mu.size() == d * lambda.size() &&
                                    dominance_leq(mu.replicated(e), lambda.replicated(d));
                           }
                           return detail::single(ok, {{"x", io::matrix_file_json(x)}, {"h", h.to_string()},
                                                      {"type_x", std::to_string(d) + "^" + lambda.to_string()},
                                                      {"type_hx", gt.to_string()}});
                       }});
    }
    return out;
}

namespace detail {

struct WitnessCase {
    std::vector<TypeTerm> x_terms;
    std::vector<TypeTerm> y_terms;
};

// Two pairs of equivalent polynomials of distinct degrees over a finite
// field, or a single pair when the dimension does not allow two.
inline WitnessCase finite_witness_case(const Field& k, Rng& rng) {
    WitnessCase c;
    std::size_t rest = 6;
    std::set<long> used;
    const std::size_t terms = uniform_index(rng, 1, 2);
    for (std::size_t t = 0; t < terms && rest > 0; ++t) {
        std::size_t d = uniform_index(rng, 1, std::min<std::size_t>(3, rest));
        if (used.count(static_cast<long>(d))) continue;
        used.insert(static_cast<long>(d));
        const Poly f = random_irreducible(k, d, rng);
        Poly g = random_irreducible(k, d, rng);
        for (int tries = 0; tries < 8 && g == f; ++tries) g = random_irreducible(k, d, rng);
        const Partition lambda = random_partition(uniform_index(rng, 1, rest / d), rng);
        rest -= d * lambda.size();
        c.x_terms.push_back({f, lambda});
        c.y_terms.push_back({g, lambda});
    }
    return c;
}

inline WitnessCase rational_shift_case(Rng& rng) {
    const Field q = Field::rationals();
    WitnessCase c;
    const std::size_t d = uniform_index(rng, 2, 3);
    const Poly f = random_irreducible(q, d, rng);
    long long shift = uniform_int(rng, -3, 2);
    if (shift >= 0) ++shift;
    const Poly g = poly_compose(f, Poly::from_ints(q, {shift, 1}));
    const Partition lambda = random_partition(uniform_index(rng, 1, 6 / d), rng);
    c.x_terms.push_back({f, lambda});
    c.y_terms.push_back({g, lambda});
    const std::size_t rest = 6 - d * lambda.size();
    if (rest > 0 && uniform_index(rng, 0, 1) == 1) {
        const Partition mu = random_partition(uniform_index(rng, 1, rest), rng);
        c.x_terms.push_back({Poly::from_ints(q, {-uniform_int(rng, -2, 2), 1}), mu});
        c.y_terms.push_back({Poly::from_ints(q, {-uniform_int(rng, -2, 2), 1}), mu});
    }
    return c;
}

inline WitnessCase rational_sqrt2_case(Rng& rng) {
    const Field q = Field::rationals();
    const long long a = uniform_int(rng, 1, 4), b = uniform_int(rng, 1, 4);
    const Partition lambda = random_partition(uniform_index(rng, 1, 3), rng);
    return {{{Poly::from_ints(q, {-2 * a * a, 0, 1}), lambda}}, {{Poly::from_ints(q, {-2 * b * b, 0, 1}), lambda}}};
}

}  // namespace detail

inline std::vector<Instance> suite_witness_roundtrip(const Options& o) {
    Rng rng(o.seed);
    std::vector<Instance> out;
    const std::size_t count = detail::scaled(100, o);
    for (std::size_t i = 0; i < count; ++i) {
        detail::WitnessCase c;
        switch (i % 4) {
            case 0: c = detail::finite_witness_case(Field::prime(3), rng); break;
            case 1: c = detail::finite_witness_case(Field::prime(5), rng); break;
            case 2: c = detail::rational_shift_case(rng); break;
            default: c = detail::rational_sqrt2_case(rng); break;
        }
        const Field k = c.x_terms.front().poly.field();
        Matrix x = random_conjugate(model_matrix(k, c.x_terms), rng);
        Matrix y = random_conjugate(model_matrix(k, c.y_terms), rng);
        out.push_back({1, [x = std::move(x), y = std::move(y), seed = o.seed] {
                           json rec = {{"x", io::matrix_file_json(x)}, {"y", io::matrix_file_json(y)}};
                           const auto w = witness_polynomials(x, y, seed);
                           if (!w) {
                               rec["got"] = "no witness";
                               return std::vector<json>{rec};
                           }
                           const Matrix px = mat_eval_poly(w->p, x);
                           const bool similar = invariant_factors(px) == invariant_factors(y);
                           const bool back = invariant_factors(mat_eval_poly(w->q, y)) == invariant_factors(x);
                           const bool same_cent = same_matrix_span(x.field(), x.rows(), centralizer_basis(x).basis,
                                                                   centralizer_basis(px).basis);
                           rec["p"] = w->p.to_string();
                           rec["q"] = w->q.to_string();
                           rec["similar"] = similar;
                           rec["q_similar"] = back;
                           rec["same_centralizer"] = same_cent;
                           return detail::single(similar && back && same_cent, rec);
                       }});
    }
    return out;
}

inline std::vector<Instance> suite_fixtures(const Options& o) {
    std::vector<Instance> out;
    const Field q = Field::rationals();
    const Field f2 = Field::prime(2);
    const std::uint64_t seed = o.seed;
    out.push_back({1, [q, seed] {
                       const Matrix x = companion(Poly::from_ints(q, {-2, 0, 1}));
                       const Matrix y = companion(Poly::from_ints(q, {-3, 0, 1}));
                       const auto c = centralizers_conjugate(x, y, seed);
                       return detail::single(!c.verdict, {{"case", "x^2 - 2 vs x^2 - 3"}, {"got", c.verdict}});
                   }});
    out.push_back({1, [q, seed] {
                       const Matrix x = companion(Poly::from_ints(q, {-2, 0, 1}));
                       const Matrix y = companion(Poly::from_ints(q, {-8, 0, 1}));
                       const auto c = centralizers_conjugate(x, y, seed);
                       bool ok = c.verdict && c.p && c.q && c.conjugator;
                       if (ok) {
                           ok = are_similar(mat_eval_poly(*c.p, x), y) && are_similar(mat_eval_poly(*c.q, y), x) &&
                                same_matrix_span(q, 2, conjugate_all(centralizer_basis(x).basis, *c.conjugator),
                                                 centralizer_basis(y).basis);
                       }
                       return detail::single(ok, {{"case", "x^2 - 2 vs x^2 - 8"}, {"certificate", io::certificate_to_json(c)}});
                   }});
    out.push_back({1, [f2, seed] {
                       const Matrix x = Matrix::from_ints(f2, {{1, 0}, {0, 0}});
                       const Matrix y = Matrix::from_ints(f2, {{1, 1}, {0, 0}});
                       const auto c = centralizers_conjugate(x, y, seed);
                       const bool spans_differ =
                           !same_matrix_span(f2, 2, centralizer_basis(x).basis, centralizer_basis(y).basis);
                       const bool oracle = cent_conjugate_bruteforce(x, y);
                       return detail::single(c.verdict && spans_differ && oracle,
                                             {{"case", "diag(1,0) vs [[1,1],[0,0]] over F_2"}, {"verdict", c.verdict},
                                              {"spans_differ", spans_differ}, {"oracle", oracle}});
                   }});
    return out;
}

inline std::vector<Instance> suite_jc(const Options& o) {
    Rng rng(o.seed);
    std::vector<Instance> out;
    const std::size_t count = detail::scaled(100, o);
    for (std::size_t i = 0; i < count; ++i) {
        const bool rational = i % 2 == 1;
        const Field k = rational ? Field::rationals() : detail::small_prime(i / 2);
        const std::size_t n = uniform_index(rng, 1, rational ? 5 : 6);
        Matrix x = i % 3 == 0 ? random_matrix(k, n, rng, 3) : random_conjugate(model_matrix(k, random_type(k, n, rng)), rng);
        std::optional<Matrix> p;
        if (i < detail::scaled(20, o)) p = random_invertible(k, n, rng);
        out.push_back({1, [x = std::move(x), p = std::move(p), seed = o.seed] {
                           const std::size_t n = x.rows();
                           const auto jc = jordan_chevalley(x, seed);
                           const Poly ms = minpoly(jc.S);
                           const bool sum = jc.S + jc.N == x;
                           const bool commute = jc.S * jc.N == jc.N * jc.S;
                           const bool nilpotent = mat_pow(jc.N, n).is_zero();
                           const bool squarefree = poly_gcd(ms, ms.derivative()).is_one();
                           const bool polynomial = mat_eval_poly(jc.s_expr, x) == jc.S;
                           bool equivariant = true;
                           if (p) {
                               const Matrix pinv = inverse(*p);
                               const auto jc2 = jordan_chevalley(pinv * x * *p, seed);
                               equivariant = jc2.S == pinv * jc.S * *p && jc2.N == pinv * jc.N * *p;
                           }
                           return detail::single(sum && commute && nilpotent && squarefree && polynomial && equivariant,
                                                 {{"x", io::matrix_file_json(x)}, {"sum", sum}, {"commute", commute},
                                                  {"nilpotent", nilpotent}, {"squarefree", squarefree},
                                                  {"polynomial", polynomial}, {"equivariant", equivariant}});
                       }});
    }
    return out;
}

inline std::vector<Instance> suite_partition_formulas(const Options& o) {
    const std::size_t top = o.scale == 0 ? 12 : o.scale;
    std::vector<Instance> out;
    for (std::size_t n = 0; n <= top; ++n) {
        for (auto& p : partitions_of(n)) {
            out.push_back({1, [p = std::move(p)] {
                               const std::size_t a = F_min_sum(p);
                               const std::size_t b = F_conjugate_squares(p);
                               return detail::single(a == b, {{"partition", p.parts()}, {"min_sum", a}, {"conjugate_squares", b}});
                           }});
        }
    }
    return out;
}

inline std::vector<Instance> suite_extension_separable(const Options& o) {
    Rng rng(o.seed);
    std::vector<Instance> out;
    const std::size_t count = detail::scaled(50, o);
    for (std::size_t i = 0; i < count; ++i) {
        auto inst = detail::random_primary(detail::small_prime(i), rng);
        out.push_back({1, [inst = std::move(inst), seed = o.seed] {
                           const auto& [f, lambda, x] = inst;
                           const Field l = make_extension(f.field(), f);
                           const CycleType ct = cycle_type(x.lift_to(l), seed);
                           bool ok = ct.terms.size() == static_cast<std::size_t>(f.degree());
                           for (const auto& t : ct.terms) {
                               ok = ok && t.poly.degree() == 1 && t.partition == lambda &&
                                    f.lift_to(l).eval(-t.poly.coeff(0)).is_zero();
                           }
                           return detail::single(ok, {{"x", io::matrix_file_json(x)}, {"f", f.to_string()},
                                                      {"lambda", lambda.parts()}, {"over_extension", ct.to_string()}});
                       }});
    }
    return out;
}

namespace detail {

// Centralizer of each group element as a class id: equal ids iff equal
// centralizers.
inline std::vector<std::size_t> centralizer_ids(const std::vector<Permutation>& group) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> out;
    for (const auto& g : group) {
        std::vector<std::size_t> members;
        for (std::size_t j = 0; j < group.size(); ++j) {
            if (g.commutes_with(group[j])) members.push_back(j);
        }
        out.push_back(ids.emplace(std::move(members), ids.size()).first->second);
    }
    return out;
}

inline std::vector<Instance> perm_oracle(const Options& o, PermGroup which) {
    const bool alt = which == PermGroup::Alternating;
    auto decide = [alt](const Permutation& g, const Permutation& h) {
        return alt ? an_cent_equal(g, h) : sn_cent_equal(g, h);
    };
    const std::size_t top = o.scale == 0 ? 7 : o.scale;
    std::vector<Instance> out;
    for (std::size_t n = 1; n <= std::min<std::size_t>(top, 6); ++n) {
        auto group = std::make_shared<const std::vector<Permutation>>(enumerate_group(n, which));
        auto ids = std::make_shared<const std::vector<std::size_t>>(centralizer_ids(*group));
        for (std::size_t i = 0; i < group->size(); ++i) {
            out.push_back({group->size(), [group, ids, i, decide] {
                               std::vector<json> fails;
                               const Permutation& g = (*group)[i];
                               for (std::size_t j = 0; j < group->size(); ++j) {
                                   const auto rep = decide(g, (*group)[j]);
                                   const bool oracle = (*ids)[i] == (*ids)[j];
                                   if (rep.equal != oracle) {
                                       fails.push_back({{"g", g.to_string()}, {"h", (*group)[j].to_string()},
                                                        {"n", g.n()}, {"theorem", io::variation_report_to_json(rep)},
                                                        {"oracle", oracle}});
                                   }
                               }
                               return fails;
                           }});
        }
    }
    Rng rng(o.seed);
    for (std::size_t n = 7; n <= std::min<std::size_t>(top, kMaxBruteForceDegree); ++n) {
        auto group = std::make_shared<const std::vector<Permutation>>(enumerate_group(n, which));
        for (std::size_t s = 0; s < 10000; ++s) {
            const Permutation& g = (*group)[uniform_index(rng, 0, group->size() - 1)];
            Permutation h;
            switch (s % 3) {
                case 0: h = (*group)[uniform_index(rng, 0, group->size() - 1)]; break;
                case 1: {
                    const auto cent = centralizer_in(g, *group);
                    h = cent[uniform_index(rng, 0, cent.size() - 1)];
                    break;
                }
                default: {
                    h = Permutation(n);
                    for (const auto& [len, layer] : cycle_layers(g)) {
                        h = h * layer.v.pow(static_cast<long long>(uniform_index(rng, 0, len - 1)));
                    }
                    if (alt && !h.is_even()) h = g;
                    break;
                }
            }
            out.push_back({1, [group, g, h, decide] {
                               const auto rep = decide(g, h);
                               const bool oracle = centralizer_in(g, *group) == centralizer_in(h, *group);
                               return single(rep.equal == oracle, {{"g", g.to_string()}, {"h", h.to_string()},
                                                                   {"n", g.n()},
                                                                   {"theorem", io::variation_report_to_json(rep)},
                                                                   {"oracle", oracle}});
                           }});
        }
    }
    return out;
}

}  // namespace detail

inline std::vector<Instance> suite_sn_oracle(const Options& o) { return detail::perm_oracle(o, PermGroup::Symmetric); }
inline std::vector<Instance> suite_an_oracle(const Options& o) { return detail::perm_oracle(o, PermGroup::Alternating); }

using SuiteBuilder = std::vector<Instance> (*)(const Options&);

inline const std::vector<std::pair<std::string, SuiteBuilder>>& suites() {
    static const std::vector<std::pair<std::string, SuiteBuilder>> all = {
        {"main-theorem-f2", suite_main_theorem_f2},
        {"centdim", suite_centdim},
        {"nilpclass", suite_nilpclass},
        {"dominance", suite_dominance},
        {"witness-roundtrip", suite_witness_roundtrip},
        {"fixtures", suite_fixtures},
        {"jc", suite_jc},
        {"partition-formulas", suite_partition_formulas},
        {"sn-oracle", suite_sn_oracle},
        {"an-oracle", suite_an_oracle},
        {"extension-separable", suite_extension_separable},
    };
    return all;
}

inline Report run_suite(const std::string& name, const Options& o) {
    for (const auto& [n, build] : suites()) {
        if (n == name) return run_instances(name, build(o), o.jobs);
    }
    fail(ErrorKind::UnknownSuite, "unknown suite \"" + name + "\"");
}

}  // namespace gentype::verify

#endif  // GENTYPE_VERIFY_HPP
