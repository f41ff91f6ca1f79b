#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gentype/perm.hpp"

using namespace gentype;

namespace {

Permutation P(const std::string& s, std::size_t n) { return Permutation::parse_cycles(s, n); }

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Permutation, ParseAndPrint) {
    const auto g = P("(1 2 3)(4 5)", 6);
    EXPECT_EQ(g.n(), 6u);
    EXPECT_EQ(g.images(), (std::vector<std::size_t>{2, 3, 1, 5, 4, 6}));
    EXPECT_EQ(g.to_string(), "(1 2 3)(4 5)");
    EXPECT_EQ(Permutation(4).to_string(), "()");
    EXPECT_EQ(P("(1,2)", 3), Permutation::from_images({2, 1, 3}));
    EXPECT_FALSE(g.is_even());
    EXPECT_TRUE(P("(1 2 3)", 3).is_even());
    EXPECT_EQ(g.pow(6), Permutation(6));
    EXPECT_EQ(g * g.inverse(), Permutation(6));
}

TEST(Permutation, ParseErrors) {
    for (const std::string bad : {"(1 2", "(1 1)", "(1 2)(2 3)", "(0 1)", "(a)", "1 2"}) {
        try {
            Permutation::parse_cycles(bad, 4);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
        }
    }
    try {
        Permutation::from_images({1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
    try {
        Permutation::parse_cycles("(1 5)", 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
}

TEST(CycleLayers, Example) {
    const auto l = cycle_layers(P("(1 2 3)(4 5)", 7));
    ASSERT_EQ(l.size(), 3u);
    EXPECT_EQ(l.at(1).support, (std::vector<std::size_t>{6, 7}));
    EXPECT_EQ(l.at(1).cycle_count, 2u);
    EXPECT_EQ(l.at(2).support, (std::vector<std::size_t>{4, 5}));
    EXPECT_EQ(l.at(3).support, (std::vector<std::size_t>{1, 2, 3}));
    EXPECT_EQ(l.at(3).v, P("(1 2 3)", 7));
}

TEST(LocalEquivalence, Examples) {
    EXPECT_EQ(locally_equivalent(P("(1 2 3)", 3), P("(1 3 2)", 3), 3), std::optional<std::size_t>(2));
    EXPECT_EQ(locally_equivalent(P("(1 2 3)(4 5 6)", 6), P("(1 2 4)(3 5 6)", 6), 3), std::nullopt);
    EXPECT_TRUE(perm_equivalent(P("(1 2 3 4 5)", 5), P("(1 3 5 2 4)", 5)));
    EXPECT_FALSE(perm_equivalent(P("(1 2)", 3), P("(1 3)", 3)));
    try {
        locally_equivalent(P("(1 2)", 2), P("(1 2)", 3), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeMismatch);
    }
}

TEST(SnCentEqual, Examples) {
    const auto a = sn_cent_equal(P("(1 2)", 2), Permutation(2));
    EXPECT_TRUE(a.equal);
    EXPECT_EQ(a.kind, VariationKind::SCase1);
    EXPECT_EQ(a.variation, (std::vector<std::size_t>{1, 2}));

    const auto b = sn_cent_equal(P("(1 2)", 4), P("(3 4)", 4));
    EXPECT_TRUE(b.equal);
    EXPECT_EQ(b.kind, VariationKind::SCase2);

    EXPECT_FALSE(sn_cent_equal(P("(1 2)", 3), P("(1 3)", 3)).equal);
    EXPECT_EQ(sn_cent_equal(P("(1 2 3)", 3), P("(1 3 2)", 3)).kind, VariationKind::Equivalent);
    EXPECT_EQ(to_string(VariationKind::SCase2), "S-case-2");
}

TEST(AnCentEqual, Examples) {
    EXPECT_EQ(an_cent_equal(P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)).kind, VariationKind::ACase2);
    EXPECT_EQ(an_cent_equal(P("(1 2 3)", 3), Permutation(3)).kind, VariationKind::ACase3);
    EXPECT_EQ(an_cent_equal(P("(1 2 3)(4 5 6)", 6), P("(1 2 3)(4 6 5)", 6)).kind, VariationKind::ACase4);
    EXPECT_FALSE(an_cent_equal(P("(1 2 3)", 4), P("(1 2 4)", 4)).equal);
    try {
        an_cent_equal(P("(1 2)", 3), Permutation(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddPermutation);
    }
}

TEST(BruteForce, GroupSizes) {
    EXPECT_EQ(enumerate_group(4, PermGroup::Symmetric).size(), 24u);
    EXPECT_EQ(enumerate_group(5, PermGroup::Alternating).size(), 60u);
    EXPECT_EQ(perm_centralizer_bruteforce(P("(1 2 3)", 5), PermGroup::Symmetric).size(), 6u);
    EXPECT_EQ(perm_centralizer_bruteforce(P("(1 2 3)", 5), PermGroup::Alternating).size(), 3u);
    try {
        enumerate_group(10, PermGroup::Symmetric);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}

TEST(Properties, CentralizerOrderFormula) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto all = enumerate_group(n, PermGroup::Symmetric);
        for (const auto& g : all) EXPECT_EQ(centralizer_in(g, all).size(), sn_centralizer_order(g)) << g.to_string();
    }
}

TEST(Properties, LocalEquivalenceIsSymmetric) {
    std::mt19937_64 rng(60);
    for (int t = 0; t < 500; ++t) {
        std::vector<std::size_t> img(7);
        std::iota(img.begin(), img.end(), std::size_t{1});
        std::shuffle(img.begin(), img.end(), rng);
        const auto g = Permutation::from_images(img);
        std::shuffle(img.begin(), img.end(), rng);
        const auto h = t % 3 ? Permutation::from_images(img) : g.pow(t % 5 + 1);
        for (std::size_t i = 1; i <= 7; ++i) {
            EXPECT_EQ(locally_equivalent(g, h, i).has_value(), locally_equivalent(h, g, i).has_value());
        }
        EXPECT_EQ(variation_set(g, h), variation_set(h, g));
    }
}

TEST(Properties, EquivalenceImpliesEqualCentralizers) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto all = enumerate_group(n, PermGroup::Symmetric);
        for (const auto& g : all) {
            const auto cg = as_set(centralizer_in(g, all));
            for (const auto& h : all) {
                if (perm_equivalent(g, h)) EXPECT_EQ(cg, as_set(centralizer_in(h, all)));
            }
        }
    }
}

TEST(Properties, SymmetricOracle) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto all = enumerate_group(n, PermGroup::Symmetric);
        std::vector<std::set<Permutation>> cents;
        for (const auto& g : all) cents.push_back(as_set(centralizer_in(g, all)));
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < all.size(); ++j) {
                EXPECT_EQ(sn_cent_equal(all[i], all[j]).equal, cents[i] == cents[j])
                    << all[i].to_string() << " vs " << all[j].to_string();
            }
        }
    }
}

TEST(Properties, AlternatingOracleUpToFive) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto all = enumerate_group(n, PermGroup::Alternating);
        std::vector<std::set<Permutation>> cents;
        for (const auto& g : all) cents.push_back(as_set(centralizer_in(g, all)));
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < all.size(); ++j) {
                EXPECT_EQ(an_cent_equal(all[i], all[j]).equal, cents[i] == cents[j])
                    << all[i].to_string() << " vs " << all[j].to_string();
            }
        }
    }
}

TEST(Properties, AbstractlyIsomorphicCentralizersWithoutSharedCycleLengths) {
    // cycle lengths 2, 13, 21 against 7, 3, 26 in S_36: each centralizer is
    // the cyclic group generated by the element itself, of order 546
    const auto x = P("(1 2)(3 4 5 6 7 8 9 10 11 12 13 14 15)"
                     "(16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32 33 34 35 36)", 36);
    const auto y = P("(1 2 3 4 5 6 7)(8 9 10)"
                     "(11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32 33 34 35 36)", 36);
    EXPECT_EQ(sn_centralizer_order(x), 546u);
    EXPECT_EQ(sn_centralizer_order(y), 546u);
    EXPECT_FALSE(sn_cent_equal(x, y).equal);
}
