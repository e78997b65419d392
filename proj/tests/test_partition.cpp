#include <doctest.h>

#include <set>

#include "corecount/partition.hpp"
#include "oracles.hpp"

using namespace corecount;

TEST_SUITE("partition") {

TEST_CASE("beta of the running example") {
    CHECK(beta(Pseudopartition(Partition({5, 4, 3, 1}))) == BetaSet::of({8, 6, 4, 1}));
    CHECK(beta(Pseudopartition{}) == BetaSet{});
    CHECK(beta(Pseudopartition({5, 4, 0})) == BetaSet::of({7, 5, 0}));
}

TEST_CASE("beta_inv") {
    CHECK(beta_inv(BetaSet::of({8, 6, 4, 1})) == Pseudopartition({5, 4, 3, 1}));
    CHECK(beta_inv(BetaSet{}) == Pseudopartition{});
    CHECK(beta_inv(BetaSet::of({1})) == Pseudopartition({1}));
}

TEST_CASE("add_trailing_zero chain") {
    BetaSet x = BetaSet::of({8, 6, 4, 1});
    BetaSet y = add_trailing_zero(x);
    CHECK(y == BetaSet::of({9, 7, 5, 2, 0}));
    CHECK(add_trailing_zero(y) == BetaSet::of({10, 8, 6, 3, 1, 0}));
    CHECK(add_trailing_zero(BetaSet{}) == BetaSet::of({0}));
}

TEST_CASE("pad_to") {
    CHECK(pad_to(BetaSet::of({8, 6, 4, 1}), 6) == BetaSet::of({10, 8, 6, 3, 1, 0}));
    CHECK(pad_to(BetaSet::of({8, 6, 4, 1}), 4) == BetaSet::of({8, 6, 4, 1}));
    CHECK(pad_to(BetaSet{}, 3) == BetaSet::of({2, 1, 0}));
    CHECK_THROWS_AS(pad_to(BetaSet::of({8, 6, 4, 1}), 3), std::invalid_argument);
}

TEST_CASE("reduce") {
    CHECK(reduce(BetaSet::of({8, 0, 4, 1})) == BetaSet::of({6, 2}));
    CHECK(reduce(BetaSet::of({8, 6, 4, 1})) == BetaSet::of({8, 6, 4, 1}));
    CHECK(reduce(BetaSet::of({2, 1, 0})) == BetaSet{});
}

TEST_CASE("residues") {
    CHECK(residues(BetaSet::of({8, 6, 4, 1}), 6) == ResidueMultiset(6, {1, 1, 1, 0, 1, 0}));
    CHECK(residues(BetaSet{}, 4) == ResidueMultiset::zeros(4));
    CHECK(residues(BetaSet::of({10, 8, 6, 3, 1, 0}), 2) == ResidueMultiset(2, {4, 2}));
}

TEST_CASE("abacus_normal_form") {
    CHECK(abacus_normal_form(ResidueMultiset(6, {1, 1, 1, 0, 1, 0})) == BetaSet::of({4, 2, 1, 0}));
    CHECK(abacus_normal_form(ResidueMultiset::zeros(5)) == BetaSet{});
    CHECK(abacus_normal_form(ResidueMultiset(2, {2, 0})) == BetaSet::of({2, 0}));
}

TEST_CASE("has_hook") {
    CHECK(has_hook(Partition({5, 4, 3, 1}), 6));
    CHECK_FALSE(has_hook(Partition({1}), 6));
    CHECK_FALSE(has_hook(Partition{}, 1));
}

TEST_CASE("core examples") {
    CHECK(core(Partition({5, 4, 3, 1}), 6) == Partition({1}));
    CHECK(core(Partition{}, 3) == Partition{});
    // Frozen from the hook-removal oracle (both greedy orders agree).
    Partition by_hooks = testing::hook_removal_core(Partition({5, 4, 3, 1}), 2);
    CHECK(by_hooks == Partition({1}));
    CHECK(testing::hook_removal_core(Partition({5, 4, 3, 1}), 2, false) == by_hooks);
    CHECK(core(Partition({5, 4, 3, 1}), 2) == by_hooks);
}

TEST_CASE("core_multiset") {
    CHECK(core_multiset(Partition({4, 3, 2, 1}), 2, 4) == ResidueMultiset(2, {0, 4}));
    CHECK(core_multiset(Partition({4, 3, 2, 1}), 2, 5) == ResidueMultiset(2, {5, 0}));
    CHECK(core_multiset(Partition{}, 3, 0) == ResidueMultiset::zeros(3));
    CHECK_THROWS_AS(core_multiset(Partition({4, 3, 2, 1}), 2, 3), std::invalid_argument);
}

TEST_CASE("multiset_to_core") {
    CHECK(multiset_to_core(ResidueMultiset(6, {1, 1, 1, 0, 1, 0})) == Partition({1}));
    CHECK(multiset_to_core(ResidueMultiset::zeros(3)) == Partition{});
    CHECK(multiset_to_core(ResidueMultiset(2, {0, 4})) == Partition({4, 3, 2, 1}));
}

TEST_CASE("enumerate_cores small cases") {
    auto two = enumerate_cores(2, 2);
    std::set<Partition> got(two.begin(), two.end());
    CHECK(got == std::set<Partition>{Partition{}, Partition({1}), Partition({2, 1})});
    CHECK(enumerate_cores(5, 0) == std::vector<Partition>{Partition{}});
    auto three = enumerate_cores(3, 2);
    CHECK(three.size() == 6);
    for (const auto& p : three) CHECK_FALSE(has_hook(p, 3));
}

TEST_CASE("round trips between pseudopartitions and beta sets") {
    for (const auto& p : testing::partitions_up_to(12)) {
        for (std::int64_t zeros = 0; zeros <= 2; ++zeros) {
            Pseudopartition pp = padded_to(Pseudopartition(p), p.length() + zeros);
            CHECK(beta_inv(beta(pp)) == pp);
        }
    }
}

TEST_CASE("beta conjugates z to Z and r to R") {
    for (const auto& p : testing::partitions_up_to(12)) {
        for (std::int64_t zeros = 0; zeros <= 2; ++zeros) {
            Pseudopartition pp = padded_to(Pseudopartition(p), p.length() + zeros);
            CHECK(beta(with_trailing_zero(pp)) == add_trailing_zero(beta(pp)));
            CHECK(beta(Pseudopartition(strip_trailing_zeros(pp))) == reduce(beta(pp)));
        }
    }
}

TEST_CASE("core is hook-free and idempotent") {
    for (const auto& p : testing::partitions_up_to(10)) {
        for (std::int64_t t = 1; t <= 6; ++t) {
            Partition c = core(p, t);
            CHECK_FALSE(has_hook(c, t));
            CHECK(core(c, t) == c);
        }
    }
}

TEST_CASE("core agrees with greedy hook removal in either order") {
    for (const auto& p : testing::partitions_up_to(15)) {
        for (std::int64_t t = 1; t <= 6; ++t) {
            Partition expected = core(p, t);
            CHECK(testing::hook_removal_core(p, t, true) == expected);
            CHECK(testing::hook_removal_core(p, t, false) == expected);
        }
    }
}

TEST_CASE("cores of bounded length biject with residue multisets") {
    for (std::int64_t t = 1; t <= 4; ++t) {
        for (std::int64_t k = 0; k <= 6; ++k) {
            auto cores = enumerate_cores(t, k);
            std::set<Partition> distinct(cores.begin(), cores.end());
            CHECK(Int(distinct.size()) == multichoose(t, k));
            CHECK(cores.size() == distinct.size());
            for_each_multiset(t, k, [&](const std::vector<std::int64_t>& counts) {
                ResidueMultiset f(t, counts);
                Partition p = multiset_to_core(f);
                CHECK(core_multiset(p, t, k) == f);
            });
        }
    }
}

TEST_CASE("padding by one period shifts every multiplicity") {
    for (std::int64_t t = 1; t <= 4; ++t) {
        for (const auto& p : enumerate_cores(t, 4)) {
            for (std::int64_t k = p.length(); k <= p.length() + 4; ++k) {
                auto lo = core_multiset(p, t, k);
                auto hi = core_multiset(p, t, k + t);
                for (std::int64_t j = 0; j < t; ++j) CHECK(hi.count(j) == lo.count(j) + 1);
            }
        }
    }
}

TEST_CASE("partition text format") {
    CHECK(Partition::parse("5,4,3,1") == Partition({5, 4, 3, 1}));
    CHECK(Partition::parse("-") == Partition{});
    CHECK(Partition({5, 4, 3, 1}).str() == "5,4,3,1");
    CHECK(Partition{}.str() == "-");
    CHECK_THROWS_AS(Partition::parse("3,4"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("0"), std::invalid_argument);
}

}  // TEST_SUITE
