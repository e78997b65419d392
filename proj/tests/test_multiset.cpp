#include <doctest.h>

#include <array>
#include <set>

#include "corecount/multiset.hpp"
#include "oracles.hpp"

using namespace corecount;

namespace {

std::vector<std::int64_t> mod_map(std::int64_t n, std::int64_t d) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) f[i] = i % d;
    return f;
}

}  // namespace

TEST_SUITE("multiset") {

TEST_CASE("pushforward examples") {
    FiniteMultiset f({1, 1, 1, 0, 1, 0});
    CHECK(pushforward(f, mod_map(6, 2), 2) == FiniteMultiset({3, 1}));
    // Frozen from summing counts along residue classes: {8,6,4,1} mod 3
    // lands one element on 0, two on 1, one on 2.
    CHECK(pushforward(f, mod_map(6, 3), 3) == FiniteMultiset({1, 2, 1}));
    std::vector<std::int64_t> id = {0, 1, 2, 3, 4, 5};
    CHECK(pushforward(f, id, 6) == f);
}

TEST_CASE("pushforward is functorial") {
    FiniteMultiset f({2, 0, 3, 1, 0, 4});
    auto g = mod_map(6, 3);   // Z/6 -> Z/3
    auto h = mod_map(3, 1);   // Z/3 -> Z/1
    std::vector<std::int64_t> gh(6);
    for (std::int64_t i = 0; i < 6; ++i) gh[i] = h[g[i]];
    CHECK(pushforward(pushforward(f, g, 3), h, 1) == pushforward(f, gh, 1));
    CHECK(pushforward(f, gh, 1).count(0) == f.cardinality());
}

TEST_CASE("fibre_cardinality against explicit preimage enumeration") {
    std::array<std::int64_t, 2> sizes{3, 3};
    CHECK(fibre_cardinality(FiniteMultiset({0, 4}), sizes) == 15);
    CHECK(fibre_cardinality(FiniteMultiset({5, 0}), sizes) == 21);
    CHECK(fibre_cardinality(FiniteMultiset({0, 0}), sizes) == 1);

    // Enumerate actual preimages: multisets on 6 points pushing to g under
    // i -> i / 3 (fibres of size 3 each).
    std::vector<std::int64_t> blocks = {0, 0, 0, 1, 1, 1};
    for (std::int64_t a = 0; a <= 4; ++a) {
        FiniteMultiset g({a, 4 - a});
        std::int64_t found = 0;
        for (const auto& counts : testing::all_multisets(6, 4))
            if (pushforward(FiniteMultiset(counts), blocks, 2) == g) ++found;
        CHECK(Int(found) == fibre_cardinality(g, sizes));
    }
}

TEST_CASE("count_matchings examples") {
    CHECK(count_matchings({{1, 1}, {1, 1}}) == 2);
    CHECK(count_matchings({{3, 3}, {2, 2, 2}}) == 7);
    CHECK(count_matchings({{2, 2, 2}, {3, 3}}) == 7);
    CHECK(count_matchings({{2, 2}, {2, 2}}) == 3);
    CHECK(count_matchings({{0, 0}, {0, 0, 0}}) == 1);
    CHECK_THROWS_AS(count_matchings({{1, 2}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("enumerate_matchings basics") {
    auto both = enumerate_matchings({{1, 1}, {1, 1}}, 100);
    REQUIRE(both.size() == 2);
    CHECK(both[0].entries == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
    CHECK(both[1].entries == std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});

    auto single = enumerate_matchings({{2}, {1, 1}}, 100);
    REQUIRE(single.size() == 1);
    CHECK(single[0].entries == std::vector<std::vector<std::int64_t>>{{1, 1}});

    CHECK(enumerate_matchings({{2, 2}, {2, 2}}, 100).size() == 3);
    CHECK_THROWS_AS(enumerate_matchings({{4, 4}, {4, 4}}, 2), guard_error);
}

TEST_CASE("count equals enumeration equals filter oracle on a grid") {
    std::vector<MarginPair> cases;
    for (std::int64_t a = 0; a <= 4; ++a)
        for (std::int64_t b = 0; b <= 4; ++b)
            for (std::int64_t c = 0; c <= 4; ++c) {
                std::int64_t total = a + b + c;
                for (std::int64_t r0 = 0; r0 <= total; ++r0)
                    for (std::int64_t r1 = 0; r0 + r1 <= total && r1 <= 4; ++r1) {
                        std::int64_t r2 = total - r0 - r1;
                        if (r0 > 4 || r2 < 0 || r2 > 4) continue;
                        cases.push_back(MarginPair{{r0, r1, r2}, {a, b, c}});
                    }
            }
    // Thin the grid deterministically to keep the suite quick.
    for (std::size_t idx = 0; idx < cases.size(); idx += 7) {
        const auto& m = cases[idx];
        auto listed = enumerate_matchings(m, 1'000'000);
        CHECK(Int(listed.size()) == count_matchings(m));
        auto filtered = testing::matchings_by_filter(m);
        CHECK(filtered.size() == listed.size());
        for (const auto& mat : listed) {
            CHECK(mat.row_sums() == m.rows);
            CHECK(mat.col_sums() == m.cols);
        }
        std::set<std::vector<std::vector<std::int64_t>>> distinct;
        for (const auto& mat : listed) distinct.insert(mat.entries);
        CHECK(distinct.size() == listed.size());
        // Transpose symmetry.
        CHECK(count_matchings(MarginPair{m.cols, m.rows}) == Int(listed.size()));
        if (m.balanced()) CHECK(count_matchings(m) >= 1);
    }
}

TEST_CASE("matchings come out in lexicographic row-major order") {
    auto listed = enumerate_matchings({{2, 2}, {2, 2}}, 100);
    for (std::size_t i = 1; i < listed.size(); ++i) CHECK(listed[i - 1].entries < listed[i].entries);
}

TEST_CASE("restrict_to_classes") {
    auto parts = restrict_to_classes(FiniteMultiset({1, 0, 2, 0}), 2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == FiniteMultiset({1, 2}));
    CHECK(parts[1] == FiniteMultiset({0, 0}));

    FiniteMultiset f({3, 1, 4, 1, 5});
    auto whole = restrict_to_classes(f, 1);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == f);

    std::int64_t total = 0;
    for (const auto& piece : restrict_to_classes(FiniteMultiset({3, 2, 4, 3}), 2))
        total += piece.cardinality();
    CHECK(total == 12);
    CHECK_THROWS_AS(restrict_to_classes(FiniteMultiset({1, 2, 3}), 2), std::invalid_argument);
}

}  // TEST_SUITE
