#include <doctest.h>

#include <set>

#include "corecount/polytope.hpp"
#include "oracles.hpp"

using namespace corecount;

namespace {

std::vector<MarginPair> balanced_margins(std::int64_t s, std::int64_t t, std::int64_t hi) {
    std::vector<MarginPair> out;
    std::vector<std::int64_t> rows(static_cast<std::size_t>(s)), cols(static_cast<std::size_t>(t));
    auto rec_cols = [&](auto&& self, std::int64_t j, std::int64_t left) -> void {
        if (j == t - 1) {
            if (left > hi) return;
            cols[j] = left;
            out.push_back(MarginPair{rows, cols});
            return;
        }
        for (std::int64_t v = 0; v <= std::min(left, hi); ++v) {
            cols[j] = v;
            self(self, j + 1, left - v);
        }
    };
    auto rec_rows = [&](auto&& self, std::int64_t i) -> void {
        if (i == s) {
            std::int64_t total = 0;
            for (auto v : rows) total += v;
            rec_cols(rec_cols, 0, total);
            return;
        }
        for (std::int64_t v = 0; v <= hi; ++v) {
            rows[i] = v;
            self(self, i + 1);
        }
    };
    rec_rows(rec_rows, 0);
    return out;
}

}  // namespace

TEST_SUITE("polytope") {

TEST_CASE("total unimodularity") {
    CHECK(is_totally_unimodular(transportation_projected({{3, 3}, {2, 2, 2}}).A));
    CHECK_FALSE(is_totally_unimodular(IntMatrix{{2}}));
    CHECK_FALSE(is_totally_unimodular(IntMatrix{{1, 1}, {-1, 1}}));
    CHECK(is_totally_unimodular(IntMatrix{{1, 0}, {-1, 1}}));
    for (std::int64_t s = 1; s <= 4; ++s)
        for (std::int64_t t = 1; t <= 4; ++t) {
            std::vector<std::int64_t> rows(static_cast<std::size_t>(s), t);
            std::vector<std::int64_t> cols(static_cast<std::size_t>(t), s);
            CHECK(is_totally_unimodular(transportation_projected({rows, cols}).A));
        }
}

TEST_CASE("emptiness by elimination") {
    CHECK(is_empty(ConstraintSystem{IntMatrix{{1}}, {-1}}));
    CHECK_FALSE(is_empty(ConstraintSystem{IntMatrix{{1}}, {0}}));
    CHECK_FALSE(is_empty(transportation_projected({{3, 3}, {2, 2, 2}})));
    // x + y <= 1 together with x >= 1, y >= 1.
    CHECK(is_empty(ConstraintSystem{IntMatrix{{1, 1}, {-1, 0}, {0, -1}}, {1, -1, -1}}));
}

TEST_CASE("boundedness via the recession cone") {
    CHECK(is_bounded(ConstraintSystem{IntMatrix{{1}}, {5}}));
    CHECK_FALSE(is_bounded(ConstraintSystem{IntMatrix{{-1}}, {0}}));
    CHECK(is_bounded(transportation_projected({{3, 3}, {2, 2, 2}})));
    // Empty polyhedra count as bounded even when the cone has a ray.
    CHECK(is_bounded(ConstraintSystem{IntMatrix{{-1}, {0}}, {5, -1}}));
    // x - y <= 0 leaves the diagonal ray.
    CHECK_FALSE(is_bounded(ConstraintSystem{IntMatrix{{1, -1}}, {3}}));
}

TEST_CASE("lattice point enumeration") {
    auto pts = lattice_points(ConstraintSystem{IntMatrix{{1}}, {3}});
    CHECK(pts == std::vector<std::vector<std::int64_t>>{{0}, {1}, {2}, {3}});

    auto hexagon = lattice_points(transportation_projected({{3, 3}, {2, 2, 2}}));
    CHECK(hexagon.size() == 7);
    for (std::size_t i = 1; i < hexagon.size(); ++i) CHECK(hexagon[i - 1] < hexagon[i]);

    CHECK(lattice_points(ConstraintSystem{IntMatrix{{1}}, {-1}}).empty());
    CHECK_THROWS_AS(lattice_points(ConstraintSystem{IntMatrix{{-1}}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(lattice_points(ConstraintSystem{IntMatrix{{1}}, {100}}, 5), guard_error);
    CHECK(lattice_point_count(transportation_projected({{3, 3}, {2, 2, 2}})) == 7);
}

TEST_CASE("projected transportation system of the worked example") {
    ConstraintSystem sys = transportation_projected({{3, 3}, {2, 2, 2}});
    CHECK(sys.A == IntMatrix{{1, 1}, {1, 0}, {0, 1}, {-1, -1}});
    CHECK(sys.b == std::vector<std::int64_t>{3, 2, 2, -1});

    // One-by-one margins project to a zero-variable system with one point.
    ConstraintSystem degenerate = transportation_projected({{4}, {4}});
    CHECK(degenerate.A.row_count() == 1);
    CHECK(degenerate.A.col_count() == 0);
    CHECK(lattice_point_count(degenerate) == 1);

    CHECK_THROWS_AS(transportation_projected({{1, 2}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("unit-scale region of the area-3 example") {
    // Row margins (2,2,2), column margins (3,3): the projection is the planar
    // region 1 <= x + y <= 3, 0 <= x, y <= 2 with 6 vertices.
    ConstraintSystem sys = transportation_projected({{2, 2, 2}, {3, 3}});
    auto vertices = testing::vertices_of(sys.A, sys.b);
    std::set<std::vector<Rat>> got(vertices.begin(), vertices.end());
    std::set<std::vector<Rat>> expected = {
        {Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(1)},
        {Rat(1), Rat(2)}, {Rat(0), Rat(2)}, {Rat(0), Rat(1)}};
    CHECK(got == expected);
    CHECK(lattice_point_count(sys) == 7);
}

TEST_CASE("scaled hexagon vertices match the linear vertex labels") {
    const std::int64_t k = 2;
    ConstraintSystem sys = transportation_projected({{3 * k + 1, 3 * k}, {2 * k + 1, 2 * k, 2 * k}});
    auto vertices = testing::vertices_of(sys.A, sys.b);
    std::set<std::vector<Rat>> got(vertices.begin(), vertices.end());
    std::set<std::vector<Rat>> expected = {
        {Rat(k + 1), Rat(0)},     {Rat(2 * k + 1), Rat(0)}, {Rat(2 * k + 1), Rat(k)},
        {Rat(k + 1), Rat(2 * k)}, {Rat(0), Rat(2 * k)},     {Rat(0), Rat(k + 1)}};
    CHECK(got == expected);
}

TEST_CASE("integral vertices for integral margins") {
    for (std::int64_t s = 2; s <= 3; ++s)
        for (std::int64_t t = 2; t <= 3; ++t) {
            auto margins = balanced_margins(s, t, 3);
            for (std::size_t idx = 0; idx < margins.size(); idx += 5) {
                ConstraintSystem sys = transportation_projected(
                    TransportationSpec{margins[idx].rows, margins[idx].cols});
                for (const auto& v : testing::vertices_of(sys.A, sys.b))
                    for (const auto& coord : v) CHECK(is_integer(coord));
            }
        }
}

TEST_CASE("lattice points of the projection count matchings") {
    for (std::int64_t s = 1; s <= 3; ++s)
        for (std::int64_t t = 1; t <= 3; ++t) {
            auto margins = balanced_margins(s, t, 5);
            for (std::size_t idx = 0; idx < margins.size(); idx += 9) {
                const auto& m = margins[idx];
                TransportationSpec spec{m.rows, m.cols};
                auto pts = lattice_points(transportation_projected(spec));
                CHECK(Int(pts.size()) == count_matchings(m));
                // Lifting inverts the projection and lands on the margins.
                std::set<std::vector<std::vector<std::int64_t>>> lifted;
                for (const auto& x : pts) {
                    Matching full = lift_point(spec, x);
                    CHECK(full.row_sums() == m.rows);
                    CHECK(full.col_sums() == m.cols);
                    lifted.insert(full.entries);
                }
                CHECK(lifted.size() == pts.size());
            }
        }
}

TEST_CASE("emptiness agrees with vertex search on small transportation systems") {
    for (const auto& m : balanced_margins(2, 3, 2)) {
        ConstraintSystem sys = transportation_projected(TransportationSpec{m.rows, m.cols});
        bool empty = is_empty(sys);
        bool has_vertex = !testing::vertices_of(sys.A, sys.b).empty();
        CHECK(empty == !has_vertex);  // bounded nonempty polyhedra have vertices
    }
    // And on a couple of hand-built infeasible systems.
    ConstraintSystem bad = transportation_projected({{3, 3}, {2, 2, 2}});
    bad.b = {0, 2, 2, -5};
    CHECK(is_empty(bad));
    CHECK(testing::vertices_of(bad.A, bad.b).empty());
}

TEST_CASE("lifting the worked 3x2 template") {
    TransportationSpec spec{{2, 2, 2}, {3, 3}};
    std::vector<std::int64_t> x = {1, 1};
    CHECK(lift_point(spec, x).entries ==
          std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 1}, {1, 1}});
    std::vector<std::int64_t> y = {2, 1};
    CHECK(lift_point(spec, y).entries ==
          std::vector<std::vector<std::int64_t>>{{2, 0}, {1, 1}, {0, 2}});
    std::vector<std::int64_t> bad = {0, 0};  // forces 3-x-y = 3 > margin row 3? no: x+y-1 < 0
    CHECK_THROWS_AS(lift_point(spec, bad), std::invalid_argument);

    TransportationSpec point{{7}, {7}};
    CHECK(lift_point(point, {}).entries == std::vector<std::vector<std::int64_t>>{{7}});
}

TEST_CASE("parametric feasibility windows") {
    // x <= k - 2: feasible from k = 2 on.
    {
        ParametricSystem ps{IntMatrix{{1}}, {1}, {-2}};
        FeasibleWindow w = parametric_feasible_window(ps);
        CHECK_FALSE(w.empty_for_all);
        CHECK(w.lo == 2);
        CHECK_FALSE(w.hi.has_value());
    }
    // x <= 3 - k together with x >= 0: dies after k = 3.
    {
        ParametricSystem ps{IntMatrix{{1}}, {-1}, {3}};
        FeasibleWindow w = parametric_feasible_window(ps);
        CHECK_FALSE(w.empty_for_all);
        CHECK(w.lo == 0);
        REQUIRE(w.hi.has_value());
        CHECK(*w.hi == 3);
    }
    // Zero row with negative offset: never feasible.
    {
        ParametricSystem ps{IntMatrix{{0}, {1}}, {0, 1}, {-1, 0}};
        FeasibleWindow w = parametric_feasible_window(ps);
        CHECK(w.empty_for_all);
    }
    // x1 <= k and x1 >= k+1 can never meet even though slopes alone are fine.
    {
        ParametricSystem ps{IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {1, -1, 1, 0}, {0, -1, 0, 0}};
        FeasibleWindow w = parametric_feasible_window(ps);
        CHECK(w.empty_for_all);
    }
    // The anchored fibre system is feasible for every k.
    {
        ConstraintSystem shape = transportation_projected({{3, 3}, {2, 2, 2}});
        ParametricSystem ps{shape.A, shape.b, {1, 1, 0, -1}};
        FeasibleWindow w = parametric_feasible_window(ps);
        CHECK(w.eventually_feasible());
        CHECK(w.lo == 0);
    }
}

}  // TEST_SUITE
