#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3m/mat.hpp"
#include "k3m/toric.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace k3m;

namespace {

WeightSystem ws(long a, long b, long c, long d) {
    return WeightSystem(std::array<Int, 4>{Int(a), Int(b), Int(c), Int(d)});
}

// Vertices as a comparable set, forgetting order.
std::set<VecZ> vertex_set(const Simplex3& s) {
    return {s.vertices.begin(), s.vertices.end()};
}

}  // namespace

TEST_CASE("weight systems validate their input") {
    WeightSystem w = ws(1, 1, 1, 3);
    CHECK(w.d == 6);
    CHECK(w.di == std::array<Int, 4>{6, 6, 6, 2});
    CHECK_THROWS_AS(ws(2, 2, 2, 2), std::domain_error);  // common factor
    CHECK_THROWS_AS(ws(1, 1, 1, 2), std::domain_error);  // weight does not divide the degree
    CHECK_THROWS_AS(ws(0, 1, 1, 1), std::domain_error);  // weights must be positive
}

TEST_CASE("weight simplex vertices satisfy the stated normalization") {
    WeightSystem w = ws(1, 1, 1, 3);
    Simplex3 s = delta_of_weights(w);
    // reconstruct the rank three coordinate basis exactly as the library does
    MatZ rel(1, 4);
    for (std::size_t j = 0; j < 4; ++j) rel.at(0, j) = w.w[j];
    MatZ basis = kernel_saturated(rel);
    REQUIRE(basis.cols() == 3);
    // vertex j lifts to the point with t_i = -1 off the axis and t_j = d_j - 1
    for (std::size_t j = 0; j < 4; ++j) {
        VecZ lift = basis * s.vertices[j];
        for (std::size_t i = 0; i < 4; ++i) {
            Int expected = (i == j) ? w.di[j] - 1 : Int(-1);
            CHECK(lift[i] == expected);
        }
    }
}

TEST_CASE("simplex construction validates") {
    CHECK_THROWS_AS(make_simplex({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), std::domain_error);
    CHECK_THROWS_AS(make_simplex({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}}),
                    std::domain_error);  // degenerate
    CHECK_THROWS_AS(make_simplex({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}),
                    std::domain_error);  // origin not interior
    Simplex3 s = make_simplex({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
    CHECK(s.vertices[3] == VecZ{-1, -1, -1});
}

TEST_CASE("polar duality of the quartic simplex") {
    Simplex3 s = delta_of_weights(ws(1, 1, 1, 1));
    PolarDualResult d = polar_dual(s);
    CHECK(d.reflexive);
    REQUIRE(d.dual.has_value());
    PolarDualResult dd = polar_dual(*d.dual);
    CHECK(dd.reflexive);
    REQUIRE(dd.dual.has_value());
    CHECK(vertex_set(*dd.dual) == vertex_set(s));
}

TEST_CASE("catalog weight systems are reflexive with involutive duals") {
    std::vector<WeightSystem> all = {
        ws(1, 1, 1, 1),   ws(1, 3, 8, 12), ws(1, 6, 14, 21), ws(1, 9, 6, 2),
        ws(1, 2, 2, 1),   ws(1, 12, 8, 3), ws(1, 6, 3, 2),   ws(1, 5, 2, 2),
        ws(1, 21, 14, 6), ws(1, 10, 5, 4), ws(1, 4, 4, 3)};
    for (const WeightSystem& w : all) {
        CAPTURE(w.d.get_str());
        Simplex3 s = delta_of_weights(w);
        PolarDualResult d = polar_dual(s);
        CHECK(d.reflexive);
        REQUIRE(d.dual.has_value());
        PolarDualResult dd = polar_dual(*d.dual);
        REQUIRE(dd.dual.has_value());
        CHECK(vertex_set(*dd.dual) == vertex_set(s));
    }
}

TEST_CASE("orders of the quotient group") {
    CHECK(pi_group_order(ws(1, 1, 1, 1)) == 16);
    CHECK(pi_group_order(ws(1, 3, 8, 12)) == 2);
    CHECK(pi_group_order(ws(1, 6, 14, 21)) == 1);
    CHECK(pi_group_order(ws(1, 9, 6, 2)) == 3);
    CHECK(pi_group_order(ws(1, 2, 2, 1)) == 9);
    CHECK(pi_group_order(ws(1, 12, 8, 3)) == 2);
    CHECK(pi_group_order(ws(1, 6, 3, 2)) == 4);
    CHECK(pi_group_order(ws(1, 5, 2, 2)) == 5);
    CHECK(pi_group_order(ws(1, 21, 14, 6)) == 1);
    CHECK(pi_group_order(ws(1, 10, 5, 4)) == 2);
    CHECK(pi_group_order(ws(1, 4, 4, 3)) == 3);
}

TEST_CASE("quotient order agrees with the lattice index computation") {
    for (WeightSystem w : {ws(1, 1, 1, 1), ws(1, 9, 6, 2), ws(1, 2, 2, 1), ws(1, 12, 8, 3),
                           ws(1, 6, 3, 2), ws(1, 5, 2, 2), ws(1, 21, 14, 6), ws(1, 10, 5, 4),
                           ws(1, 4, 4, 3), ws(1, 3, 8, 12), ws(1, 6, 14, 21)}) {
        PiGroup g = pi_group_structure(w);
        CHECK(g.order == pi_group_order(w));
        Int prod = 1;
        for (const Int& f : g.invariant_factors) prod *= f;
        CHECK(prod == g.order);
    }
}

TEST_CASE("structure of the quotient group") {
    PiGroup g = pi_group_structure(ws(1, 1, 1, 1));
    CHECK(g.order == 16);
    CHECK(g.invariant_factors == std::vector<Int>{4, 4});
    PiGroup h = pi_group_structure(ws(1, 6, 14, 21));
    CHECK(h.order == 1);
    CHECK(h.invariant_factors.empty());
    PiGroup k = pi_group_structure(ws(1, 3, 8, 12));
    CHECK(k.invariant_factors == std::vector<Int>{2});
}

TEST_CASE("interior points of edges") {
    Simplex3 quartic = delta_of_weights(ws(1, 1, 1, 1));
    auto counts = edge_interior_counts(quartic);
    REQUIRE(counts.size() == 6);
    for (const auto& e : counts) {
        CAPTURE(e.i);
        CAPTURE(e.j);
        CHECK(e.count == 3);
    }
    Simplex3 unitish = make_simplex({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
    for (const auto& e : edge_interior_counts(unitish)) CHECK(e.count == 0);
}

TEST_CASE("star pairing over the quartic") {
    StarReport r = condition_star(ws(1, 1, 1, 1));
    REQUIRE(r.rows.size() == 6);
    CHECK(!r.holds);  // quartic edges carry three interior points each
    auto counts = edge_interior_counts(delta_of_weights(ws(1, 1, 1, 1)));
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(r.rows[k].i == counts[k].i);
        CHECK(r.rows[k].j == counts[k].j);
        CHECK(r.rows[k].edge_count == counts[k].count);
    }
}

TEST_CASE("star pairing reports the dual edge counts") {
    for (WeightSystem w : {ws(1, 1, 1, 1), ws(1, 6, 14, 21), ws(1, 3, 8, 12)}) {
        CAPTURE(w.d.get_str());
        StarReport r = condition_star(w);
        REQUIRE(r.rows.size() == 6);
        Simplex3 s = delta_of_weights(w);
        PolarDualResult d = polar_dual(s);
        REQUIRE(d.dual.has_value());
        auto dual_counts = edge_interior_counts(*d.dual);
        bool all_zero = true;
        for (const auto& row : r.rows) {
            // dual edge joins the dual vertices of the complementary index pair
            int k = -1, l = -1;
            for (int t = 0; t < 4; ++t) {
                if (t == row.i || t == row.j) continue;
                (k < 0 ? k : l) = t;
            }
            bool found = false;
            for (const auto& e : dual_counts) {
                if (e.i == k && e.j == l) {
                    CHECK(row.dual_count == e.count);
                    found = true;
                }
            }
            CHECK(found);
            if (row.edge_count != 0 || row.dual_count != 0) all_zero = false;
        }
        CHECK(r.holds == all_zero);
    }
}

TEST_CASE("weights from an exceptional triple") {
    WeightSystem a = strange_duality_weights({Int(2), Int(3), Int(7)}, Int(42));
    CHECK(a.w == std::array<Int, 4>{1, 21, 14, 6});
    CHECK(a.d == 42);
    WeightSystem b = strange_duality_weights({Int(3), Int(3), Int(4)}, Int(12));
    CHECK(b.w == std::array<Int, 4>{1, 4, 4, 3});
    CHECK_THROWS_AS(strange_duality_weights({Int(2), Int(4), Int(7)}, Int(9)),
                    std::domain_error);  // reciprocal sum misses one
    CHECK_THROWS_AS(strange_duality_weights({Int(0), Int(3), Int(7)}, Int(42)),
                    std::domain_error);
}
