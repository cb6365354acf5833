#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3m/discform.hpp"
#include "k3m/lattice.hpp"

using namespace k3m;

TEST_CASE("discriminant form of a rank one lattice") {
    FiniteQuadraticForm a = discriminant_form(lat::diag(Int(-4)));
    REQUIRE(a.length() == 1);
    CHECK(a.orders()[0] == 4);
    CHECK(a.group_order() == 4);
    CHECK(a.q_gen(0) == Rat(7, 4));
    CHECK(a.b_gen(0, 0) == Rat(3, 4));
    CHECK(a.elem_order({1}) == 4);
    CHECK(a.elem_order({2}) == 2);
    CHECK(a.elem_order({0}) == 1);
}

TEST_CASE("unimodular lattices have trivial discriminants") {
    CHECK(discriminant_form(lat::U()).length() == 0);
    CHECK(discriminant_form(lat::E(8)).group_order() == 1);
    CHECK(discriminant_form(lat::k3()).length() == 0);
}

TEST_CASE("group order equals absolute determinant") {
    for (const Lattice& l : {lat::U_scaled(Int(3)), lat::A(2), lat::E(7), lat::D(4),
                             rescale(lat::E(8), Int(2)), lat::T(3, 3, 4)}) {
        Int d = l.determinant();
        CHECK(discriminant_form(l).group_order() == (d < 0 ? -d : d));
    }
}

TEST_CASE("rescaled e8 is two elementary of length eight") {
    FiniteQuadraticForm a = discriminant_form(rescale(lat::E(8), Int(2)));
    CHECK(a.length() == 8);
    for (const Int& o : a.orders()) CHECK(o == 2);
    CHECK(a.group_order() == 256);
}

TEST_CASE("q and b satisfy the polarization identity") {
    FiniteQuadraticForm a = discriminant_form(direct_sum(lat::A(2), lat::diag(Int(-4))));
    auto els = a.elements();
    CHECK(Int(els.size()) == a.group_order());
    for (const auto& x : els) {
        for (const auto& y : els) {
            Rat lhs = a.q_value(a.add(x, y));
            Rat rhs = mod2(a.q_value(x) + a.q_value(y) + Rat(2) * a.b_value(x, y));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("generators pair as the dual basis gram") {
    std::vector<VecQ> gens = discriminant_generators(lat::U_scaled(Int(2)));
    FiniteQuadraticForm a = discriminant_form(lat::U_scaled(Int(2)));
    REQUIRE(gens.size() == a.length());
    // each generator is a rational vector of ambient length 2
    for (const auto& g : gens) CHECK(g.size() == 2);
}

TEST_CASE("direct sum and negation of forms") {
    FiniteQuadraticForm a = discriminant_form(lat::A(2));
    FiniteQuadraticForm s = fqf_direct_sum(a, a);
    CHECK(s.group_order() == 9);
    FiniteQuadraticForm n = fqf_negate(a);
    CHECK(n.group_order() == 3);
    // A2 carries q = 4/3 on a generator; its negative carries 2/3
    CHECK(a.q_value({1}) == Rat(4, 3));
    CHECK(n.q_value({1}) == Rat(2, 3));
    CHECK(!are_isomorphic(a, n));
}

TEST_CASE("p primary decomposition") {
    FiniteQuadraticForm a = discriminant_form(lat::diag(Int(-12)));
    FiniteQuadraticForm a2 = p_primary(a, Int(2));
    FiniteQuadraticForm a3 = p_primary(a, Int(3));
    CHECK(a2.group_order() == 4);
    CHECK(a3.group_order() == 3);
    CHECK(a2.orders() == std::vector<Int>{4});
    CHECK(a3.orders() == std::vector<Int>{3});
    CHECK(p_primary(a, Int(5)).group_order() == 1);
}

TEST_CASE("isomorphy of discriminant forms") {
    CHECK(are_isomorphic(discriminant_form(lat::A(2)),
                         discriminant_form(direct_sum(lat::U(), lat::A(2)))));
    CHECK(!are_isomorphic(discriminant_form(lat::A(2)),
                          discriminant_form(lat::diag(Int(-6)))));
    // stable under adding a unimodular block on either side
    CHECK(are_isomorphic(discriminant_form(lat::E(7)),
                         discriminant_form(direct_sum(lat::E(8), lat::E(7)))));
}

TEST_CASE("isomorphy on a long two elementary form") {
    Lattice l = direct_sum(rescale(lat::E(8), Int(2)), lat::U_scaled(Int(2)));
    FiniteQuadraticForm a = discriminant_form(l);
    CHECK(a.group_order() == 1024);
    CHECK(are_isomorphic(a, a));
    CHECK(are_isomorphic(a, fqf_negate(a)));
}

TEST_CASE("isotropic elements of a split form") {
    FiniteQuadraticForm a = discriminant_form(lat::U_scaled(Int(3)));
    auto iso = isotropic_elements(a);
    CHECK(iso.size() == 5);
}

TEST_CASE("quotient by an isotropic subgroup") {
    FiniteQuadraticForm a = discriminant_form(lat::U_scaled(Int(3)));
    FiniteQuadraticForm q = quotient_form(a, {{1, 0}});
    CHECK(q.group_order() == 1);
}

TEST_CASE("quotient rejects non isotropic generators") {
    FiniteQuadraticForm a = discriminant_form(lat::A(2));
    CHECK_THROWS_AS(quotient_form(a, {{1}}), std::domain_error);
}

TEST_CASE("trivial action on the discriminant") {
    Lattice l = lat::diag(Int(-4));
    CHECK(acts_trivially_on_discriminant(l, MatZ{{1}}));
    CHECK(!acts_trivially_on_discriminant(l, MatZ{{-1}}));
    CHECK(acts_trivially_on_discriminant(lat::U(), MatZ{{0, 1}, {1, 0}}));
    CHECK(!acts_trivially_on_discriminant(lat::U_scaled(Int(2)), MatZ{{0, 1}, {1, 0}}));
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(FiniteQuadraticForm({Int(2)}, {Rat(1, 2)}, {}), std::domain_error);
    CHECK_THROWS_AS(FiniteQuadraticForm({Int(4), Int(2)}, {Rat(0), Rat(0)},
                                        {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}),
                    std::domain_error);  // orders must form a divisibility chain
    CHECK_THROWS_AS(FiniteQuadraticForm({Int(2)}, {Rat(1, 3)}, {{Rat(0)}}),
                    std::domain_error);  // q incompatible with order
}

TEST_CASE("reduce folds coordinates into range") {
    FiniteQuadraticForm a = discriminant_form(lat::diag(Int(-4)));
    CHECK(a.reduce({5}) == FqfElem{1});
    CHECK(a.reduce({-1}) == FqfElem{3});
    CHECK(a.add({3}, {2}) == FqfElem{1});
}
