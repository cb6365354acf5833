#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3m/lattice.hpp"
#include "k3m/parse.hpp"

using namespace k3m;

TEST_CASE("atoms") {
    CHECK(parse_lattice("U").gram() == lat::U().gram());
    CHECK(parse_lattice("E8").gram() == lat::E(8).gram());
    CHECK(parse_lattice("A5").gram() == lat::A(5).gram());
    CHECK(parse_lattice("A_5").gram() == lat::A(5).gram());
    CHECK(parse_lattice("D 9").gram() == lat::D(9).gram());
    CHECK(parse_lattice("<4>").gram() == MatZ{{4}});
    CHECK(parse_lattice("<-6>").gram() == MatZ{{-6}});
    CHECK(parse_lattice("diag(-6)").gram() == MatZ{{-6}});
    CHECK(parse_lattice("T(2,3,7)").gram() == lat::T(2, 3, 7).gram());
    CHECK(parse_lattice("L_K3").gram() == lat::k3().gram());
    CHECK(parse_lattice("K3").gram() == lat::k3().gram());
}

TEST_CASE("rescale suffixes") {
    CHECK(parse_lattice("U(2)").gram() == lat::U_scaled(Int(2)).gram());
    CHECK(parse_lattice("E8(2)").gram() == rescale(lat::E(8), Int(2)).gram());
    CHECK(parse_lattice("U(2)(3)").gram() == lat::U_scaled(Int(6)).gram());
    CHECK(parse_lattice("A2(-1)").gram() == rescale(lat::A(2), Int(-1)).gram());
}

TEST_CASE("sums") {
    Lattice l = parse_lattice("U+E8+E8");
    CHECK(l.rank() == 18);
    CHECK(l.determinant() == -1);
    Lattice m = parse_lattice("E8(2)+U(2)+U");
    CHECK(m.rank() == 12);
    CHECK(m.signature() == Signature{2, 10});
    CHECK(m.gram() == direct_sum(rescale(lat::E(8), Int(2)),
                                 direct_sum(lat::U_scaled(Int(2)), lat::U())).gram());
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_lattice(" U + E8 ( 2 ) ").gram() == parse_lattice("U+E8(2)").gram());
    CHECK(parse_lattice("T( 2 , 3 , 7 )").gram() == lat::T(2, 3, 7).gram());
}

TEST_CASE("canonical labels") {
    CHECK(parse_lattice("U").label() == "U");
    CHECK(parse_lattice("U + <-6>").label() == "U+<-6>");
    CHECK(parse_lattice("diag(-6)").label() == "<-6>");
    CHECK(parse_lattice("A_5").label() == "A5");
    CHECK(parse_lattice("K3").label() == "L_K3");
    CHECK(parse_lattice("E8(2)+U(2)").label() == "E8(2)+U(2)");
}

TEST_CASE("parse errors carry positions") {
    for (const char* bad : {"", "Q", "U+", "<4", "E9", "U(0)", "T(2,3)", "U)",
                            "A", "A0", "<x>", "U(2", "diag()", "U U"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_lattice(bad), std::domain_error);
    }
}

TEST_CASE("labels round trip through the parser") {
    for (const char* expr : {"U", "U+E8+E8+<-4>", "E8(2)+U(2)+U", "T(2,3,9)", "L_K3", "<2>"}) {
        Lattice l = parse_lattice(expr);
        Lattice again = parse_lattice(l.label());
        CHECK(again.gram() == l.gram());
        CHECK(again.label() == l.label());
    }
}
