#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3m/discform.hpp"
#include "k3m/embed.hpp"
#include "k3m/lattice.hpp"
#include "k3m/mirror.hpp"

using namespace k3m;

namespace {

MatZ columns(std::size_t rank, const std::vector<VecZ>& cols) {
    MatZ m(rank, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

VecZ unit(std::size_t rank, std::size_t i, long v = 1) {
    VecZ e(rank, Int(0));
    e[i] = v;
    return e;
}

}  // namespace

TEST_CASE("quotient of the perp of an isotropic vector") {
    for (long n : {1L, 2L, 3L, 5L}) {
        Lattice l = direct_sum(lat::U(), lat::diag(Int(2 * n)));
        MirrorResult r = mirror_lattice(l, unit(3, 0));
        CHECK(r.m == 1);
        CHECK(r.check_lattice.gram() == MatZ{{2 * n}});
        REQUIRE(r.splitting_witness.has_value());
        MatZ w = *r.splitting_witness;
        MatZ pulled = w.transpose() * l.gram() * w;
        CHECK(pulled == MatZ{{0, 1}, {1, 0}});
    }
}

TEST_CASE("quotient construction rejects bad input") {
    Lattice l = direct_sum(lat::U(), lat::diag(Int(2)));
    CHECK_THROWS_AS(mirror_lattice(l, VecZ{0, 0, 1}), std::domain_error);  // not isotropic
    CHECK_THROWS_AS(mirror_lattice(l, VecZ{2, 0, 0}), std::domain_error);  // not primitive
    CHECK_THROWS_AS(mirror_lattice(l, VecZ{0, 0}), std::domain_error);     // wrong length
}

TEST_CASE("mirror of a polarizing sublattice of the k3 model") {
    Lattice k = lat::k3();
    long n = 3;
    VecZ col = unit(22, 4);
    col[5] = n;
    Embedding e{k, columns(22, {col})};
    MirrorResult r = mirror_of_polarization(lat::diag(Int(2 * n)), e, unit(22, 0));
    CHECK(r.m == 1);
    CHECK(r.check_lattice.rank() == 19);
    CHECK(r.check_lattice.signature() == Signature{1, 18});
    Lattice model = direct_sum(lat::U(), direct_sum(lat::E(8), direct_sum(lat::E(8), lat::diag(Int(-2 * n)))));
    CHECK(genus_equal(r.check_lattice, model).equal);
}

TEST_CASE("polarization mirror validates its arguments") {
    Lattice k = lat::k3();
    VecZ col = unit(22, 4);
    col[5] = 2;
    Embedding e{k, columns(22, {col})};
    // stated gram disagrees with the pullback
    CHECK_THROWS_AS(mirror_of_polarization(lat::diag(Int(2)), e, unit(22, 0)), std::domain_error);
    // f fails to be orthogonal to the sublattice
    CHECK_THROWS_AS(mirror_of_polarization(lat::diag(Int(4)), e, unit(22, 5)), std::domain_error);
    // non primitive embedding
    Embedding bad{k, columns(22, {vec_scale(Int(2), col)})};
    CHECK_THROWS_AS(mirror_of_polarization(lat::diag(Int(16)), bad, unit(22, 0)), std::domain_error);
}

TEST_CASE("duality of period lattices") {
    CHECK(k3_dual(lat::T(2, 3, 7), lat::T(2, 3, 7)));
    CHECK(k3_dual(lat::T(2, 3, 9), lat::T(3, 3, 4)));   // rank 12 + rank 8
    CHECK(k3_dual(lat::T(3, 3, 4), lat::T(2, 3, 9)));
    CHECK(!k3_dual(lat::T(2, 3, 9), lat::T(2, 3, 9)));  // rank sum 24
    CHECK(!k3_dual(lat::T(2, 3, 9), direct_sum(lat::U(), lat::D(6))));  // forms disagree
    CHECK_THROWS_AS(k3_dual(lat::E(8), lat::E(8)), std::domain_error);  // wrong signature
}

TEST_CASE("rank bookkeeping for dual pairs") {
    CHECK(rank_relation(lat::T(2, 3, 9), lat::T(3, 3, 4)));
    CHECK(!rank_relation(lat::T(2, 3, 7), lat::T(2, 3, 9)));
}

TEST_CASE("isometry extension fixing a hyperbolic generator") {
    Lattice mcheck = lat::diag(Int(4));
    IsometryMatrix s = zmf_isometry(Int(1), mcheck, MatZ{{1}}, {1});
    Lattice full = direct_sum(lat::U(), mcheck);
    CHECK(is_isometry(full, s.matrix));
    CHECK(s.matrix.col(0) == VecZ{1, 0, 0});
    CHECK(acts_trivially_on_discriminant(full, s.matrix));
}

TEST_CASE("isometry extension composes through the twisted law") {
    Lattice mcheck = lat::diag(Int(4));
    MatZ id{{1}};
    VecZ v1{1}, v2{2};
    IsometryMatrix a = zmf_isometry(Int(1), mcheck, id, v1);
    IsometryMatrix b = zmf_isometry(Int(1), mcheck, id, v2);
    IsometryMatrix ab = zmf_isometry(Int(1), mcheck, id, vec_add(v1, v2));
    CHECK(b.matrix * a.matrix == ab.matrix);
}

TEST_CASE("isometry extension checks integrality of the twist") {
    Lattice mcheck = lat::diag(Int(2));
    CHECK_THROWS_AS(zmf_isometry(Int(2), mcheck, MatZ{{1}}, {1}), std::domain_error);
    // v in m * mcheck is always admissible
    IsometryMatrix ok = zmf_isometry(Int(2), mcheck, MatZ{{1}}, {2});
    Lattice full = direct_sum(lat::U_scaled(Int(2)), mcheck);
    CHECK(is_isometry(full, ok.matrix));
    CHECK(acts_trivially_on_discriminant(full, ok.matrix));
}

TEST_CASE("isometry extension rejects a non isometry of the base") {
    CHECK_THROWS_AS(zmf_isometry(Int(1), lat::diag(Int(4)), MatZ{{2}}, {0}), std::domain_error);
}

TEST_CASE("tube domain point on the period quadric") {
    Lattice n = direct_sum(lat::U(), lat::diag(Int(2)));
    TubeResult t = tube_alpha(n, unit(3, 0), unit(3, 1), {CRat(Rat(1), Rat(1))});
    REQUIRE(t.mu.size() == 3);
    CHECK(t.mu[0] == CRat(Rat(0), Rat(-2)));
    CHECK(t.mu[1] == CRat(Rat(1)));
    CHECK(t.mu[2] == CRat(Rat(1), Rat(1)));
    CHECK(t.mu_pair_conj == Rat(4));
    CHECK(t.in_domain);
}

TEST_CASE("tube domain flags a real point as outside") {
    Lattice n = direct_sum(lat::U(), lat::diag(Int(2)));
    TubeResult t = tube_alpha(n, unit(3, 0), unit(3, 1), {CRat(Rat(1))});
    CHECK(!t.in_domain);
    CHECK(t.mu_pair_conj == Rat(0));
}

TEST_CASE("tube domain validates the frame") {
    Lattice n = direct_sum(lat::U(), lat::diag(Int(2)));
    CHECK_THROWS_AS(tube_alpha(n, unit(3, 2), unit(3, 1), {CRat(Rat(1), Rat(1))}),
                    std::domain_error);  // f not isotropic
    CHECK_THROWS_AS(tube_alpha(n, unit(3, 0), unit(3, 0), {CRat(Rat(1), Rat(1))}),
                    std::domain_error);  // (f, g) != 1
    CHECK_THROWS_AS(tube_alpha(n, unit(3, 0), unit(3, 1), {}), std::domain_error);  // bad length
}

TEST_CASE("wedge identity numerically and symbolically") {
    for (long n = 1; n <= 6; ++n) CHECK(kummer_wedge_identity(Int(n)));
    CHECK(kummer_wedge_identity_symbolic());
}
