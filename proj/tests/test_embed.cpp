#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3m/discform.hpp"
#include "k3m/embed.hpp"
#include "k3m/lattice.hpp"

using namespace k3m;

namespace {

// Column matrix from explicit ambient vectors.
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

TEST_CASE("primitivity of embeddings") {
    Lattice k = lat::k3();
    VecZ f = unit(22, 4);
    f[5] = 3;
    CHECK(is_primitive_embedding({k, columns(22, {f})}));
    CHECK(!is_primitive_embedding({k, columns(22, {vec_scale(Int(2), f)})}));
}

TEST_CASE("complement of a degree vector in the k3 model") {
    Lattice k = lat::k3();
    VecZ f = unit(22, 4);
    f[5] = 3;  // norm 6 vector inside the third hyperbolic block
    ComplementResult c = orthogonal_complement({k, columns(22, {f})});
    CHECK(c.input_was_primitive);
    CHECK(c.lattice.rank() == 21);
    CHECK(c.lattice.signature() == Signature{2, 19});
    CHECK(c.lattice.is_even());
    GenusComparison g =
        genus_equal(c.lattice, direct_sum(direct_sum(lat::U(), lat::U()),
                                          direct_sum(direct_sum(lat::E(8), lat::E(8)),
                                                     lat::diag(Int(-6)))));
    CHECK(g.equal);
}

TEST_CASE("complement saturates non primitive input") {
    Lattice l = direct_sum(lat::diag(Int(2)), lat::diag(Int(-4)));
    ComplementResult c = orthogonal_complement({l, MatZ{{2}, {0}}});
    CHECK(!c.input_was_primitive);
    CHECK(c.lattice.gram() == MatZ{{-4}});
    CHECK(c.embedding.col(0) == VecZ{0, 1});
}

TEST_CASE("complement of an isotropic vector is degenerate and rejected") {
    CHECK_THROWS_AS(orthogonal_complement({lat::U(), MatZ{{1}, {0}}}), std::domain_error);
}

TEST_CASE("complement embedding columns really are orthogonal") {
    Lattice k = lat::k3();
    VecZ f = unit(22, 4);
    f[5] = 2;
    ComplementResult c = orthogonal_complement({k, columns(22, {f})});
    for (std::size_t j = 0; j < c.embedding.cols(); ++j) {
        CHECK(k.inner(f, c.embedding.col(j)) == 0);
    }
    MatZ pulled = c.embedding.transpose() * k.gram() * c.embedding;
    CHECK(pulled == c.lattice.gram());
}

TEST_CASE("existence criterion for primitive embeddings") {
    CHECK(nikulin_exists(lat::diag(Int(2))) == Criterion::guaranteed);
    CHECK(nikulin_exists(direct_sum(lat::U(), lat::E(8))) == Criterion::guaranteed);
    CHECK(nikulin_exists(lat::T(2, 3, 7)) == Criterion::guaranteed);
    CHECK_THROWS_AS(nikulin_exists(lat::E(8)), std::domain_error);       // not hyperbolic
    CHECK_THROWS_AS(nikulin_exists(lat::diag(Int(1))), std::domain_error);  // odd
}

TEST_CASE("uniqueness criterion") {
    CHECK(nikulin_unique(lat::diag(Int(2))) == Criterion::guaranteed);
    CHECK(nikulin_unique(direct_sum(lat::U(), lat::E(8))) == Criterion::guaranteed);
}

TEST_CASE("hyperbolic summand criterion") {
    UmSummandResult r = u_m_summand_criterion(lat::k3(), Int(1));
    CHECK(r.verdict == Criterion::guaranteed);
    UmSummandResult tight = u_m_summand_criterion(direct_sum(lat::U(), lat::diag(Int(-6))), Int(1));
    CHECK(tight.verdict == Criterion::not_implied);
}

TEST_CASE("hyperbolic summand witness pairs correctly when found") {
    Lattice s = direct_sum(lat::U_scaled(Int(2)), direct_sum(lat::U(), lat::U()));
    UmSummandResult r = u_m_summand_criterion(s, Int(2));
    REQUIRE(r.verdict == Criterion::guaranteed);
    REQUIRE(r.witness.has_value());
    FiniteQuadraticForm a = discriminant_form(s);
    auto [x, y] = *r.witness;
    CHECK(a.q_value(x) == 0);
    CHECK(a.q_value(y) == 0);
    CHECK(a.b_value(x, y) == Rat(1, 2));
    // the short form has no room next to a hyperbolic pair
    Lattice crowded = direct_sum(lat::U_scaled(Int(2)),
                                 direct_sum(lat::U_scaled(Int(2)), rescale(lat::E(8), Int(2))));
    CHECK(u_m_summand_criterion(crowded, Int(2)).verdict == Criterion::not_implied);
}

TEST_CASE("isotropic primitive vectors of the hyperbolic plane") {
    auto v = find_isotropic_primitive(lat::U(), Int(1));
    CHECK(v.size() == 4);
    for (const auto& x : v) {
        CHECK(lat::U().norm(x) == 0);
        CHECK(is_primitive(x));
    }
}

TEST_CASE("admissibility of an isotropic vector with unit divisor") {
    Lattice l = direct_sum(lat::U(), lat::diag(Int(-2)));
    AdmissibilityResult r = is_m_admissible(l, unit(3, 0), Int(1));
    CHECK(r.verdict == Admissibility::yes);
    REQUIRE(r.g.has_value());
    CHECK(l.norm(*r.g) == 0);
    CHECK(l.inner(unit(3, 0), *r.g) == 1);
    REQUIRE(r.complement.has_value());
    CHECK(r.complement->gram() == MatZ{{-2}});
    REQUIRE(r.splitting_basis.has_value());
    Int d = det(*r.splitting_basis);
    CHECK((d == 1 || d == -1));
}

TEST_CASE("admissibility at divisor two") {
    Lattice l = direct_sum(lat::U_scaled(Int(2)), lat::U());
    AdmissibilityResult r = is_m_admissible(l, unit(4, 0), Int(2));
    CHECK(r.verdict == Admissibility::yes);
    REQUIRE(r.complement.has_value());
    CHECK(genus_equal(*r.complement, lat::U()).equal);
}

TEST_CASE("admissibility refuses a mismatched divisor") {
    Lattice l = direct_sum(lat::U_scaled(Int(2)), lat::U());
    CHECK(is_m_admissible(l, unit(4, 0), Int(1)).verdict == Admissibility::no);
}

TEST_CASE("genus comparison") {
    CHECK(genus_equal(lat::E(8), lat::E(8)).equal);
    CHECK(!genus_equal(lat::U(), lat::E(8)).equal);
    CHECK(!genus_equal(lat::A(2), rescale(lat::A(2), Int(-1))).equal);
    CHECK_THROWS_AS(genus_equal(lat::diag(Int(1)), lat::diag(Int(1))), std::domain_error);
}

TEST_CASE("genus equality promoted to isomorphy on indefinite lattices") {
    Lattice a = direct_sum(lat::U(), direct_sum(lat::E(8), direct_sum(lat::E(8), lat::diag(Int(-4)))));
    Lattice b = direct_sum(lat::U(), direct_sum(lat::E(8), lat::D(9)));
    GenusComparison g = genus_equal(a, b);
    CHECK(g.equal);
    CHECK(g.promoted);
}
