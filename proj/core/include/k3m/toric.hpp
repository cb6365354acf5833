#pragma once

#include "k3m/mat.hpp"

#include <array>
#include <optional>
#include <vector>

namespace k3m {

// Four positive weights with gcd 1 whose sum d is divisible by each weight.
// di holds the four quotients d / w_i.
struct WeightSystem {
    std::array<Int, 4> w;
    Int d;
    std::array<Int, 4> di;
    explicit WeightSystem(std::array<Int, 4> weights);
    bool operator==(const WeightSystem&) const = default;
};

// Lattice 3-simplex: four integer points, affinely independent, with the
// origin strictly interior. Coordinates live in a fixed basis of the rank-3
// lattice cut out by the weight relation.
struct Simplex3 {
    std::array<VecZ, 4> vertices;
    bool operator==(const Simplex3&) const = default;
};

// Validating constructor for simplex data from the outside world.
Simplex3 make_simplex(const std::vector<VecZ>& vertices);

// The weight simplex {t : sum w_i t_i = 0, t_i >= -1}: vertex j has
// t_i = -1 away from j and t_j = d_j - 1, written in the deterministic
// HNF basis of the relation lattice.
Simplex3 delta_of_weights(const WeightSystem& ws);

// Polar dual. Row j of functionals supports the facet omitting vertex j,
// normalized to value 1 on the facet. The dual simplex is attached exactly
// when every functional is integral (the reflexive case).
struct PolarDualResult {
    bool reflexive;
    std::vector<VecQ> functionals;
    std::optional<Simplex3> dual;
};
PolarDualResult polar_dual(const Simplex3& s);

// Order of the quotient group acting on the weighted hypersurface family:
// (d_0 d_1 d_2 d_3) / d^2, asserted integral.
Int pi_group_order(const WeightSystem& ws);

// The same group computed independently as a quotient of integer lattices:
// {a : sum w_i a_i = 0 mod d} modulo the span of d_i e_i and (1,1,1,1).
// invariant_factors lists the cyclic orders > 1 in divisibility order.
struct PiGroup {
    Int order;
    std::vector<Int> invariant_factors;
};
PiGroup pi_group_structure(const WeightSystem& ws);

// Interior lattice-point count of each edge: gcd of the coordinate
// differences minus one. Edges are reported as index pairs i < j.
struct EdgeCount {
    int i, j;
    Int count;
};
std::vector<EdgeCount> edge_interior_counts(const Simplex3& s);

// For every edge {i,j} of the weight simplex, pairs its interior count with
// that of the dual edge (the hull of the two dual vertices of the
// complementary index pair). holds = all counts vanish.
struct StarRow {
    int i, j;
    Int edge_count, dual_count;
};
struct StarReport {
    bool holds;
    std::vector<StarRow> rows;
};
StarReport condition_star(const WeightSystem& ws);

// Weights w_i = d/d_i from an exponent triple and its complementary degree,
// with d the lcm of all four entries; requires the reciprocal sum to be 1.
WeightSystem strange_duality_weights(const std::array<Int, 3>& triple, const Int& d0);

}  // namespace k3m
