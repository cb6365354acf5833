#include "k3m/toric.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3m {

WeightSystem::WeightSystem(std::array<Int, 4> weights) : w(std::move(weights)), d(0) {
    Int g = 0;
    for (const Int& x : w) {
        if (x < 1) throw std::domain_error("weights must be positive");
        d += x;
        g = gcd(g, x);
    }
    if (g != 1) throw std::domain_error("weights must have gcd 1");
    for (std::size_t i = 0; i < 4; ++i) {
        if (!divides(w[i], d))
            throw std::domain_error("weight " + w[i].get_str() + " does not divide the sum " +
                                    d.get_str());
        di[i] = divexact(d, w[i]);
    }
}

namespace {

// Barycentric coordinates of the origin; throws unless the four points are
// affinely independent and surround the origin strictly.
void validate_simplex(const std::array<VecZ, 4>& v) {
    MatZ m(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        if (v[j].size() != 3) throw std::domain_error("simplex vertices must have 3 coordinates");
        for (std::size_t i = 0; i < 3; ++i) m.at(i, j) = v[j][i];
        m.at(3, j) = 1;
    }
    if (det(m) == 0) throw std::domain_error("simplex vertices are affinely dependent");
    VecZ rhs{Int(0), Int(0), Int(0), Int(1)};
    std::optional<VecQ> bary = solve_rational(m, rhs);
    if (!bary) throw std::logic_error("barycentric solve failed on a nondegenerate simplex");
    for (const Rat& l : *bary)
        if (!(l > 0)) throw std::domain_error("origin is not strictly interior to the simplex");
}

}  // namespace

Simplex3 make_simplex(const std::vector<VecZ>& vertices) {
    if (vertices.size() != 4) throw std::domain_error("a lattice 3-simplex needs exactly four vertices");
    std::array<VecZ, 4> v;
    std::copy(vertices.begin(), vertices.end(), v.begin());
    validate_simplex(v);
    return Simplex3{std::move(v)};
}

Simplex3 delta_of_weights(const WeightSystem& ws) {
    MatZ row(1, 4);
    for (std::size_t i = 0; i < 4; ++i) row.at(0, i) = ws.w[i];
    MatZ basis = kernel_saturated(row);
    if (basis.cols() != 3) throw std::logic_error("weight relation lattice has wrong rank");
    std::array<VecZ, 4> v;
    for (std::size_t j = 0; j < 4; ++j) {
        VecZ t(4, Int(-1));
        t[j] = ws.di[j] - 1;
        std::optional<VecZ> x = solve_integer(basis, t);
        if (!x) throw std::logic_error("simplex vertex escapes the relation lattice");
        v[j] = std::move(*x);
    }
    validate_simplex(v);
    return Simplex3{std::move(v)};
}

PolarDualResult polar_dual(const Simplex3& s) {
    validate_simplex(s.vertices);
    std::vector<VecQ> functionals(4);
    bool reflexive = true;
    for (std::size_t j = 0; j < 4; ++j) {
        MatZ m(3, 3);
        std::size_t r = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == j) continue;
            for (std::size_t c = 0; c < 3; ++c) m.at(r, c) = s.vertices[i][c];
            ++r;
        }
        VecZ one{Int(1), Int(1), Int(1)};
        std::optional<VecQ> l = solve_rational(m, one);
        if (!l) throw std::logic_error("facet plane passes through the origin");
        for (const Rat& x : *l)
            if (x.get_den() != 1) reflexive = false;
        functionals[j] = std::move(*l);
    }
    std::optional<Simplex3> dual;
    if (reflexive) {
        std::array<VecZ, 4> dv;
        for (std::size_t j = 0; j < 4; ++j) {
            dv[j].resize(3);
            for (std::size_t c = 0; c < 3; ++c) dv[j][c] = functionals[j][c].get_num();
        }
        validate_simplex(dv);
        dual = Simplex3{std::move(dv)};
    }
    return PolarDualResult{reflexive, std::move(functionals), std::move(dual)};
}

Int pi_group_order(const WeightSystem& ws) {
    Int num = ws.di[0] * ws.di[1] * ws.di[2] * ws.di[3];
    Int den = ws.d * ws.d;
    if (!divides(den, num))
        throw std::logic_error("group order formula is not integral for these weights");
    return divexact(num, den);
}

PiGroup pi_group_structure(const WeightSystem& ws) {
    // Basis of K = {a : sum w_i a_i = 0 mod d} as the projection of the
    // kernel of (w | d) in Z^5.
    MatZ row(1, 5);
    for (std::size_t i = 0; i < 4; ++i) row.at(0, i) = ws.w[i];
    row.at(0, 4) = ws.d;
    MatZ ker = kernel_saturated(row);
    if (ker.cols() != 4) throw std::logic_error("congruence lattice has wrong rank");
    MatZ basis(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) basis.at(i, j) = ker.at(i, j);

    // Relations: the coordinate orders d_i e_i and the diagonal.
    MatZ rel(4, 5);
    for (std::size_t j = 0; j < 4; ++j) {
        VecZ t(4, Int(0));
        t[j] = ws.di[j];
        std::optional<VecZ> x = solve_integer(basis, t);
        if (!x) throw std::logic_error("relation vector escapes the congruence lattice");
        for (std::size_t i = 0; i < 4; ++i) rel.at(i, j) = (*x)[i];
    }
    {
        VecZ diag(4, Int(1));
        std::optional<VecZ> x = solve_integer(basis, diag);
        if (!x) throw std::logic_error("diagonal escapes the congruence lattice");
        for (std::size_t i = 0; i < 4; ++i) rel.at(i, 4) = (*x)[i];
    }
    SnfResult s = snf(rel);
    PiGroup out{Int(1), {}};
    for (std::size_t i = 0; i < 4; ++i) {
        Int f = s.d.at(i, i);
        if (f == 0) throw std::logic_error("relation lattice has infinite index");
        out.order *= f;
        if (f > 1) out.invariant_factors.push_back(f);
    }
    return out;
}

namespace {

Int edge_gcd(const VecZ& p, const VecZ& q) {
    Int g = 0;
    for (std::size_t i = 0; i < p.size(); ++i) g = gcd(g, p[i] - q[i]);
    return g;
}

}  // namespace

std::vector<EdgeCount> edge_interior_counts(const Simplex3& s) {
    std::vector<EdgeCount> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            out.push_back({i, j, edge_gcd(s.vertices[i], s.vertices[j]) - 1});
    return out;
}

StarReport condition_star(const WeightSystem& ws) {
    Simplex3 delta = delta_of_weights(ws);
    PolarDualResult pd = polar_dual(delta);
    if (!pd.reflexive) throw std::domain_error("weight simplex is not reflexive");
    StarReport rep{true, {}};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            // Complementary pair indexes the dual edge: the facets meeting
            // along edge {i,j} are those omitting the other two vertices.
            int k = -1, l = -1;
            for (int t = 0; t < 4; ++t) {
                if (t == i || t == j) continue;
                (k < 0 ? k : l) = t;
            }
            Int ec = edge_gcd(delta.vertices[i], delta.vertices[j]) - 1;
            Int dc = edge_gcd(pd.dual->vertices[k], pd.dual->vertices[l]) - 1;
            if (ec != 0 || dc != 0) rep.holds = false;
            rep.rows.push_back({i, j, std::move(ec), std::move(dc)});
        }
    return rep;
}

WeightSystem strange_duality_weights(const std::array<Int, 3>& triple, const Int& d0) {
    std::array<Int, 4> ds{d0, triple[0], triple[1], triple[2]};
    Rat sum(0);
    for (const Int& x : ds) {
        if (x < 1) throw std::domain_error("degrees must be positive");
        sum += Rat(1) / Rat(x);
    }
    if (sum != 1) throw std::domain_error("reciprocal degree sum must be 1");
    Int d = 1;
    for (const Int& x : ds) d = lcm(d, x);
    std::array<Int, 4> w;
    for (std::size_t i = 0; i < 4; ++i) w[i] = divexact(d, ds[i]);
    WeightSystem ws(std::move(w));
    if (ws.d != d) throw std::logic_error("weight sum disagrees with the common degree");
    return ws;
}

}  // namespace k3m
