#include "k3m/discform.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace k3m {

namespace {

// Renormalize generator data (arbitrary orders > 0) to invariant-factor form.
// New generators are integer combinations of the old ones, found through the
// Smith form of the relation matrix diag(orders).
FiniteQuadraticForm canonicalize(const std::vector<Int>& orders, const std::vector<Rat>& q,
                                 const std::vector<std::vector<Rat>>& b) {
    const std::size_t k = orders.size();
    if (k == 0) return FiniteQuadraticForm();
    MatZ rel(k, k);
    for (std::size_t i = 0; i < k; ++i) rel.at(i, i) = orders[i];
    SnfResult s = snf(rel);
    MatZ uinv = inverse_unimodular(s.u);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < k; ++j)
        if (s.d.at(j, j) > 1) keep.push_back(j);
    auto q_of = [&](const VecZ& x) {
        Rat acc(0);
        for (std::size_t i = 0; i < k; ++i) {
            if (x[i] == 0) continue;
            acc += Rat(x[i] * x[i]) * q[i];
            for (std::size_t j = i + 1; j < k; ++j) acc += Rat(2 * x[i] * x[j]) * b[i][j];
        }
        return mod2(acc);
    };
    auto b_of = [&](const VecZ& x, const VecZ& y) {
        Rat acc(0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (x[i] != 0 && y[j] != 0) acc += Rat(x[i] * y[j]) * b[i][j];
        return mod1(acc);
    };
    std::vector<Int> no(keep.size());
    std::vector<Rat> nq(keep.size());
    std::vector<std::vector<Rat>> nb(keep.size(), std::vector<Rat>(keep.size()));
    std::vector<VecZ> gens(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
        no[a] = s.d.at(keep[a], keep[a]);
        gens[a] = uinv.col(keep[a]);
        nq[a] = q_of(gens[a]);
    }
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t c = 0; c < keep.size(); ++c) nb[a][c] = b_of(gens[a], gens[c]);
    return FiniteQuadraticForm(std::move(no), std::move(nq), std::move(nb));
}

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm() = default;

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<Int> orders, std::vector<Rat> q,
                                         std::vector<std::vector<Rat>> b)
    : orders_(std::move(orders)), q_(std::move(q)), b_(std::move(b)) {
    const std::size_t k = orders_.size();
    if (q_.size() != k || b_.size() != k) throw std::domain_error("finite form: shape mismatch");
    for (std::size_t i = 0; i < k; ++i) {
        if (b_[i].size() != k) throw std::domain_error("finite form: shape mismatch");
        if (orders_[i] <= 1) throw std::domain_error("finite form: orders must exceed 1");
        if (i + 1 < k && !divides(orders_[i], orders_[i + 1]))
            throw std::domain_error("finite form: orders must form a divisibility chain");
    }
    for (std::size_t i = 0; i < k; ++i) {
        q_[i] = mod2(q_[i]);
        if (mod2(Rat(orders_[i] * orders_[i]) * q_[i]) != 0)
            throw std::domain_error("finite form: q value incompatible with generator order");
        for (std::size_t j = 0; j < k; ++j) {
            b_[i][j] = mod1(b_[i][j]);
            if (mod1(Rat(orders_[i]) * b_[i][j]) != 0)
                throw std::domain_error("finite form: b value incompatible with generator order");
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (mod1(q_[i]) != b_[i][i])
            throw std::domain_error("finite form: b(g,g) must equal q(g) mod 1");
        for (std::size_t j = 0; j < k; ++j)
            if (b_[i][j] != b_[j][i]) throw std::domain_error("finite form: b must be symmetric");
    }
}

Int FiniteQuadraticForm::group_order() const {
    Int n = 1;
    for (const Int& d : orders_) n *= d;
    return n;
}

Rat FiniteQuadraticForm::q_value(const FqfElem& x) const {
    if (x.size() != orders_.size()) throw std::domain_error("finite form element: wrong length");
    Rat acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        acc += Rat(x[i] * x[i]) * q_[i];
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[j] != 0) acc += Rat(2 * x[i] * x[j]) * b_[i][j];
    }
    return mod2(acc);
}

Rat FiniteQuadraticForm::b_value(const FqfElem& x, const FqfElem& y) const {
    if (x.size() != orders_.size() || y.size() != orders_.size())
        throw std::domain_error("finite form element: wrong length");
    Rat acc(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (x[i] != 0 && y[j] != 0) acc += Rat(x[i] * y[j]) * b_[i][j];
    return mod1(acc);
}

FqfElem FiniteQuadraticForm::reduce(FqfElem x) const {
    if (x.size() != orders_.size()) throw std::domain_error("finite form element: wrong length");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = fdiv_r(x[i], orders_[i]);
    return x;
}

FqfElem FiniteQuadraticForm::add(const FqfElem& x, const FqfElem& y) const {
    FqfElem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return reduce(std::move(r));
}

Int FiniteQuadraticForm::elem_order(const FqfElem& x) const {
    Int o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Int xi = fdiv_r(x[i], orders_[i]);
        if (xi == 0) continue;
        o = lcm(o, divexact(orders_[i], gcd(xi, orders_[i])));
    }
    return o;
}

std::vector<FqfElem> FiniteQuadraticForm::elements(const Int& bound) const {
    Int n = group_order();
    if (n > bound) throw std::domain_error("finite form has " + n.get_str() + " elements, over the bound");
    std::vector<FqfElem> out;
    FqfElem cur(orders_.size(), Int(0));
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < orders_.size()) {
            cur[i] += 1;
            if (cur[i] < orders_[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == orders_.size()) break;
    }
    return out;
}

FiniteQuadraticForm discriminant_form(const Lattice& l) {
    if (!l.is_even()) throw std::domain_error("discriminant form requires an even lattice");
    std::vector<VecQ> gens = discriminant_generators(l);
    const std::size_t k = gens.size();
    MatQ g(l.gram());
    auto pair = [&](const VecQ& x, const VecQ& y) {
        Rat acc(0);
        for (std::size_t i = 0; i < l.rank(); ++i)
            for (std::size_t j = 0; j < l.rank(); ++j)
                if (x[i] != 0 && y[j] != 0) acc += x[i] * g.at(i, j) * y[j];
        return acc;
    };
    // Orders recomputed the same way discriminant_generators derives them.
    SnfResult s = snf(l.gram());
    std::vector<Int> orders;
    for (std::size_t j = 0; j < l.rank(); ++j)
        if (s.d.at(j, j) > 1) orders.push_back(s.d.at(j, j));
    std::vector<Rat> q(k);
    std::vector<std::vector<Rat>> b(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i) q[i] = mod2(pair(gens[i], gens[i]));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) b[i][j] = mod1(pair(gens[i], gens[j]));
    return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
}

std::vector<VecQ> discriminant_generators(const Lattice& l) {
    // u G v = d; dual generators are columns of v scaled by 1/d_j. They give
    // A(L) = (+) Z/d_j directly in invariant-factor order.
    SnfResult s = snf(l.gram());
    std::vector<VecQ> gens;
    for (std::size_t j = 0; j < l.rank(); ++j) {
        if (s.d.at(j, j) <= 1) continue;
        VecQ g(l.rank());
        for (std::size_t i = 0; i < l.rank(); ++i) g[i] = Rat(s.v.at(i, j)) / Rat(s.d.at(j, j));
        gens.push_back(std::move(g));
    }
    return gens;
}

FiniteQuadraticForm fqf_direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    const std::size_t ka = a.length(), kb = b.length();
    std::vector<Int> orders;
    orders.reserve(ka + kb);
    for (std::size_t i = 0; i < ka; ++i) orders.push_back(a.orders()[i]);
    for (std::size_t i = 0; i < kb; ++i) orders.push_back(b.orders()[i]);
    std::vector<Rat> q(ka + kb);
    std::vector<std::vector<Rat>> bb(ka + kb, std::vector<Rat>(ka + kb, Rat(0)));
    for (std::size_t i = 0; i < ka; ++i) q[i] = a.q_gen(i);
    for (std::size_t i = 0; i < kb; ++i) q[ka + i] = b.q_gen(i);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j) bb[i][j] = a.b_gen(i, j);
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < kb; ++j) bb[ka + i][ka + j] = b.b_gen(i, j);
    return canonicalize(orders, q, bb);
}

FiniteQuadraticForm fqf_negate(const FiniteQuadraticForm& a) {
    const std::size_t k = a.length();
    std::vector<Rat> q(k);
    std::vector<std::vector<Rat>> b(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i) {
        q[i] = mod2(-a.q_gen(i));
        for (std::size_t j = 0; j < k; ++j) b[i][j] = mod1(-a.b_gen(i, j));
    }
    return FiniteQuadraticForm(a.orders(), std::move(q), std::move(b));
}

FiniteQuadraticForm p_primary(const FiniteQuadraticForm& a, const Int& p) {
    if (p < 2) throw std::domain_error("p_primary needs a prime p");
    const std::size_t k = a.length();
    std::vector<Int> orders(k);
    std::vector<Int> mult(k);
    for (std::size_t i = 0; i < k; ++i) {
        Int n = a.orders()[i];
        Int pp = 1;
        while (divides(p, n)) {
            n = divexact(n, p);
            pp *= p;
        }
        orders[i] = pp;       // p-part of the order (may be 1)
        mult[i] = n;          // prime-to-p cofactor; mult*g generates the p-part
    }
    std::vector<Rat> q(k);
    std::vector<std::vector<Rat>> b(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i) {
        q[i] = mod2(Rat(mult[i] * mult[i]) * a.q_gen(i));
        for (std::size_t j = 0; j < k; ++j) b[i][j] = mod1(Rat(mult[i] * mult[j]) * a.b_gen(i, j));
    }
    for (std::size_t i = 0; i < k; ++i)
        if (orders[i] == 1) {
            q[i] = 0;
            for (std::size_t j = 0; j < k; ++j) {
                b[i][j] = 0;
                b[j][i] = 0;
            }
        }
    return canonicalize(orders, q, b);
}

std::vector<FqfElem> isotropic_elements(const FiniteQuadraticForm& a, const Int& bound) {
    std::vector<FqfElem> out;
    for (const FqfElem& x : a.elements(bound))
        if (a.q_value(x) == 0) out.push_back(x);
    return out;
}

namespace {

Int subgroup_order(const FiniteQuadraticForm& g, const std::vector<FqfElem>& gens) {
    // |<gens>| = |G| / |coker([gens | diag(orders)])|
    const std::size_t k = g.length();
    if (k == 0) return 1;
    MatZ m(k, gens.size() + k);
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) m.at(i, j) = gens[j][i];
    for (std::size_t i = 0; i < k; ++i) m.at(i, gens.size() + i) = g.orders()[i];
    SnfResult s = snf(m);
    Int coker = 1;
    for (std::size_t i = 0; i < k; ++i) coker *= s.d.at(i, i);
    if (coker == 0) throw std::logic_error("subgroup_order: unexpected zero invariant factor");
    return divexact(g.group_order(), coker);
}

}  // namespace

namespace {

bool iso_search(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                const Int& node_bound, Int& nodes) {
    if (a.orders() != b.orders()) return false;
    if (a.length() == 0) return true;
    std::vector<FqfElem> belems = b.elements();
    // Histogram pruning: (order, q) profiles must agree.
    {
        std::map<std::pair<Int, Rat>, long> ha, hb;
        for (const FqfElem& x : a.elements()) ha[{a.elem_order(x), a.q_value(x)}]++;
        for (const FqfElem& x : belems) hb[{b.elem_order(x), b.q_value(x)}]++;
        if (ha != hb) return false;
    }
    const std::size_t k = a.length();
    // Candidates per generator: matching exact order and q value.
    std::vector<std::vector<const FqfElem*>> cand(k);
    for (std::size_t i = 0; i < k; ++i)
        for (const FqfElem& y : belems)
            if (b.elem_order(y) == a.orders()[i] && b.q_value(y) == a.q_gen(i)) cand[i].push_back(&y);
    std::vector<const FqfElem*> img(k, nullptr);
    // Place generators of large order first: they are the most constrained.
    // Invariant factors ascend, so walk them in reverse.
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = k - 1 - i;
    std::vector<std::vector<const FqfElem*>> pc(k);
    std::vector<Int> expect(k);
    for (std::size_t i = 0; i < k; ++i) {
        pc[i] = cand[perm[i]];
        expect[i] = a.orders()[perm[i]];
        if (i > 0) expect[i] *= expect[i - 1];
    }
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == k) return true;
        for (const FqfElem* y : pc[i]) {
            if (++nodes > node_bound)
                throw std::domain_error("isomorphism search exceeded the node bound");
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (b.b_value(*img[j], *y) != a.b_gen(perm[j], perm[i])) ok = false;
            if (!ok) continue;
            // The image subgroup must grow by the full order of the placed
            // generator, otherwise the map cannot be injective.
            std::vector<FqfElem> gens;
            for (std::size_t j = 0; j < i; ++j) gens.push_back(*img[j]);
            gens.push_back(*y);
            if (subgroup_order(b, gens) != expect[i]) continue;
            img[i] = y;
            if (place(i + 1)) return true;
            img[i] = nullptr;
        }
        return false;
    };
    return place(0);
}

}  // namespace

bool are_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, const Int& node_bound) {
    if (a.orders() != b.orders()) return false;
    if (a.length() == 0) return true;
    // Any isomorphism preserves primary parts, so compare prime by prime;
    // this keeps the search spaces small.
    Int nodes = 0;
    Int n = a.group_order();
    for (Int p = 2; p * p <= n; ++p) {
        if (!divides(p, n)) continue;
        while (divides(p, n)) n = divexact(n, p);
        if (!iso_search(p_primary(a, p), p_primary(b, p), node_bound, nodes)) return false;
    }
    if (n > 1 && !iso_search(p_primary(a, n), p_primary(b, n), node_bound, nodes)) return false;
    return true;
}

FiniteQuadraticForm quotient_form(const FiniteQuadraticForm& a, const std::vector<FqfElem>& h_gens) {
    const std::size_t k = a.length();
    for (std::size_t i = 0; i < h_gens.size(); ++i) {
        if (a.q_value(a.reduce(h_gens[i])) != 0)
            throw std::domain_error("quotient_form: subgroup is not isotropic (q != 0)");
        for (std::size_t j = 0; j < h_gens.size(); ++j)
            if (a.b_value(a.reduce(h_gens[i]), a.reduce(h_gens[j])) != 0)
                throw std::domain_error("quotient_form: subgroup is not isotropic (b != 0)");
    }
    if (k == 0) return a;
    const std::size_t s = h_gens.size();
    // H^perp as a sublattice X of Z^k: b(x, h_j) integral for all j.
    Int den = 1;
    std::vector<VecQ> beta(s, VecQ(k));
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < k; ++i) {
            Rat acc(0);
            for (std::size_t l = 0; l < k; ++l) acc += Rat(h_gens[j][l]) * a.b_gen(i, l);
            beta[j][i] = acc;
            den = lcm(den, acc.get_den());
        }
    MatZ sys(s, k + s);
    for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            Rat scaled = beta[j][i] * Rat(den);
            sys.at(j, i) = scaled.get_num();  // integral by construction
        }
        sys.at(j, k + j) = -den;
    }
    MatZ ker = kernel_saturated(sys);
    MatZ bx(k, k);
    if (ker.cols() != k) throw std::logic_error("quotient_form: perp lattice has wrong rank");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) bx.at(i, j) = ker.at(i, j);
    // Relations inside X: the generator orders and the h generators themselves.
    MatZ rel(k, k + s);
    for (std::size_t i = 0; i < k; ++i) rel.at(i, i) = a.orders()[i];
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < k; ++i) rel.at(i, k + j) = h_gens[j][i];
    // Express relations in the basis of X.
    MatZ relx(k, k + s);
    for (std::size_t j = 0; j < k + s; ++j) {
        auto sol = solve_rational(bx, rel.col(j));
        if (!sol) throw std::logic_error("quotient_form: relation outside H^perp");
        for (std::size_t i = 0; i < k; ++i) {
            if (!is_integral((*sol)[i])) throw std::logic_error("quotient_form: non-integral relation");
            relx.at(i, j) = (*sol)[i].get_num();
        }
    }
    SnfResult sf = snf(relx);
    MatZ uinv = inverse_unimodular(sf.u);
    std::vector<Int> orders;
    std::vector<VecZ> reps;
    for (std::size_t j = 0; j < k; ++j) {
        Int d = sf.d.at(j, j);
        if (d <= 1) continue;
        orders.push_back(d);
        reps.push_back(bx * uinv.col(j));  // coefficients over the generators of a
    }
    std::vector<Rat> q(orders.size());
    std::vector<std::vector<Rat>> bb(orders.size(), std::vector<Rat>(orders.size()));
    for (std::size_t i = 0; i < orders.size(); ++i) q[i] = a.q_value(a.reduce(reps[i]));
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = 0; j < orders.size(); ++j)
            bb[i][j] = a.b_value(a.reduce(reps[i]), a.reduce(reps[j]));
    return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(bb));
}

bool acts_trivially_on_discriminant(const Lattice& l, const MatZ& m) {
    if (!is_isometry(l, m)) throw std::domain_error("matrix is not an isometry of the lattice");
    MatQ mq(m);
    for (const VecQ& g : discriminant_generators(l)) {
        for (std::size_t i = 0; i < l.rank(); ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j < l.rank(); ++j) acc += mq.at(i, j) * g[j];
            if (!is_integral(acc - g[i])) return false;
        }
    }
    return true;
}

}  // namespace k3m
