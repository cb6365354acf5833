#include "k3m/mirror.hpp"

#include "k3m/discform.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace k3m {

MirrorResult mirror_lattice(const Lattice& n, const VecZ& f) {
    if (f.size() != n.rank()) throw std::domain_error("vector length != lattice rank");
    if (n.rank() < 3) throw std::domain_error("quotient construction needs rank >= 3");
    if (vec_is_zero(f) || !is_primitive(f)) throw std::domain_error("f must be primitive");
    if (n.norm(f) != 0) throw std::domain_error("f must be isotropic");

    VecZ w = n.gram() * f;
    MatZ rows(1, n.rank());
    for (std::size_t j = 0; j < n.rank(); ++j) rows.at(0, j) = w[j];
    MatZ perp = kernel_saturated(rows);

    // f lies in its own saturated perp; express it there and rotate the
    // basis so that f is the first member.
    std::optional<VecZ> c = solve_integer(perp, f);
    if (!c) throw std::logic_error("f missing from its saturated perp");
    if (!is_primitive(*c)) throw std::logic_error("f not primitive inside its perp");
    MatZ rot = unimodular_completion(*c);
    MatZ basis = perp * rot;

    MatZ q = basis.transpose() * n.gram() * basis;
    const std::size_t k = q.rows();
    for (std::size_t j = 0; j < k; ++j)
        if (q.at(0, j) != 0 || q.at(j, 0) != 0)
            throw std::logic_error("f is not in the radical of the induced form");

    MatZ mg(k - 1, k - 1);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = 1; j < k; ++j) mg.at(i - 1, j - 1) = q.at(i, j);
    Lattice mcheck(std::move(mg));

    Int m = n.div(f);
    std::optional<MatZ> witness;
    AdmissibilityResult ar = is_m_admissible(n, f, m);
    if (ar.verdict == Admissibility::yes) {
        MatZ pair(n.rank(), 2);
        pair.set_col(0, f);
        pair.set_col(1, *ar.g);
        witness = std::move(pair);
    }
    return MirrorResult{std::move(mcheck), f, std::move(m), std::move(witness)};
}

MirrorResult mirror_of_polarization(const Lattice& m, const Embedding& e, const VecZ& f_ambient) {
    ComplementResult cr = orthogonal_complement(e);
    if (!cr.input_was_primitive) throw std::domain_error("embedding is not primitive");
    MatZ pulled = e.matrix.transpose() * e.ambient.gram() * e.matrix;
    if (!(pulled == m.gram()))
        throw std::domain_error("embedding does not realize the stated lattice");
    std::optional<VecZ> f = solve_integer(cr.embedding, f_ambient);
    if (!f) throw std::domain_error("f does not lie in the orthogonal complement");
    return mirror_lattice(cr.lattice, *f);
}

bool k3_dual(const Lattice& s, const Lattice& s2) {
    for (const Lattice* l : {&s, &s2}) {
        if (!l->is_even()) throw std::domain_error("duality requires even lattices");
        Signature sig = l->signature();
        if (sig.pos != 1) throw std::domain_error("duality requires hyperbolic signature (1, rank-1)");
    }
    if (s.rank() + s2.rank() != 20) return false;
    return are_isomorphic(discriminant_form(s), fqf_negate(discriminant_form(s2)));
}

bool rank_relation(const Lattice& m, const Lattice& mcheck) {
    return m.rank() + mcheck.rank() == 20;
}

IsometryMatrix zmf_isometry(const Int& m, const Lattice& mcheck, const MatZ& sigma_tilde,
                            const VecZ& v) {
    if (m < 1) throw std::domain_error("scale m must be positive");
    if (v.size() != mcheck.rank()) throw std::domain_error("vector length != lattice rank");
    if (!is_isometry(mcheck, sigma_tilde))
        throw std::domain_error("sigma_tilde is not an isometry");

    const std::size_t k = mcheck.rank();
    Int vv = mcheck.norm(v);
    if (!divides(2 * m, vv))
        throw std::domain_error("(v,v)/2m is not integral: (v,v) = " + vv.get_str());
    Int a = divexact(vv, 2 * m);

    VecZ gv = mcheck.gram() * v;
    MatZ out = MatZ::identity(k + 2);
    out.at(0, 1) = -a;
    for (std::size_t i = 0; i < k; ++i) out.at(2 + i, 1) = v[i];
    for (std::size_t j = 0; j < k; ++j) {
        Int pair = 0;
        for (std::size_t i = 0; i < k; ++i) pair += gv[i] * sigma_tilde.at(i, j);
        if (!divides(m, pair))
            throw std::domain_error("(v, sigma_tilde z)/m is not integral at basis index " +
                                    std::to_string(j) + ": pairing = " + pair.get_str());
        out.at(0, 2 + j) = -divexact(pair, m);
        out.at(1, 2 + j) = 0;
        for (std::size_t i = 0; i < k; ++i) out.at(2 + i, 2 + j) = sigma_tilde.at(i, j);
    }

    Lattice total = direct_sum(lat::U_scaled(m), mcheck);
    if (!is_isometry(total, out)) throw std::logic_error("assembled matrix breaks the form");
    return IsometryMatrix{std::move(out)};
}

namespace {

CRat pair_c(const MatZ& gram, const std::vector<CRat>& a, const std::vector<CRat>& b) {
    CRat s;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (gram.at(i, j) == 0) continue;
            s = s + CRat(Rat(gram.at(i, j))) * a[i] * b[j];
        }
    return s;
}

}  // namespace

TubeResult tube_alpha(const Lattice& n, const VecZ& f, const VecZ& g,
                      const std::vector<CRat>& z) {
    const std::size_t r = n.rank();
    if (f.size() != r || g.size() != r) throw std::domain_error("vector length != lattice rank");
    if (n.norm(f) != 0 || n.norm(g) != 0) throw std::domain_error("f and g must be isotropic");
    if (n.inner(f, g) != 1) throw std::domain_error("(f,g) = 1 required");
    if (z.size() != r - 2) throw std::domain_error("z must have length rank - 2");

    VecZ wf = n.gram() * f;
    VecZ wg = n.gram() * g;
    MatZ rows(2, r);
    for (std::size_t j = 0; j < r; ++j) {
        rows.at(0, j) = wf[j];
        rows.at(1, j) = wg[j];
    }
    MatZ comp = kernel_saturated(rows);
    if (comp.cols() != r - 2) throw std::logic_error("complement of a hyperbolic pair has wrong rank");

    std::vector<CRat> zv(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j + 2 < r; ++j) {
            if (comp.at(i, j) == 0) continue;
            zv[i] = zv[i] + CRat(Rat(comp.at(i, j))) * z[j];
        }

    CRat zz = pair_c(n.gram(), zv, zv);
    CRat half(Rat(-1, 2));
    std::vector<CRat> mu(r);
    for (std::size_t i = 0; i < r; ++i)
        mu[i] = half * zz * CRat(Rat(f[i])) + CRat(Rat(g[i])) + zv[i];

    if (!is_zero(pair_c(n.gram(), mu, mu))) throw std::logic_error("(mu,mu) = 0 identity failed");

    std::vector<CRat> mubar(r);
    for (std::size_t i = 0; i < r; ++i) mubar[i] = conj(mu[i]);
    CRat mm = pair_c(n.gram(), mu, mubar);
    if (mm.im != 0) throw std::logic_error("(mu, conj mu) must be real");

    VecQ y(r);
    for (std::size_t i = 0; i < r; ++i) y[i] = zv[i].im;
    Rat yy(0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (n.gram().at(i, j) == 0) continue;
            yy += Rat(n.gram().at(i, j)) * y[i] * y[j];
        }
    if (mm.re != 2 * yy) throw std::logic_error("(mu, conj mu) != 2(y,y)");

    return TubeResult{std::move(mu), mm.re, yy > 0};
}

namespace {

// Bivariate integer polynomials in t and n, keyed by exponent pairs.
using Poly2 = std::map<std::pair<int, int>, Int>;

void padd(Poly2& a, const Poly2& b) {
    for (const auto& [e, c] : b) {
        a[e] += c;
        if (a[e] == 0) a.erase(e);
    }
}

Poly2 pmul(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
            out[e] += ca * cb;
            if (out[e] == 0) out.erase(e);
        }
    return out;
}

Poly2 pneg(Poly2 a) {
    for (auto& [e, c] : a) c = -c;
    return a;
}

Poly2 mono(const Int& c, int te, int ne) {
    Poly2 p;
    if (c != 0) p[{te, ne}] = c;
    return p;
}

bool wedge_identity(const Poly2& nsym) {
    // u = -t e1 + e4, v = (n t) e2 - e3 over the ordered basis e1..e4.
    std::array<Poly2, 4> u{}, v{};
    u[0] = mono(Int(-1), 1, 0);
    u[3] = mono(Int(1), 0, 0);
    v[1] = pmul(nsym, mono(Int(1), 1, 0));
    v[2] = mono(Int(-1), 0, 0);

    auto wedge = [&](int i, int j) {
        Poly2 p = pmul(u[i], v[j]);
        padd(p, pneg(pmul(u[j], v[i])));
        return p;
    };
    // Basis order f1, g1, f2, g2, f3, g3 as index pairs of e_i ^ e_j.
    Poly2 f1 = wedge(0, 1), g1 = wedge(2, 3), f2 = wedge(0, 2), g2 = wedge(3, 1),
          f3 = wedge(0, 3), g3 = wedge(1, 2);

    Poly2 want_f1 = pneg(pmul(nsym, mono(Int(1), 2, 0)));
    Poly2 want_g1 = mono(Int(1), 0, 0);
    Poly2 want_f2 = mono(Int(1), 1, 0);
    Poly2 want_g2 = pmul(nsym, mono(Int(1), 1, 0));
    return f1 == want_f1 && g1 == want_g1 && f2 == want_f2 && g2 == want_g2 && f3.empty() &&
           g3.empty();
}

}  // namespace

bool kummer_wedge_identity(const Int& n) {
    if (n < 1) throw std::domain_error("n must be positive");
    return wedge_identity(mono(n, 0, 0));
}

bool kummer_wedge_identity_symbolic() { return wedge_identity(mono(Int(1), 0, 1)); }

}  // namespace k3m
