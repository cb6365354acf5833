#include "k3m/embed.hpp"

#include <stdexcept>

namespace k3m {

bool is_primitive_embedding(const Embedding& e) {
    const MatZ& m = e.matrix;
    if (m.rows() != e.ambient.rank()) throw std::domain_error("embedding matrix has wrong height");
    if (m.cols() == 0 || m.cols() > m.rows()) throw std::domain_error("embedding matrix has bad width");
    SnfResult s = snf(m);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (s.d.at(j, j) == 0) throw std::domain_error("embedding matrix has dependent columns");
        if (s.d.at(j, j) != 1) return false;
    }
    return true;
}

ComplementResult orthogonal_complement(const Embedding& e) {
    bool prim = is_primitive_embedding(e);
    // Pairing rows of the embedded basis against ambient coordinates; the
    // kernel is automatically the complement of the *saturation*.
    MatZ rows = e.matrix.transpose() * e.ambient.gram();
    MatZ k = kernel_saturated(rows);
    if (k.cols() == 0) throw std::domain_error("orthogonal complement is trivial");
    MatZ gram = k.transpose() * e.ambient.gram() * k;
    return ComplementResult{Lattice(std::move(gram)), std::move(k), prim};
}

namespace {

std::size_t hyperbolic_t(const Lattice& m) {
    Signature sig = m.signature();
    if (sig.pos != 1) throw std::domain_error("lattice is not hyperbolic (signature (1,t) required)");
    if (sig.neg > 19) throw std::domain_error("hyperbolic lattice exceeds t = 19");
    return sig.neg;
}

}  // namespace

Criterion nikulin_exists(const Lattice& m) {
    if (!m.is_even()) throw std::domain_error("embedding criteria require an even lattice");
    std::size_t t = hyperbolic_t(m);
    if (t <= 10) return Criterion::guaranteed;
    std::size_t l = discriminant_form(m).length();
    return (l + t <= 20) ? Criterion::guaranteed : Criterion::not_implied;
}

Criterion nikulin_unique(const Lattice& m) {
    if (!m.is_even()) throw std::domain_error("embedding criteria require an even lattice");
    std::size_t t = hyperbolic_t(m);
    FiniteQuadraticForm a = discriminant_form(m);
    Int detm = m.determinant();
    // Odd primary parts: l(A_p) <= 19 - t.
    Int d = detm < 0 ? Int(-detm) : detm;
    for (Int p = 3; p * p <= d; p += 2) {
        if (!divides(p, d)) continue;
        while (divides(p, d)) d = divexact(d, p);
        if (p_primary(a, p).length() + t > 19) return Criterion::not_implied;
    }
    if (d > 2 && d % 2 == 1) {
        if (p_primary(a, d).length() + t > 19) return Criterion::not_implied;
    }
    std::size_t l2 = p_primary(a, Int(2)).length();
    if (l2 + t < 21) return Criterion::guaranteed;
    // Boundary case: the 2-part must split off the U(2) discriminant form.
    FiniteQuadraticForm a2 = p_primary(a, Int(2));
    std::vector<FqfElem> elems = a2.elements();
    for (const FqfElem& x : elems) {
        if (a2.elem_order(x) != 2 || a2.q_value(x) != 0) continue;
        for (const FqfElem& y : elems) {
            if (a2.elem_order(y) != 2 || a2.q_value(y) != 0) continue;
            if (a2.b_value(x, y) != Rat(1, 2)) continue;
            return Criterion::guaranteed;
        }
    }
    return Criterion::not_implied;
}

UmSummandResult u_m_summand_criterion(const Lattice& s, const Int& m) {
    if (!s.is_even()) throw std::domain_error("embedding criteria require an even lattice");
    if (m < 1) throw std::domain_error("U(m) summand criterion needs m >= 1");
    FiniteQuadraticForm a = discriminant_form(s);
    if (a.length() + 3 > s.rank()) return UmSummandResult{Criterion::not_implied, std::nullopt};
    if (m == 1) {
        // A(U) is trivial; the length condition already decides.
        return UmSummandResult{Criterion::guaranteed, std::nullopt};
    }
    std::vector<FqfElem> elems = a.elements();
    for (const FqfElem& x : elems) {
        if (a.elem_order(x) != m || a.q_value(x) != 0 || a.b_value(x, x) != 0) continue;
        for (const FqfElem& y : elems) {
            if (a.elem_order(y) != m || a.q_value(y) != 0 || a.b_value(y, y) != 0) continue;
            if (a.b_value(x, y) != mod1(Rat(1) / Rat(m))) continue;
            // The pair must generate (Z/m)^2; the restricted pairing is then
            // nondegenerate and the subgroup splits off orthogonally.
            MatZ gen(a.length(), 2 + a.length());
            for (std::size_t i = 0; i < a.length(); ++i) {
                gen.at(i, 0) = x[i];
                gen.at(i, 1) = y[i];
                gen.at(i, 2 + i) = a.orders()[i];
            }
            SnfResult sf = snf(gen);
            Int coker = 1;
            for (std::size_t i = 0; i < a.length(); ++i) coker *= sf.d.at(i, i);
            Int sub = divexact(a.group_order(), coker);
            if (sub == m * m) return UmSummandResult{Criterion::guaranteed, std::make_pair(x, y)};
        }
    }
    return UmSummandResult{Criterion::not_implied, std::nullopt};
}

std::vector<VecZ> find_isotropic_primitive(const Lattice& l, const Int& bound) {
    if (bound < 1) throw std::domain_error("enumeration bound must be positive");
    const std::size_t n = l.rank();
    // Guard the box size; this enumeration is only meant for small rank.
    Rat cells(1);
    for (std::size_t i = 0; i < n; ++i) cells *= Rat(2 * bound + 1);
    if (cells > Rat(20000000)) throw std::domain_error("isotropic enumeration box too large");
    std::vector<VecZ> out;
    VecZ v(n, Int(-bound));
    while (true) {
        if (!vec_is_zero(v) && is_primitive(v) && l.norm(v) == 0) out.push_back(v);
        std::size_t i = 0;
        while (i < n) {
            v[i] += 1;
            if (v[i] <= bound) break;
            v[i] = -bound;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

namespace {

// Try to close a candidate into an exact partner: fix the norm with a
// multiple of f (possible when 2m divides the norm), then check div and
// primitivity.
std::optional<VecZ> close_partner(const Lattice& l, const VecZ& f, const Int& m, const VecZ& cand) {
    Int nn = l.norm(cand);
    if (!divides(2 * m, nn)) return std::nullopt;
    Int lambda = divexact(nn, 2 * m);
    VecZ g = vec_sub(cand, vec_scale(lambda, f));
    if (vec_is_zero(g)) return std::nullopt;
    if (l.norm(g) != 0) return std::nullopt;
    if (!is_primitive(g)) return std::nullopt;
    if (l.div(g) != m) return std::nullopt;
    return g;
}

}  // namespace

AdmissibilityResult is_m_admissible(const Lattice& l, const VecZ& f, const Int& m, const Int& bound) {
    if (f.size() != l.rank()) throw std::domain_error("vector length != lattice rank");
    if (vec_is_zero(f) || !is_primitive(f)) throw std::domain_error("f must be primitive");
    if (l.norm(f) != 0) throw std::domain_error("f must be isotropic");
    if (m < 1) throw std::domain_error("m must be positive");
    if (l.div(f) != m) return AdmissibilityResult{Admissibility::no, std::nullopt, std::nullopt, std::nullopt};

    const std::size_t n = l.rank();
    VecZ w = l.gram() * f;
    // g0 with (f, g0) = m by extended gcd down the pairing vector.
    VecZ g0(n, Int(0));
    {
        Int run = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] == 0) continue;
            if (run == 0) {
                g0[i] = 1;
                run = w[i];
                continue;
            }
            Int s, t;
            Int g = xgcd(run, w[i], s, t);
            for (std::size_t j = 0; j < i; ++j) g0[j] *= s;
            g0[i] = t;
            run = g;
        }
        if (run < 0) {
            for (auto& c : g0) c = -c;
            run = -run;
        }
        if (run != m) throw std::logic_error("extended gcd disagrees with div");
    }

    auto finish = [&](const VecZ& g) {
        MatZ rows(2, n);
        VecZ wg = l.gram() * g;
        for (std::size_t j = 0; j < n; ++j) {
            rows.at(0, j) = w[j];
            rows.at(1, j) = wg[j];
        }
        MatZ comp = kernel_saturated(rows);
        MatZ basis(n, n);
        basis.set_col(0, f);
        basis.set_col(1, g);
        for (std::size_t j = 0; j < comp.cols(); ++j) basis.set_col(2 + j, comp.col(j));
        Int d = det(basis);
        if (d != 1 && d != -1) throw std::logic_error("U(m) splitting basis is not unimodular");
        MatZ gram = basis.transpose() * l.gram() * basis;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 2; j < n; ++j)
                if (gram.at(i, j) != 0 || gram.at(j, i) != 0)
                    throw std::logic_error("U(m) splitting is not orthogonal");
        MatZ cgram(n - 2, n - 2);
        for (std::size_t i = 2; i < n; ++i)
            for (std::size_t j = 2; j < n; ++j) cgram.at(i - 2, j - 2) = gram.at(i, j);
        return AdmissibilityResult{Admissibility::yes, g, basis,
                                   n > 2 ? std::optional<Lattice>(Lattice(std::move(cgram)))
                                         : std::nullopt};
    };

    if (auto g = close_partner(l, f, m, g0)) return finish(*g);

    // Adjust g0 by bounded moves inside f^perp before re-closing.
    MatZ perp_rows(1, n);
    for (std::size_t j = 0; j < n; ++j) perp_rows.at(0, j) = w[j];
    MatZ perp = kernel_saturated(perp_rows);
    const std::size_t k = perp.cols();
    long b = to_long(bound);

    // Full box over the complement coordinates when small enough.
    double cells = 1;
    for (std::size_t i = 0; i < k; ++i) {
        cells *= double(2 * b + 1);
        if (cells > 2e6) break;
    }
    if (cells <= 2e6) {
        std::vector<long> c(k, -b);
        while (true) {
            VecZ cand = g0;
            for (std::size_t i = 0; i < k; ++i)
                if (c[i] != 0) cand = vec_add(cand, vec_scale(Int(c[i]), perp.col(i)));
            if (auto g = close_partner(l, f, m, cand)) return finish(*g);
            std::size_t i = 0;
            while (i < k) {
                if (++c[i] <= b) break;
                c[i] = -b;
                ++i;
            }
            if (i == k) break;
        }
    } else {
        // Single and double column moves only.
        for (std::size_t i = 0; i < k; ++i)
            for (long ci = -b; ci <= b; ++ci) {
                if (ci == 0) continue;
                VecZ cand = vec_add(g0, vec_scale(Int(ci), perp.col(i)));
                if (auto g = close_partner(l, f, m, cand)) return finish(*g);
            }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                for (long ci = -b; ci <= b; ++ci) {
                    if (ci == 0) continue;
                    for (long cj = -b; cj <= b; ++cj) {
                        if (cj == 0) continue;
                        VecZ cand = vec_add(g0, vec_add(vec_scale(Int(ci), perp.col(i)),
                                                        vec_scale(Int(cj), perp.col(j))));
                        if (auto g = close_partner(l, f, m, cand)) return finish(*g);
                    }
                }
    }
    return AdmissibilityResult{Admissibility::unknown, std::nullopt, std::nullopt, std::nullopt};
}

GenusComparison genus_equal(const Lattice& a, const Lattice& b) {
    if (!a.is_even() || !b.is_even()) throw std::domain_error("genus comparison requires even lattices");
    if (a.rank() != b.rank() || a.signature() != b.signature()) return GenusComparison{false, false};
    FiniteQuadraticForm fa = discriminant_form(a);
    FiniteQuadraticForm fb = discriminant_form(b);
    if (!are_isomorphic(fa, fb)) return GenusComparison{false, false};
    Signature sig = a.signature();
    bool indefinite = sig.pos >= 1 && sig.neg >= 1;
    bool promoted = indefinite && fa.length() + 2 <= a.rank();
    return GenusComparison{true, promoted};
}

}  // namespace k3m
