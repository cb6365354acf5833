#include "k3m/lattice.hpp"

#include <functional>
#include <stdexcept>

namespace k3m {

Lattice::Lattice(MatZ gram, std::string label) : gram_(std::move(gram)), label_(std::move(label)) {
    if (!gram_.is_square()) throw std::domain_error("Gram matrix must be square");
    if (gram_.rows() == 0) throw std::domain_error("Gram matrix must have positive rank");
    if (!gram_.is_symmetric()) throw std::domain_error("Gram matrix must be symmetric");
    InertiaCounts in = inertia(gram_);
    if (in.zero > 0)
        throw std::domain_error("degenerate Gram matrix: radical has rank " + std::to_string(in.zero));
}

Int Lattice::inner(const VecZ& x, const VecZ& y) const {
    if (x.size() != rank() || y.size() != rank()) throw std::domain_error("vector length != lattice rank");
    VecZ gy = gram_ * y;
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
    return s;
}

bool Lattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (!divides(Int(2), gram_.at(i, i))) return false;
    return true;
}

Int Lattice::determinant() const { return det(gram_); }

Signature Lattice::signature() const {
    InertiaCounts in = inertia(gram_);
    return Signature{in.pos, in.neg};
}

Int Lattice::div(const VecZ& f) const {
    if (f.size() != rank()) throw std::domain_error("vector length != lattice rank");
    if (vec_is_zero(f)) throw std::domain_error("div of the zero vector");
    return gcd_all(gram_ * f);
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    std::size_t n = a.rank(), m = b.rank();
    MatZ g(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.at(i, j) = a.gram().at(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g.at(n + i, n + j) = b.gram().at(i, j);
    std::string label;
    if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
    return Lattice(std::move(g), std::move(label));
}

Lattice rescale(const Lattice& a, const Int& m) {
    if (m == 0) throw std::domain_error("rescale by zero");
    std::string label;
    if (!a.label().empty()) label = a.label() + "(" + m.get_str() + ")";
    return Lattice(a.gram().mul_scalar(m), std::move(label));
}

InertiaCounts inertia(const MatZ& gram) {
    const std::size_t n = gram.rows();
    MatQ g(gram);
    std::vector<bool> done(n, false);
    InertiaCounts out;
    auto add_sym = [&](std::size_t dst, std::size_t src, const Rat& f) {
        // e_dst <- e_dst + f * e_src, applied congruently.
        for (std::size_t k = 0; k < n; ++k) g.at(dst, k) += f * g.at(src, k);
        for (std::size_t k = 0; k < n; ++k) g.at(k, dst) += f * g.at(k, src);
    };
    for (std::size_t step = 0; step < n; ++step) {
        // Prefer a live index with nonzero diagonal.
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && g.at(i, i) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // All live diagonals vanish; couple two live indices if possible.
            std::size_t a = n, b = n;
            for (std::size_t i = 0; i < n && a == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && j != i && g.at(i, j) != 0) {
                        a = i;
                        b = j;
                        break;
                    }
            }
            if (a == n) {
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) ++out.zero;
                return out;
            }
            add_sym(a, b, Rat(1));
            p = a;  // diagonal now 2*g(a,b) != 0
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || i == p || g.at(i, p) == 0) continue;
            add_sym(i, p, -g.at(i, p) / g.at(p, p));
        }
        if (g.at(p, p) > 0)
            ++out.pos;
        else
            ++out.neg;
        done[p] = true;
    }
    return out;
}

namespace {

// Exact Fincke-Pohst style count of norm -2 vectors in a negative definite
// lattice: diagonalize -G as sum of d_i (x_i + sum_j c_ij x_j)^2 and walk the
// coordinate tree with rational bounds.
Int count_roots_definite(const MatZ& gram) {
    const std::size_t n = gram.rows();
    MatQ a(gram);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = -a.at(i, j);
    std::vector<Rat> d(n);
    MatQ c = MatQ::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = a.at(i, i);
        if (d[i] <= 0) throw std::domain_error("lattice is not negative definite");
        for (std::size_t j = i + 1; j < n; ++j) c.at(i, j) = a.at(i, j) / d[i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) a.at(j, k) -= d[i] * c.at(i, j) * c.at(i, k);
    }
    VecZ x(n, Int(0));
    Int total = 0;
    const Rat target(2);
    std::function<void(std::size_t, Rat)> walk = [&](std::size_t lvl, Rat remaining) {
        std::size_t i = lvl - 1;
        Rat s(0);
        for (std::size_t j = i + 1; j < n; ++j) s += c.at(i, j) * Rat(x[j]);
        // d_i (x_i + s)^2 <= remaining
        Rat m = remaining / d[i];
        Int lo, hi;
        {
            // integer window around -s of half width sqrt(m)
            Int num = m.get_num(), den = m.get_den();
            Int w;
            mpz_sqrt(w.get_mpz_t(), Int(num / den + 1).get_mpz_t());
            w += 1;
            Rat center = -s;
            Int cfloor = fdiv_q(center.get_num(), center.get_den());
            lo = cfloor - w;
            hi = cfloor + w + 1;
        }
        for (Int xi = lo; xi <= hi; ++xi) {
            Rat t = Rat(xi) + s;
            Rat term = d[i] * t * t;
            if (term > remaining) continue;
            x[i] = xi;
            if (i == 0) {
                if (term == remaining) total += 1;
            } else {
                walk(i, remaining - term);
            }
        }
        x[i] = 0;
    };
    if (n > 0) walk(n, target);
    return total;
}

}  // namespace

RootCount root_count(const Lattice& l, const Int& bound) {
    Signature sig = l.signature();
    if (sig.pos == 0) {
        return RootCount{count_roots_definite(l.gram()), true, Int(0)};
    }
    if (bound <= 0) throw std::domain_error("root_count bound must be positive");
    // Truncated box search for indefinite input.
    const std::size_t n = l.rank();
    VecZ v(n, Int(-bound));
    Int count = 0;
    while (true) {
        if (!vec_is_zero(v) && l.norm(v) == -2) ++count;
        std::size_t i = 0;
        while (i < n) {
            v[i] += 1;
            if (v[i] <= bound) break;
            v[i] = -bound;
            ++i;
        }
        if (i == n) break;
    }
    return RootCount{count, false, bound};
}

bool is_isometry(const Lattice& l, const MatZ& m) {
    if (m.rows() != l.rank() || m.cols() != l.rank()) return false;
    return m.transpose() * l.gram() * m == l.gram();
}

namespace lat {

Lattice U() { return Lattice(MatZ{{0, 1}, {1, 0}}, "U"); }

Lattice U_scaled(const Int& m) {
    if (m == 1) return U();
    MatZ g(2, 2);
    g.at(0, 1) = m;
    g.at(1, 0) = m;
    return Lattice(std::move(g), "U(" + m.get_str() + ")");
}

namespace {
Lattice from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                   std::string label) {
    MatZ g(n, n);
    for (std::size_t i = 0; i < n; ++i) g.at(i, i) = -2;
    for (auto [a, b] : edges) {
        g.at(a, b) = 1;
        g.at(b, a) = 1;
    }
    return Lattice(std::move(g), std::move(label));
}
}  // namespace

Lattice A(std::size_t n) {
    if (n == 0) throw std::domain_error("A_n needs n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return from_edges(n, e, "A" + std::to_string(n));
}

Lattice D(std::size_t n) {
    if (n < 4) throw std::domain_error("D_n needs n >= 4");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
    e.push_back({n - 3, n - 1});
    return from_edges(n, e, "D" + std::to_string(n));
}

Lattice T(std::size_t p, std::size_t q, std::size_t r) {
    if (p < 2 || q < 2 || r < 2) throw std::domain_error("T(p,q,r) needs all arms >= 2");
    std::size_t n = p + q + r - 2;
    std::vector<std::pair<std::size_t, std::size_t>> e;
    // vertex 0 is the branch point; arms hold p-1, q-1, r-1 extra vertices.
    std::size_t next = 1;
    for (std::size_t len : {p - 1, q - 1, r - 1}) {
        std::size_t prev = 0;
        for (std::size_t s = 0; s < len; ++s) {
            e.push_back({prev, next});
            prev = next;
            ++next;
        }
    }
    Lattice l = from_edges(n, e,
                           "T(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")");
    return l;
}

Lattice E(std::size_t n) {
    switch (n) {
        case 6: return T(2, 3, 3).with_label("E6");
        case 7: return T(2, 3, 4).with_label("E7");
        case 8: return T(2, 3, 5).with_label("E8");
        default: throw std::domain_error("E_n needs n in {6,7,8}");
    }
}

Lattice diag(const Int& k) {
    if (k == 0) throw std::domain_error("<0> is degenerate");
    MatZ g(1, 1);
    g.at(0, 0) = k;
    return Lattice(std::move(g), "<" + k.get_str() + ">");
}

Lattice k3() {
    Lattice l = direct_sum(direct_sum(direct_sum(U(), U()), direct_sum(U(), E(8))), E(8));
    return l.with_label("L_K3");
}

}  // namespace lat

}  // namespace k3m
