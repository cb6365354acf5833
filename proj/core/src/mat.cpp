#include "k3m/mat.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3m {

MatZ::MatZ(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.assign(rows_ * cols_, Int(0));
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::domain_error("ragged matrix initializer");
        std::size_t j = 0;
        for (long x : r) at(i, j++) = Int(x);
        ++i;
    }
}

MatZ MatZ::identity(std::size_t n) {
    MatZ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatZ MatZ::transpose() const {
    MatZ t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

MatZ MatZ::operator*(const MatZ& o) const {
    if (cols_ != o.rows_) throw std::domain_error("matrix product shape mismatch");
    MatZ r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

VecZ MatZ::operator*(const VecZ& v) const {
    if (cols_ != v.size()) throw std::domain_error("matrix-vector shape mismatch");
    VecZ r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

MatZ MatZ::operator+(const MatZ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix sum shape mismatch");
    MatZ r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

MatZ MatZ::operator-() const {
    MatZ r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

MatZ MatZ::mul_scalar(const Int& k) const {
    MatZ r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = k * a_[i];
    return r;
}

VecZ MatZ::row(std::size_t i) const {
    VecZ r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

VecZ MatZ::col(std::size_t j) const {
    VecZ c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

void MatZ::set_col(std::size_t j, const VecZ& v) {
    if (v.size() != rows_) throw std::domain_error("set_col shape mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool MatZ::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

bool MatZ::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

namespace {

void swap_rows(MatZ& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(MatZ& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row a -= q * row b
void row_axpy(MatZ& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_axpy(MatZ& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(MatZ& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

HnfResult hnf(const MatZ& a) {
    const std::size_t m = a.rows(), n = a.cols();
    HnfResult res{a, MatZ::identity(m), 0};
    MatZ& h = res.h;
    MatZ& u = res.u;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        // Euclidean reduction of column j below row r until one entry is left.
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (h.at(i, j) == 0) continue;
                if (best == m || mpz_cmpabs(h.at(i, j).get_mpz_t(), h.at(best, j).get_mpz_t()) < 0) best = i;
            }
            if (best == m) break;  // column clean below r
            swap_rows(h, r, best);
            swap_rows(u, r, best);
            bool any = false;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h.at(i, j) == 0) continue;
                Int q = fdiv_q(h.at(i, j), h.at(r, j));
                row_axpy(h, i, r, q);
                row_axpy(u, i, r, q);
                if (h.at(i, j) != 0) any = true;
            }
            if (!any) break;
        }
        if (h.at(r, j) == 0) continue;
        if (h.at(r, j) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = fdiv_q(h.at(i, j), h.at(r, j));
            row_axpy(h, i, r, q);
            row_axpy(u, i, r, q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

SnfResult snf(const MatZ& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SnfResult res{a, MatZ::identity(m), MatZ::identity(n)};
    MatZ& d = res.d;
    MatZ& u = res.u;
    MatZ& v = res.v;
    const std::size_t k = std::min(m, n);
    for (std::size_t t = 0; t < k; ++t) {
        // Locate a nonzero entry in the trailing block.
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (d.at(i, j) == 0) continue;
                if (pi == m || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m) break;
        swap_rows(d, t, pi);
        swap_rows(u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);
        while (true) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = fdiv_q(d.at(i, t), d.at(t, t));
                row_axpy(d, i, t, q);
                row_axpy(u, i, t, q);
                if (d.at(i, t) != 0) {
                    swap_rows(d, t, i);
                    swap_rows(u, t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = fdiv_q(d.at(t, j), d.at(t, t));
                col_axpy(d, j, t, q);
                col_axpy(v, j, t, q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, t, j);
                    swap_cols(v, t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Divisibility sweep: d[t][t] must divide the whole trailing block.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (!divides(d.at(t, t), d.at(i, j))) {
                        row_axpy(d, t, i, Int(-1));
                        row_axpy(u, t, i, Int(-1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }
    return res;
}

MatZ kernel_saturated(const MatZ& a) {
    const std::size_t n = a.cols();
    HnfResult ht = hnf(a.transpose());
    // Rows of u past the rank annihilate a^T, i.e. their transposes lie in ker a.
    std::size_t k = n - ht.rank;
    MatZ basis_rows(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) basis_rows.at(i, j) = ht.u.at(ht.rank + i, j);
    // Canonical shape for determinism.
    HnfResult canon = hnf(basis_rows);
    MatZ out(n, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(j, i) = canon.h.at(i, j);
    return out;
}

Int det(const MatZ& a) {
    if (!a.is_square()) throw std::domain_error("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    MatZ b = a;
    int sign = 1;
    Int prev = 1;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (b.at(t, t) == 0) {
            std::size_t piv = n;
            for (std::size_t i = t + 1; i < n; ++i)
                if (b.at(i, t) != 0) {
                    piv = i;
                    break;
                }
            if (piv == n) return 0;
            swap_rows(b, t, piv);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i) {
            for (std::size_t j = t + 1; j < n; ++j)
                b.at(i, j) = divexact(b.at(i, j) * b.at(t, t) - b.at(i, t) * b.at(t, j), prev);
            b.at(i, t) = 0;
        }
        prev = b.at(t, t);
    }
    Int r = b.at(n - 1, n - 1);
    return sign < 0 ? Int(-r) : r;
}

std::optional<VecQ> solve_rational(const MatZ& a, const VecZ& b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::domain_error("solve_rational shape mismatch");
    MatQ w(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = Rat(a.at(i, j));
        w.at(i, n) = Rat(b[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i)
            if (w.at(i, j) != 0) {
                piv = i;
                break;
            }
        if (piv == m) continue;
        for (std::size_t jj = 0; jj <= n; ++jj) std::swap(w.at(r, jj), w.at(piv, jj));
        Rat p = w.at(r, j);
        for (std::size_t jj = 0; jj <= n; ++jj) w.at(r, jj) /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || w.at(i, j) == 0) continue;
            Rat f = w.at(i, j);
            for (std::size_t jj = 0; jj <= n; ++jj) w.at(i, jj) -= f * w.at(r, jj);
        }
        pivot_col.push_back(j);
        ++r;
    }
    if (r < n) throw std::domain_error("solve_rational: matrix has a nontrivial kernel");
    for (std::size_t i = r; i < m; ++i)
        if (w.at(i, n) != 0) return std::nullopt;
    VecQ x(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = w.at(i, n);
    return x;
}

std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::domain_error("solve_integer shape mismatch");
    // u * a^T = h  =>  a = h^T u^{-T}; solve h^T y = b by pivots, then x = u^T y.
    HnfResult ht = hnf(a.transpose());
    VecZ y(n, Int(0));
    VecZ acc(m, Int(0));
    for (std::size_t i = 0; i < ht.rank; ++i) {
        std::size_t p = 0;
        while (p < m && ht.h.at(i, p) == 0) ++p;
        Int need = b[p] - acc[p];
        if (!divides(ht.h.at(i, p), need)) return std::nullopt;
        Int q = divexact(need, ht.h.at(i, p));
        y[i] = q;
        if (q != 0)
            for (std::size_t jj = 0; jj < m; ++jj) acc[jj] += q * ht.h.at(i, jj);
    }
    for (std::size_t jj = 0; jj < m; ++jj)
        if (acc[jj] != b[jj]) return std::nullopt;
    VecZ x = ht.u.transpose() * y;
    return x;
}

MatZ unimodular_completion(const VecZ& c) {
    const std::size_t n = c.size();
    if (n == 0) throw std::domain_error("unimodular_completion of empty vector");
    if (!is_primitive(c)) throw std::domain_error("unimodular_completion: vector not primitive");
    // Accumulate u with u*c = e1, then return u^{-1} (first column c).
    MatZ u = MatZ::identity(n);
    VecZ w = c;
    for (std::size_t i = 1; i < n; ++i) {
        if (w[i] == 0) continue;
        Int s, t;
        Int g = xgcd(w[0], w[i], s, t);
        Int a0 = divexact(w[0], g), ai = divexact(w[i], g);
        // [[s, t], [-ai, a0]] acts on rows (0, i); det = 1.
        for (std::size_t j = 0; j < n; ++j) {
            Int r0 = s * u.at(0, j) + t * u.at(i, j);
            Int ri = -ai * u.at(0, j) + a0 * u.at(i, j);
            u.at(0, j) = r0;
            u.at(i, j) = ri;
        }
        w[0] = g;
        w[i] = 0;
    }
    if (w[0] == -1) negate_row(u, 0);
    return inverse_unimodular(u);
}

MatZ inverse_unimodular(const MatZ& u) {
    if (!u.is_square()) throw std::domain_error("inverse of non-square matrix");
    MatQ inv = inverse(MatQ(u));
    MatZ r(u.rows(), u.cols());
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j) {
            if (!is_integral(inv.at(i, j))) throw std::domain_error("matrix is not unimodular");
            r.at(i, j) = inv.at(i, j).get_num();
        }
    return r;
}

MatQ::MatQ(const MatZ& m) : rows_(m.rows()), cols_(m.cols()), a_(m.rows() * m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

MatQ MatQ::identity(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (cols_ != o.rows_) throw std::domain_error("matrix product shape mismatch");
    MatQ r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

MatQ MatQ::operator+(const MatQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix sum shape mismatch");
    MatQ r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

MatQ MatQ::mul_scalar(const Rat& k) const {
    MatQ r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * k;
    return r;
}

bool MatQ::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0) return false;
    return true;
}

MatQ MatQ::transpose() const {
    MatQ t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

MatQ inverse(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    MatQ w = m;
    MatQ inv = MatQ::identity(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t piv = n;
        for (std::size_t i = t; i < n; ++i)
            if (w.at(i, t) != 0) {
                piv = i;
                break;
            }
        if (piv == n) throw std::domain_error("singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(w.at(t, j), w.at(piv, j));
            std::swap(inv.at(t, j), inv.at(piv, j));
        }
        Rat p = w.at(t, t);
        for (std::size_t j = 0; j < n; ++j) {
            w.at(t, j) /= p;
            inv.at(t, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == t || w.at(i, t) == 0) continue;
            Rat f = w.at(i, t);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(t, j);
                inv.at(i, j) -= f * inv.at(t, j);
            }
        }
    }
    return inv;
}

VecZ vec_sub(const VecZ& x, const VecZ& y) {
    if (x.size() != y.size()) throw std::domain_error("vector size mismatch");
    VecZ r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

VecZ vec_add(const VecZ& x, const VecZ& y) {
    if (x.size() != y.size()) throw std::domain_error("vector size mismatch");
    VecZ r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

VecZ vec_scale(const Int& k, const VecZ& x) {
    VecZ r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = k * x[i];
    return r;
}

bool vec_is_zero(const VecZ& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

bool is_primitive(const VecZ& v) { return gcd_all(v) == 1; }

}  // namespace k3m
