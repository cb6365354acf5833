#include "k3m/fricke.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <tuple>

namespace k3m {

namespace {

// Root of the square part: largest k with k^2 | n.
Int square_part_root(Int n) {
    Int k = 1;
    for (Int p = 2; p * p <= n; ++p) {
        if (!divides(p, n)) continue;
        int e = 0;
        while (divides(p, n)) {
            n = divexact(n, p);
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) k *= p;
    }
    return k;
}

std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    if (s * s == n) return s;
    return std::nullopt;
}

void check_same_n(const Int& x, const Int& y) {
    if (x != y) throw std::domain_error("mixed square parameters in surd arithmetic");
}

}  // namespace

SqrtInt::SqrtInt(Rat a_, Rat b_, Int n_) : a(std::move(a_)), b(std::move(b_)), n(std::move(n_)) {
    if (n < 1) throw std::domain_error("square parameter must be positive");
    if (auto s = exact_sqrt(n)) {
        a += b * Rat(*s);
        b = 0;
    }
}

SqrtInt operator+(const SqrtInt& x, const SqrtInt& y) {
    check_same_n(x.n, y.n);
    return {x.a + y.a, x.b + y.b, x.n};
}

SqrtInt operator-(const SqrtInt& x, const SqrtInt& y) {
    check_same_n(x.n, y.n);
    return {x.a - y.a, x.b - y.b, x.n};
}

SqrtInt operator*(const SqrtInt& x, const SqrtInt& y) {
    check_same_n(x.n, y.n);
    return {x.a * y.a + Rat(x.n) * x.b * y.b, x.a * y.b + x.b * y.a, x.n};
}

SqrtInt operator-(const SqrtInt& x) { return {-x.a, -x.b, x.n}; }

bool is_rational(const SqrtInt& x) { return x.b == 0; }

bool is_integer(const SqrtInt& x) { return x.b == 0 && x.a.get_den() == 1; }

SqrtMat::SqrtMat(MatQ ra_, MatQ rb_, Int n_)
    : ra(std::move(ra_)), rb(std::move(rb_)), n(std::move(n_)) {
    if (n < 1) throw std::domain_error("square parameter must be positive");
    if (ra.rows() != rb.rows() || ra.cols() != rb.cols())
        throw std::domain_error("surd matrix parts have mismatched shapes");
    if (auto s = exact_sqrt(n)) {
        ra = ra + rb.mul_scalar(Rat(*s));
        rb = MatQ(ra.rows(), ra.cols());
    }
}

SqrtMat operator*(const SqrtMat& x, const SqrtMat& y) {
    check_same_n(x.n, y.n);
    return {x.ra * y.ra + (x.rb * y.rb).mul_scalar(Rat(x.n)), x.ra * y.rb + x.rb * y.ra, x.n};
}

bool is_rational(const SqrtMat& m) { return m.rb.is_zero(); }

bool is_integral(const SqrtMat& m) {
    if (!m.rb.is_zero()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.ra.at(i, j).get_den() != 1) return false;
    return true;
}

SqrtInt det2(const SqrtMat& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::domain_error("det2 needs a 2x2 matrix");
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

bool BinaryForm::is_primitive() const { return gcd(a, gcd(b, c)) == 1; }

bool BinaryForm::is_reduced() const {
    Int ab = b < 0 ? Int(-b) : b;
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return true;
}

SqrtMat fricke_element(const Int& n) {
    MatQ ra(2, 2), rb(2, 2);
    rb.at(0, 1) = Rat(-1) / Rat(n);
    rb.at(1, 0) = 1;
    return {std::move(ra), std::move(rb), n};
}

SqrtMat rotation_g0(const Int& n) {
    MatQ ra(2, 2), rb(2, 2);
    ra.at(0, 1) = -1;
    ra.at(1, 0) = 1;
    return {std::move(ra), std::move(rb), n};
}

MatZ halfplane_gram(const Int& n) {
    if (n < 1) throw std::domain_error("level must be positive");
    MatZ g(3, 3);
    g.at(0, 2) = -1;
    g.at(2, 0) = -1;
    g.at(1, 1) = 2 * n;
    return g;
}

Int isotropic_orbit_count(const Int& n) {
    if (n < 1) throw std::domain_error("level must be positive");
    Int k = square_part_root(n);
    return fdiv_q(k + 2, Int(2));
}

namespace {

SqrtMat from_entries(const std::array<SqrtInt, 9>& e, const Int& n) {
    MatQ ra(3, 3), rb(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            ra.at(i, j) = e[3 * i + j].a;
            rb.at(i, j) = e[3 * i + j].b;
        }
    return {std::move(ra), std::move(rb), n};
}

void check_unimodular_2x2(const SqrtMat& g) {
    if (g.rows() != 2 || g.cols() != 2) throw std::domain_error("expected a 2x2 matrix");
    if (!(det2(g) == SqrtInt(Rat(1), Rat(0), g.n)))
        throw std::domain_error("matrix determinant must be 1");
}

}  // namespace

SqrtMat embed_A(const SqrtMat& g) {
    check_unimodular_2x2(g);
    const Int& n = g.n;
    SqrtInt a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 0), d = g.at(1, 1);
    SqrtInt root(Rat(0), Rat(1), n);                // sqrt(n)
    SqrtInt inv_root(Rat(0), Rat(1) / Rat(n), n);   // 1/sqrt(n)
    SqrtInt two(Rat(2), Rat(0), n);
    return from_entries({a * a, -(two * a * b * root), b * b,
                         -(a * c * inv_root), a * d + b * c, -(b * d * inv_root),
                         c * c, -(two * c * d * root), d * d},
                        n);
}

SqrtMat embed_Aprime(const SqrtMat& g) {
    check_unimodular_2x2(g);
    const Int& n = g.n;
    SqrtInt al = g.at(0, 0), be = g.at(0, 1), ga = g.at(1, 0), de = g.at(1, 1);
    SqrtInt en(Rat(n), Rat(0), n);
    SqrtInt inv_n(Rat(1) / Rat(n), Rat(0), n);
    SqrtInt two(Rat(2), Rat(0), n);
    return from_entries({al * al, -(two * en * al * be), en * be * be,
                         -(al * ga * inv_n), al * de + ga * be, -(be * de),
                         ga * ga * inv_n, -(two * ga * de), de * de},
                        n);
}

Int class_number(const Int& d) {
    if (d >= 0) throw std::domain_error("discriminant must be negative");
    Int r = fdiv_r(d, Int(4));
    if (r != 0 && r != 1) throw std::domain_error("discriminant must be 0 or 1 mod 4");
    Int count = 0;
    Int ad = -d;
    for (Int a = 1; 3 * a * a <= ad; ++a)
        for (Int b = -a; b <= a; ++b) {
            if (fdiv_r(b - d, Int(2)) != 0) continue;
            Int num = b * b - d;
            if (!divides(4 * a, num)) continue;
            Int c = divexact(num, 4 * a);
            if (c < a) continue;
            if ((b == -a || (a == c && b < 0))) continue;
            if (gcd(a, gcd(b, c)) != 1) continue;
            ++count;
        }
    return count;
}

namespace {

std::tuple<Int, Int, Int> reduce_form(Int a, Int b, Int c) {
    while (true) {
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        Int ab = b < 0 ? Int(-b) : b;
        if (ab > a) {
            // Shift b into (-a, a] keeping the discriminant.
            Int k = fdiv_q(b + a, 2 * a);
            Int nb = b - 2 * a * k;
            c = c - k * b + k * k * a;
            b = nb;
            continue;
        }
        break;
    }
    if (b < 0 && (-b == a || a == c)) b = -b;
    return {a, b, c};
}

}  // namespace

Int class_number_reduction_oracle(const Int& d) {
    if (d >= 0) throw std::domain_error("discriminant must be negative");
    Int r = fdiv_r(d, Int(4));
    if (r != 0 && r != 1) throw std::domain_error("discriminant must be 0 or 1 mod 4");
    Int ad = -d;
    std::set<std::tuple<Int, Int, Int>> classes;
    for (Int a = 1; a <= ad; ++a)
        for (Int b = -ad; b <= ad; ++b) {
            Int num = b * b - d;
            if (!divides(4 * a, num)) continue;
            Int c = divexact(num, 4 * a);
            if (c < 1) continue;
            if (gcd(a, gcd(b, c)) != 1) continue;
            classes.insert(reduce_form(a, b, c));
        }
    return Int(classes.size());
}

Int excluded_count(const Int& n) {
    if (n < 1) throw std::domain_error("level must be positive");
    if (n <= 4) return 1;
    Int r = fdiv_r(n, Int(8));
    Int h = class_number(-4 * n);
    if (r == 7) return 2 * h;
    if (r == 3) {
        if (!divides(Int(3), h))
            throw std::logic_error("excluded count 4h/3 is not an integer at level " + n.get_str());
        return divexact(4 * h, Int(3));
    }
    return h;
}

Int euler_phi(const Int& n) {
    if (n < 1) throw std::domain_error("totient of a non-positive integer");
    Int m = n, out = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (!divides(p, m)) continue;
        while (divides(p, m)) m = divexact(m, p);
        out = divexact(out, p) * (p - 1);
    }
    if (m > 1) out = divexact(out, m) * (m - 1);
    return out;
}

Int cusp_count(const Int& n) {
    if (n < 1) throw std::domain_error("level must be positive");
    if (n == 1) return 1;  // the involution is trivial, a single cusp
    if (n == 4) return 2;
    Int sum = 0;
    for (Int d = 1; d * d <= n; ++d) {
        if (!divides(d, n)) continue;
        Int e = divexact(n, d);
        sum += euler_phi(gcd(d, e));
        if (e != d) sum += euler_phi(gcd(e, d));
    }
    if (!divides(Int(2), sum))
        throw std::logic_error("cusp pairing sum is odd at level " + n.get_str());
    return divexact(sum, Int(2));
}

namespace {

// Element x0 + x1*sqrt(n) + i*(x2 + x3*sqrt(n)).
struct Qni {
    Rat x0, x1, x2, x3;
};

Qni mul(const Qni& x, const Qni& y, const Rat& n) {
    return {x.x0 * y.x0 + n * x.x1 * y.x1 - x.x2 * y.x2 - n * x.x3 * y.x3,
            x.x0 * y.x1 + x.x1 * y.x0 - x.x2 * y.x3 - x.x3 * y.x2,
            x.x0 * y.x2 + n * x.x1 * y.x3 + x.x2 * y.x0 + n * x.x3 * y.x1,
            x.x0 * y.x3 + x.x1 * y.x2 + x.x2 * y.x1 + x.x3 * y.x0};
}

Qni add(const Qni& x, const Qni& y) {
    return {x.x0 + y.x0, x.x1 + y.x1, x.x2 + y.x2, x.x3 + y.x3};
}

}  // namespace

WallPoint wall_fixed_point(const Int& n, const Int& a, const Int& b, const Int& c) {
    if (n < 1) throw std::domain_error("level must be positive");
    if (2 * a * b + 2 * n * c * c != -2)
        throw std::domain_error("(v,v) = 2ab + 2nc^2 must equal -2");
    if (b == 0) throw std::domain_error("wall vector needs b != 0");

    Rat rn(n);
    Qni t{Rat(c) / Rat(b), Rat(0), Rat(0), Rat(1) / (Rat(b) * rn)};
    Qni t2 = mul(t, t, rn);
    // Pairing of -n t^2 f + g + t e against a f + b g + c e: -nb t^2 + 2nc t + a.
    Qni val = add(add(mul(Qni{Rat(-n) * Rat(b), 0, 0, 0}, t2, rn),
                      mul(Qni{Rat(2 * n * c), 0, 0, 0}, t, rn)),
                  Qni{Rat(a), 0, 0, 0});
    if (val.x0 != 0 || val.x1 != 0 || val.x2 != 0 || val.x3 != 0)
        throw std::logic_error("wall pairing did not vanish at the fixed point");
    return WallPoint{t.x0, t.x1, t.x2, t.x3};
}

}  // namespace k3m
