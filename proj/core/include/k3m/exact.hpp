#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3m {

using Int = mpz_class;
using Rat = mpq_class;

// Extended gcd: returns g = gcd(a, b) >= 0 and s, t with s*a + t*b = g.
inline Int xgcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int m;
    mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return m;
}

inline Int gcd_all(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

// Floor division quotient (GMP's fdiv), so remainders land in [0, d) for d > 0.
inline Int fdiv_q(const Int& n, const Int& d) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Int fdiv_r(const Int& n, const Int& d) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int divexact(const Int& n, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Reduce into the half-open window [0, m) for a positive rational modulus m.
inline Rat rat_mod(const Rat& x, const Rat& m) {
    Rat q = x / m;
    Int fl = fdiv_q(q.get_num(), q.get_den());
    Rat r = x - Rat(fl) * m;
    r.canonicalize();
    return r;
}

inline Rat mod1(const Rat& x) { return rat_mod(x, Rat(1)); }
inline Rat mod2(const Rat& x) { return rat_mod(x, Rat(2)); }

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

// "p" or "p/q" in lowest terms.
inline std::string rat_str(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::domain_error("malformed rational: " + s);
    r.canonicalize();
    return r;
}

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw std::domain_error("integer too large for machine word: " + x.get_str());
    return x.get_si();
}

}  // namespace k3m
