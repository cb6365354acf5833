#pragma once

#include "k3m/mat.hpp"

#include <vector>

namespace k3m {

// Scalar a + b*sqrt(n). a and b are rationals whose denominators divide n in
// every value this module produces, so the ring is (1/n)Z[sqrt(n)]. When n is
// a perfect square the surd part is folded into the rational part, making
// equality structural in all cases.
struct SqrtInt {
    Rat a, b;
    Int n;
    SqrtInt(Rat a_, Rat b_, Int n_);
    bool operator==(const SqrtInt&) const = default;
};

SqrtInt operator+(const SqrtInt& x, const SqrtInt& y);
SqrtInt operator-(const SqrtInt& x, const SqrtInt& y);
SqrtInt operator*(const SqrtInt& x, const SqrtInt& y);
SqrtInt operator-(const SqrtInt& x);
bool is_rational(const SqrtInt& x);
bool is_integer(const SqrtInt& x);

// Matrix over (1/n)Z[sqrt(n)], stored as the pair of rational matrices
// ra + rb*sqrt(n). Same perfect-square normalization as SqrtInt.
struct SqrtMat {
    MatQ ra, rb;
    Int n;
    SqrtMat(MatQ ra_, MatQ rb_, Int n_);
    SqrtInt at(std::size_t i, std::size_t j) const { return {ra.at(i, j), rb.at(i, j), n}; }
    std::size_t rows() const { return ra.rows(); }
    std::size_t cols() const { return ra.cols(); }
    bool operator==(const SqrtMat&) const = default;
};

SqrtMat operator*(const SqrtMat& x, const SqrtMat& y);
bool is_rational(const SqrtMat& m);
bool is_integral(const SqrtMat& m);
SqrtInt det2(const SqrtMat& m);

// Integral binary quadratic form a x^2 + b xy + c y^2.
struct BinaryForm {
    Int a, b, c;
    Int discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const;
    bool is_reduced() const;
    bool operator==(const BinaryForm&) const = default;
};

// The standard generators of the half-plane picture at level n: the Fricke
// element [[0, -1/sqrt(n)], [sqrt(n), 0]] and the rational rotation
// [[0, -1], [1, 0]].
SqrtMat fricke_element(const Int& n);
SqrtMat rotation_g0(const Int& n);

// Gram of U + <2n> in the hyperbolic basis used by both 3x3 actions below:
// (f, e, g') with (f, g') = -1 and (e, e) = 2n.
MatZ halfplane_gram(const Int& n);

// Number of orbits of primitive isotropic vectors in U + <2n>: write
// n = n0 * k^2 with n0 squarefree and return floor((k+2)/2).
Int isotropic_orbit_count(const Int& n);

// Action of a determinant-1 matrix over (1/n)Z[sqrt(n)] on the rank-3
// hyperbolic lattice, in the basis tied to binary quadratic forms. Exactly
// multiplicative; integral precisely on the surd-entry matrix shapes.
SqrtMat embed_A(const SqrtMat& g);

// The conjugated action in the tube-domain basis (f, e, -g): integral on the
// level-n congruence group and its Fricke coset.
SqrtMat embed_Aprime(const SqrtMat& g);

// Class number of primitive binary quadratic forms of negative discriminant
// d (d = 0 or 1 mod 4), counted by reduced-form enumeration.
Int class_number(const Int& d);

// Independent slow oracle: reduce every primitive definite form with small
// leading coefficients to its canonical representative and count orbits.
Int class_number_reduction_oracle(const Int& d);

// Number of half-plane orbits excluded from the ample cone picture at
// level n, expressed through class numbers.
Int excluded_count(const Int& n);

// Number of cusps of the level-n Fricke modular curve.
Int cusp_count(const Int& n);

// Euler totient, used by cusp_count and exposed for tests.
Int euler_phi(const Int& n);

// Fixed point t = c/b + i/(b sqrt(n)) of the wall defined by v = af+bg+ce
// with (v,v) = 2ab + 2nc^2 = -2. Components of t as (re, im) in Q + Q*sqrt(n):
// t = (re_rat + re_srt*sqrt(n)) + i*(im_rat + im_srt*sqrt(n)). The vanishing
// of the wall pairing at t is verified exactly.
struct WallPoint {
    Rat re_rat, re_srt, im_rat, im_srt;
};
WallPoint wall_fixed_point(const Int& n, const Int& a, const Int& b, const Int& c);

}  // namespace k3m
