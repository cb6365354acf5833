#pragma once

#include "k3m/embed.hpp"
#include "k3m/lattice.hpp"

#include <optional>
#include <vector>

namespace k3m {

// Result of collapsing a lattice along a primitive isotropic vector f:
// the quotient f^perp / Zf with an inherited even form. The divisor m of f
// is recorded; when a hyperbolic pair (f, g) spanning U(m) is found, the
// pair is attached as a two-column witness matrix.
struct MirrorResult {
    Lattice check_lattice;
    VecZ f_used;
    Int m;
    std::optional<MatZ> splitting_witness;
};

// Integer matrix acting on the basis of a stated lattice, with the isometry
// contract matrix^T * gram * matrix = gram.
struct IsometryMatrix {
    MatZ matrix;
};

// Exact complex rational a + b*i.
struct CRat {
    Rat re, im;
    CRat() : re(0), im(0) {}
    CRat(Rat r) : re(std::move(r)), im(0) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    bool operator==(const CRat&) const = default;
};

inline CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
inline CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
inline CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CRat conj(const CRat& a) { return {a.re, -a.im}; }
inline bool is_zero(const CRat& a) { return a.re == 0 && a.im == 0; }

// Image of a point of the tube domain on the period quadric: the line
// through mu = -(z,z)/2 * f + g + z, given in ambient coordinates.
struct TubeResult {
    std::vector<CRat> mu;
    Rat mu_pair_conj;
    bool in_domain;
};

// Quotient f^perp / Zf for a primitive isotropic f in n; rank drops by two
// and the signature loses (1,1).
MirrorResult mirror_lattice(const Lattice& n, const VecZ& f);

// Same construction applied to the orthogonal complement of a primitively
// embedded polarizing lattice. f is given in ambient coordinates and must
// lie in the complement. The witness, when present, is in complement
// coordinates, as is f_used.
MirrorResult mirror_of_polarization(const Lattice& m, const Embedding& e, const VecZ& f_ambient);

// Two even hyperbolic lattices are dual partners when their ranks sum to 20
// and their discriminant forms are opposite.
bool k3_dual(const Lattice& s, const Lattice& s2);

// The dimension count behind duality: rank(m) + rank(mcheck) = 20.
bool rank_relation(const Lattice& m, const Lattice& mcheck);

// Extension of an isometry sigma_tilde of mcheck, twisted by a translation
// vector v, to an isometry of U(m) + mcheck fixing the first hyperbolic
// generator f. Basis order: f, g, then the basis of mcheck. Requires
// (v,v)/2m and (v, sigma_tilde z)/m integral for every basis vector z.
IsometryMatrix zmf_isometry(const Int& m, const Lattice& mcheck, const MatZ& sigma_tilde,
                            const VecZ& v);

// Tube-domain coordinates to the period quadric. f and g are isotropic with
// (f,g) = 1; z is given over the deterministic integral basis of the
// orthogonal complement of f and g inside n. The identity (mu,mu) = 0 is
// asserted exactly; (mu, conj mu) = 2(y,y) with y = Im z is returned along
// with the in-domain flag (y,y) > 0.
TubeResult tube_alpha(const Lattice& n, const VecZ& f, const VecZ& g,
                      const std::vector<CRat>& z);

// Symbolic identity in the second exterior power of Z^4, basis
// f1 = e1^e2, g1 = e3^e4, f2 = e1^e3, g2 = e4^e2, f3 = e1^e4, g3 = e2^e3:
// (-t e1 + e4) ^ (n t e2 - e3) = -n t^2 f1 + g1 + t (f2 + n g2).
// Checked over Z[t] for a fixed n, or over Z[t,n] with n symbolic.
bool kummer_wedge_identity(const Int& n);
bool kummer_wedge_identity_symbolic();

}  // namespace k3m
