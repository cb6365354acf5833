#pragma once

#include "k3m/mat.hpp"

#include <string>

namespace k3m {

struct Signature {
    std::size_t pos = 0;
    std::size_t neg = 0;
    bool operator==(const Signature&) const = default;
};

struct RootCount {
    Int count;        // number of vectors of norm -2 found
    bool complete;    // true when the enumeration provably saw every root
    Int bound;        // coordinate box used in truncated mode, 0 for exact mode
};

// Even or odd nondegenerate integer lattice with a distinguished basis,
// represented by its Gram matrix. Immutable value type.
class Lattice {
  public:
    explicit Lattice(MatZ gram, std::string label = "");

    const MatZ& gram() const { return gram_; }
    const std::string& label() const { return label_; }
    std::size_t rank() const { return gram_.rows(); }

    Int inner(const VecZ& x, const VecZ& y) const;
    Int norm(const VecZ& x) const { return inner(x, x); }

    bool is_even() const;
    Int determinant() const;
    Signature signature() const;

    // gcd of the pairings (f, e_i) over the basis; f must be nonzero.
    Int div(const VecZ& f) const;

    bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

    Lattice with_label(std::string label) const { return Lattice(gram_, std::move(label)); }

  private:
    MatZ gram_;
    std::string label_;
};

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& a, const Int& m);

// Signature of an arbitrary symmetric rational Gram by congruent
// diagonalization; third component counts the radical.
struct InertiaCounts {
    std::size_t pos = 0, neg = 0, zero = 0;
};
InertiaCounts inertia(const MatZ& gram);

// Exact root enumeration for negative definite lattices; otherwise a
// truncated box search over coordinates in [-bound, bound].
RootCount root_count(const Lattice& l, const Int& bound = Int(3));

bool is_isometry(const Lattice& l, const MatZ& m);

// Standard models.
namespace lat {
Lattice U();
Lattice U_scaled(const Int& m);      // Gram [[0,m],[m,0]]
Lattice A(std::size_t n);            // negative definite root lattice
Lattice D(std::size_t n);
Lattice E(std::size_t n);            // n in {6,7,8}
Lattice T(std::size_t p, std::size_t q, std::size_t r);
Lattice diag(const Int& k);          // rank one, <k>
Lattice k3();                        // U + U + U + E8 + E8
}  // namespace lat

}  // namespace k3m
