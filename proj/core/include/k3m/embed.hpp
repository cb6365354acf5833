#pragma once

#include "k3m/discform.hpp"
#include "k3m/lattice.hpp"

#include <optional>
#include <utility>

namespace k3m {

// Sublattice of an ambient lattice; columns of `matrix` are the ambient
// coordinates of the sublattice basis.
struct Embedding {
    Lattice ambient;
    MatZ matrix;
};

// Tri-state outcome of a sufficient criterion: it can guarantee a property
// but never refute it.
enum class Criterion { guaranteed, not_implied };

bool is_primitive_embedding(const Embedding& e);

struct ComplementResult {
    Lattice lattice;            // complement in its own basis
    MatZ embedding;             // ambient coordinates of that basis
    bool input_was_primitive;   // false when the input had to be saturated
};

// Orthogonal complement of the (saturation of the) embedded sublattice.
ComplementResult orthogonal_complement(const Embedding& e);

// Existence of a primitive embedding into the rank-22 K3 lattice for an even
// hyperbolic lattice of signature (1, t), t <= 19.
Criterion nikulin_exists(const Lattice& m);

// Uniqueness (up to isometry) of such an embedding.
Criterion nikulin_unique(const Lattice& m);

struct UmSummandResult {
    Criterion verdict;
    // Generators of an embedded copy of the U(m) discriminant form, when found.
    std::optional<std::pair<FqfElem, FqfElem>> witness;
};

// Sufficient criterion for S to contain U(m) as an orthogonal direct summand.
UmSummandResult u_m_summand_criterion(const Lattice& s, const Int& m);

// All primitive isotropic vectors with coordinates in [-bound, bound].
std::vector<VecZ> find_isotropic_primitive(const Lattice& l, const Int& bound);

enum class Admissibility { yes, no, unknown };

struct AdmissibilityResult {
    Admissibility verdict;
    std::optional<VecZ> g;               // isotropic partner with (f,g) = m, div g = m
    std::optional<MatZ> splitting_basis; // columns: f, g, then a complement basis
    std::optional<Lattice> complement;   // Gram of the complement block
};

// Searches for an isotropic partner making (f, g) span U(m), m = div(f).
// Verdict `no` is only ever returned for div(f) != m; a fruitless search is
// reported as `unknown`. The search adjusts an extended-gcd solution by
// multiples of f and by bounded combinations of a complement basis.
AdmissibilityResult is_m_admissible(const Lattice& l, const VecZ& f, const Int& m,
                                    const Int& bound = Int(8));

struct GenusComparison {
    bool equal;      // same signature and isomorphic discriminant forms
    bool promoted;   // both indefinite with l(A) <= rank - 2: genus has one class
};

GenusComparison genus_equal(const Lattice& a, const Lattice& b);

}  // namespace k3m
