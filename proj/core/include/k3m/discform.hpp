#pragma once

#include "k3m/lattice.hpp"

#include <cstdint>
#include <vector>

namespace k3m {

// Element of a finite quadratic form group, as coefficients over the stored
// generators, reduced mod the generator orders.
using FqfElem = std::vector<Int>;

// Finite quadratic form (A, q, b): A = (+) Z/n_i with n_1 | n_2 | ... | n_k,
// q: A -> Q/2Z, b: A x A -> Q/Z, q(x+y) = q(x) + q(y) + 2 b(x,y).
class FiniteQuadraticForm {
  public:
    FiniteQuadraticForm();  // trivial group
    FiniteQuadraticForm(std::vector<Int> orders, std::vector<Rat> q, std::vector<std::vector<Rat>> b);

    const std::vector<Int>& orders() const { return orders_; }
    std::size_t length() const { return orders_.size(); }
    Int group_order() const;

    Rat q_gen(std::size_t i) const { return q_[i]; }
    Rat b_gen(std::size_t i, std::size_t j) const { return b_[i][j]; }

    Rat q_value(const FqfElem& x) const;                     // in [0, 2)
    Rat b_value(const FqfElem& x, const FqfElem& y) const;   // in [0, 1)

    FqfElem reduce(FqfElem x) const;
    FqfElem add(const FqfElem& x, const FqfElem& y) const;
    Int elem_order(const FqfElem& x) const;

    // All group elements in mixed-radix order; throws when the group order
    // exceeds the bound.
    std::vector<FqfElem> elements(const Int& bound = Int(1000000)) const;

    bool operator==(const FiniteQuadraticForm&) const = default;

  private:
    std::vector<Int> orders_;
    std::vector<Rat> q_;
    std::vector<std::vector<Rat>> b_;
};

// A(L) = L*/L with the induced quadratic and bilinear forms. L must be even.
FiniteQuadraticForm discriminant_form(const Lattice& l);

// Rational coordinate vectors (w.r.t. the basis of L) representing the
// generators of A(L), aligned with discriminant_form(l).orders().
std::vector<VecQ> discriminant_generators(const Lattice& l);

FiniteQuadraticForm fqf_direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);
FiniteQuadraticForm fqf_negate(const FiniteQuadraticForm& a);
FiniteQuadraticForm p_primary(const FiniteQuadraticForm& a, const Int& p);

// Elements x (including 0) with q(x) = 0 in Q/2Z.
std::vector<FqfElem> isotropic_elements(const FiniteQuadraticForm& a, const Int& bound = Int(1000000));

// Isomorphism of finite quadratic forms (group iso preserving q and b),
// decided by pruned backtracking over generator images. Throws when the
// search exceeds node_bound visited nodes.
bool are_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                    const Int& node_bound = Int(1000000));

// H^perp / H for an isotropic subgroup H given by generators.
FiniteQuadraticForm quotient_form(const FiniteQuadraticForm& a, const std::vector<FqfElem>& h_gens);

// True when the isometry m of l induces the identity on A(l).
bool acts_trivially_on_discriminant(const Lattice& l, const MatZ& m);

}  // namespace k3m
