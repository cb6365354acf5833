#pragma once

#include "k3m/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace k3m {

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

// Dense integer matrix, row major. Everything here is exact; no entry ever
// touches machine-word arithmetic.
class MatZ {
  public:
    MatZ() : rows_(0), cols_(0) {}
    MatZ(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Int(0)) {}
    MatZ(std::initializer_list<std::initializer_list<long>> rows);

    static MatZ identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const MatZ& o) const = default;

    MatZ transpose() const;
    MatZ operator*(const MatZ& o) const;
    VecZ operator*(const VecZ& v) const;
    MatZ operator+(const MatZ& o) const;
    MatZ operator-() const;
    MatZ mul_scalar(const Int& k) const;

    VecZ row(std::size_t i) const;
    VecZ col(std::size_t j) const;
    void set_col(std::size_t j, const VecZ& v);

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_square() const { return rows_ == cols_; }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

struct HnfResult {
    MatZ h;          // row-style Hermite normal form of the input
    MatZ u;          // unimodular, u * a = h
    std::size_t rank = 0;
};

struct SnfResult {
    MatZ d;          // diag(d1,...,dr,0,...), d1 | d2 | ... | dr, all >= 0
    MatZ u;          // unimodular, u * a * v = d
    MatZ v;
};

// Row HNF: pivots positive, strictly increasing pivot columns, entries above
// each pivot reduced into [0, pivot), zero rows last.
HnfResult hnf(const MatZ& a);

SnfResult snf(const MatZ& a);

// Basis of {x : a*x = 0}, returned as columns. The kernel of an integer
// matrix is automatically saturated; the basis is put in a deterministic
// (transposed row-HNF) form.
MatZ kernel_saturated(const MatZ& a);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const MatZ& a);

// Unique rational solution of a*x = b for injective a; nullopt if unsolvable.
std::optional<VecQ> solve_rational(const MatZ& a, const VecZ& b);

// Integer solution of a*x = b; nullopt if none exists.
std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b);

// Unimodular matrix whose first column is the given primitive vector.
MatZ unimodular_completion(const VecZ& c);

// Inverse of a unimodular matrix (throws if |det| != 1).
MatZ inverse_unimodular(const MatZ& u);

// Dense rational matrix, just enough for dual bases and diagonalization.
class MatQ {
  public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Rat(0)) {}
    explicit MatQ(const MatZ& m);

    static MatQ identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const MatQ& o) const = default;

    MatQ operator*(const MatQ& o) const;
    MatQ operator+(const MatQ& o) const;
    MatQ mul_scalar(const Rat& k) const;
    MatQ transpose() const;

    bool is_zero() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Inverse over Q; throws std::domain_error on singular input.
MatQ inverse(const MatQ& m);

VecZ vec_sub(const VecZ& x, const VecZ& y);
VecZ vec_add(const VecZ& x, const VecZ& y);
VecZ vec_scale(const Int& k, const VecZ& x);
bool vec_is_zero(const VecZ& v);
bool is_primitive(const VecZ& v);

}  // namespace k3m
