// Exact integer and rational linear algebra: dense arbitrary-precision
// matrices with Hermite/Smith normal forms, integer kernels, lattice
// quotients and triangular rational solves. Everything here is pure and
// overflow-free by construction (GMP scalars throughout).
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

struct zlinalg_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct non_triangular_error : zlinalg_error {
    using zlinalg_error::zlinalg_error;
};
struct singular_diagonal_error : zlinalg_error {
    using zlinalg_error::zlinalg_error;
};
struct not_a_sublattice_error : zlinalg_error {
    using zlinalg_error::zlinalg_error;
};

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    IntVec row(size_t i) const;
    void set_row(size_t i, const IntVec& v);
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    bool is_zero() const;

    void swap_rows(size_t i, size_t j);
    // row_i += c * row_j
    void add_row(size_t i, size_t j, const Int& c);
    void negate_row(size_t i);
    void swap_cols(size_t i, size_t j);
    void add_col(size_t i, size_t j, const Int& c);

    // Stacks o below this matrix (column counts must agree).
    IntMatrix vstack(const IntMatrix& o) const;

    std::string str() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// Dense rational matrix; entries kept canonical (lowest terms).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static RatMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    bool operator==(const RatMatrix& o) const = default;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

struct HnfResult {
    IntMatrix h;  // row Hermite normal form: positive pivots, entries above
                  // each pivot reduced into [0, pivot), zero rows last
    IntMatrix u;  // unimodular, u * m = h
};

struct SnfResult {
    std::vector<Int> factors;  // diagonal of u*m*v; d_i >= 0 and d_i | d_{i+1}
    IntMatrix u;               // unimodular, rows x rows
    IntMatrix v;               // unimodular, cols x cols
};

HnfResult hermite_normal_form(const IntMatrix& m);
SnfResult smith_normal_form(const IntMatrix& m);

size_t rank(const IntMatrix& m);

// Basis of the left kernel {x : x * m = 0}; rows form a (saturated) lattice
// basis, canonicalized by HNF. Result has m.rows() columns.
IntMatrix integer_kernel(const IntMatrix& m);

// Solves t * x = b for lower-triangular t with nonzero diagonal.
RatVec solve_unitriangular_rational(const RatMatrix& t, const RatVec& b);

// Invariant factors of span(ambient_basis) / span(sub_basis), nonzero factors
// ascending by divisibility, one 0 per free summand at the end. Throws
// not_a_sublattice_error when the containment precondition fails.
std::vector<Int> quotient_invariants(const IntMatrix& ambient_basis, const IntMatrix& sub_basis);

// Membership of v in the row lattice of h, where h must be an HNF basis
// (zero rows permitted and ignored).
bool lattice_contains(const IntMatrix& h, const IntVec& v);

// HNF basis of {x : forms.row(j) . x == 0 mod moduli[j] for all j}.
// A modulus of 0 means an exact equation. All moduli must be >= 0.
IntMatrix congruence_solution_lattice(const IntMatrix& forms, const std::vector<Int>& moduli);

}  // namespace burnside
