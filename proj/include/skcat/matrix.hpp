#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skcat/scalar.hpp"

namespace skcat {

/* Dense matrix over a single field.  Desk-scale sizes only. */
class Mat {
public:
    Mat(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f))
    {
    }

    static Mat identity(Field f, std::size_t n);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    // Entry assignment with field check (rank() demands a uniform field).
    void set(std::size_t i, std::size_t j, const Scalar& v);

    std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

std::size_t rank(Mat m);

// Basis of {v : m v = 0}; each free column contributes one vector with that
// coordinate set to 1.  Size of the basis is cols - rank.
std::vector<std::vector<Scalar>> nullspace_basis(const Mat& m);

// One solution of m x = b with free variables set to 0, or nothing.
std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b);

/* Dense matrix over Z with arbitrary-precision entries. */
class IntMat {
public:
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntMat transposed() const;
    Mat over(Field f) const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

IntMat mul(const IntMat& a, const IntMat& b);

// Determinant by fraction-free (Bareiss) elimination; square input.
Int determinant(IntMat a);

struct SmithResult {
    IntMat u, d, v; // d = u * m * v, u and v unimodular, d diagonal with d1 | d2 | ...
    std::size_t rank = 0;
    std::vector<Int> diagonal; // the nonzero diagonal entries, in order
};

// Smith normal form.  Pivot choice: smallest nonzero absolute value, ties by
// lowest (row, col).  Verifies d = u*m*v, |det u| = |det v| = 1 and the
// divisibility chain before returning.
SmithResult smith_normal_form(const IntMat& m);

// Row-lattice-preserving reduction: drops duplicate and zero rows, then
// integer row echelon.  Output has at most min(rows, cols) rows spanning the
// same row lattice.  Used to keep SNF inputs at desk scale.
IntMat reduce_row_lattice(const IntMat& m);

// Integer solutions x of m x = b, via SNF; nothing when no integral solution.
std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b);

} // namespace skcat
