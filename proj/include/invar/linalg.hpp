#pragma once

#include "invar/parallel.hpp"
#include "invar/rational.hpp"

#include <optional>
#include <vector>

namespace invar {

// Dense exact rational matrix, row major.
struct QMatrix {
    size_t nrows = 0, ncols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(size_t r, size_t c) : nrows(r), ncols(c), a(r * c, Rational(0)) {}
    Rational& at(size_t i, size_t j) { return a[i * ncols + j]; }
    const Rational& at(size_t i, size_t j) const { return a[i * ncols + j]; }
};

// Fraction-free (Bareiss) row echelon form over the integers; rows are the
// input rows scaled integral. Division-free of denominators, intermediate
// entries are minors of the scaled matrix. The row updates of each
// elimination step run through par_for.
struct Echelon {
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
    std::vector<std::vector<Integer>> rows;
};

Echelon fraction_free_echelon(const QMatrix& m, Exec mode = default_exec());

size_t rank(const QMatrix& m, Exec mode = default_exec());

// Basis of the right nullspace as primitive integer vectors (content 1,
// first nonzero entry positive), one per free column, in free-column order.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m, Exec mode = default_exec());

// One solution of A x = rhs with all free variables set to zero, or nullopt
// if the system is inconsistent.
std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& rhs,
                                           Exec mode = default_exec());

// Exact determinant of a square matrix (rational Gaussian elimination).
Rational determinant(const QMatrix& m);

// Reduced row echelon form over the rationals. Kept as an independent
// second route for rank/nullspace cross-checks.
struct RrefResult {
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
    std::vector<std::vector<Rational>> rows;
};
RrefResult rref(const QMatrix& m);

} // namespace invar
