#pragma once

#include "invar/derivation.hpp"
#include "invar/grading.hpp"
#include "invar/groebner.hpp"
#include "invar/linalg.hpp"

#include <optional>

namespace invar {

// The derivation restricted to one bigraded slice, as an exact matrix from
// slice (a,k) to slice (a,k-1): column j holds the coordinates of
// der(domain.basis[j]) in the codomain basis.
struct SliceMap {
    GradedSlice domain;
    GradedSlice codomain;
    QMatrix matrix;
};

SliceMap slice_map(long a, long k, const Derivation& der);

// Basis of the kernel of der on the slice (a,k): primitive integer
// coefficient vectors, sign fixed so the leading coefficient under the
// ring's natural order is positive. Deterministic.
std::vector<Polynomial> kernel_slice(long a, long k, const Derivation& der,
                                     Exec mode = default_exec());

// Some h in slice (a,k+1) with der(h) = target (which must be bihomogeneous
// of bidegree (a,k)), or nullopt. Among all solutions returns the one with
// every free variable of the solve set to zero.
std::optional<Polynomial> preimage_in_slice(const Polynomial& target, const Derivation& der);

// Image membership for Delta on K[x,s,t,u] following the normal-form
// construction: q = sum_{i<=m} (-1)^i/(i+1)! Delta^i(a) p^{i+1} d^{m-i},
// reduced against the Groebner basis of (y1-f1,...,y4-f4, d^{m+1}) under
// the elimination order u>t>s>x >> y4>y3>y2>y1.
struct ImageMembershipResult {
    bool member = false;
    unsigned m = 0;        // nilpotency index of the query
    Polynomial q_tilde;    // normal form, in K[x,s,t,u,y1..y4]
    std::optional<Polynomial> preimage; // b with Delta(b) = a, when member
};

ImageMembershipResult image_membership(const Polynomial& a);
ImageMembershipResult image_membership(const Polynomial& a, const Polynomial& local_slice,
                                       const std::vector<Polynomial>& kernel_gens);

// dim of the x-truncations pi(M) and pi(N) at bidegree (3n+9, n+3), where
// M = {f in slice : deg_x der(f) >= n+1}, N = ker der on the slice, and pi
// removes every term of x-degree >= n+1.
struct TruncationSpaces {
    long n = 0;
    size_t dim_piM = 0;
    size_t dim_piN = 0;
};

TruncationSpaces truncation_dims(long n, Exec mode = default_exec());

// det of the (k+1)x(k+1) matrix with entry binom(2p, i), 0 <= i,p <= k.
Rational binomial_determinant(int k);

// The four kernel generators of Delta on K[x,s,t,u].
const std::vector<Polynomial>& delta_kernel_generators();

} // namespace invar
