#pragma once

#include "invar/polynomial.hpp"

#include <optional>

namespace invar {

// Weight gradings on the base ring. The torus grading puts
// deg(x)=1, deg(s)=deg(t)=deg(u)=3, deg(v)=2; the rho grading puts
// rho(x)=0, rho(s)=1, rho(t)=2, rho(u)=3, rho(v)=1. Variables outside
// {x,s,t,u,v} (y1.., alpha, fresh names) carry no weight and any grading
// query touching them is rejected.
class WeightVector {
public:
    static WeightVector torus(const VarSetPtr& vars);
    static WeightVector rho(const VarSetPtr& vars);

    // weight of a monomial; throws if the monomial uses an unweighted variable.
    long weight(const Monomial& m) const;
    bool has_weight(size_t var) const { return weights_[var].has_value(); }
    long weight_of_var(size_t var) const;

    const VarSetPtr& vars() const { return vars_; }

private:
    static WeightVector table(const VarSetPtr& vars,
                              long wx, long ws, long wt, long wu, long wv);
    VarSetPtr vars_;
    std::vector<std::optional<long>> weights_;
};

// max over terms of the weight sum; empty optional encodes the -infinity
// value of the zero polynomial.
std::optional<long> weighted_degree(const Polynomial& p, const WeightVector& w);

// true iff all terms share one weight; the zero polynomial is homogeneous.
bool is_homogeneous(const Polynomial& p, const WeightVector& w);

// convenience for the two standard gradings; throws on the zero polynomial.
long torus_degree(const Polynomial& p);
long rho_degree(const Polynomial& p);
bool is_bihomogeneous(const Polynomial& p);

// max exponent of one named variable; throws on the zero polynomial.
int v_degree(const Polynomial& p);
int x_degree(const Polynomial& p);

// All monomials of the ring with torus degree a and rho degree k, enumerated
// ascending lexicographically in the exponent tuple (storage variable order).
struct GradedSlice {
    long a = 0;
    long k = 0;
    VarSetPtr ring;
    std::vector<Monomial> basis;

    std::optional<size_t> index_of(const Monomial& m) const;
    Polynomial element(const std::vector<Rational>& coords) const;
    std::vector<Rational> coordinates(const Polynomial& p) const; // throws if p not in slice
};

GradedSlice slice_basis(long a, long k, const VarSetPtr& ring);

// Number of exponent tuples (a,b,c,d) >= 0 on the kernel generators
// (weights 1,6,9,12 and 0,2,3,6) with a+6b+9c+12d = 3n+9 and
// 2b+3c+6d = n+3.
long count_kernel_monomials(long n);

} // namespace invar
