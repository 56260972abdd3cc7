#pragma once

#include "invar/order.hpp"
#include "invar/rational.hpp"
#include "invar/varset.hpp"

#include <map>
#include <string>
#include <vector>

namespace invar {

// Exponent vector, one entry per variable of the owning VariableSet.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}

    size_t size() const { return e.size(); }
    bool is_one() const;
    int total_degree() const;
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    Monomial operator/(const Monomial& m) const; // requires divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& m) const;
    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
};

struct Term {
    Rational coeff; // never zero in a stored polynomial
    Monomial mono;
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed VariableSet. Terms are stored strictly descending under the ring's
// natural order, so equality and printing are canonical; comparisons taken
// under a different order scan.
//
// Values are immutable after construction (all operations return new
// polynomials) and safe to share across threads.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Polynomial zero(VarSetPtr vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(VarSetPtr vars, Rational c);
    static Polynomial one(VarSetPtr vars) { return constant(std::move(vars), 1); }
    static Polynomial variable(const VarSetPtr& vars, size_t index, int power = 1);
    static Polynomial variable(const VarSetPtr& vars, const std::string& name, int power = 1);
    static Polynomial from_term(VarSetPtr vars, Rational c, Monomial m);
    // terms need not be sorted or combined; zero coefficients are dropped.
    static Polynomial from_terms(VarSetPtr vars, std::vector<Term> terms);

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }

    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& q) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned exponent) const;
    bool operator==(const Polynomial& q) const;
    bool operator!=(const Polynomial& q) const { return !(*this == q); }

    // leading data under an order; throws on the zero polynomial.
    const Term& leading_term(const MonomialOrder& order) const;
    const Monomial& leading_monomial(const MonomialOrder& order) const;

    Polynomial partial_derivative(size_t var) const;
    Polynomial partial_derivative(const std::string& var) const;

    // simultaneous substitution; variables absent from the map stay fixed.
    Polynomial substitute(const std::map<size_t, Polynomial>& bindings) const;

    // highest exponent of one variable; throws on the zero polynomial.
    int degree_in(size_t var) const;
    // the coefficient of var^power as a polynomial (exponent of var zeroed).
    Polynomial coefficient_of(size_t var, int power) const;

    // move to another variable set, matching variables by name. Throws if a
    // variable used with nonzero exponent is missing from the target.
    Polynomial reindex(const VarSetPtr& target) const;

    int max_total_degree() const; // 0 for the zero polynomial

    std::string to_string() const; // under the ring's natural order
    std::string to_string(const MonomialOrder& order) const;

private:
    VarSetPtr vars_;
    std::vector<Term> terms_; // descending under natural order, canonical
    void normalize(std::vector<Term>&& raw);
    friend class PolynomialBuilder;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Text grammar: integer or rational coefficients ("-3", "1/2"), variables
// from the active set, '^' for powers, '*' optional between factors, '+'/'-'
// separators, whitespace insignificant.
Polynomial parse_polynomial(const std::string& text, const VarSetPtr& vars);

// single-divisor exact division; throws if the division leaves a remainder.
Polynomial exact_divide(const Polynomial& p, const Polynomial& divisor);

} // namespace invar
