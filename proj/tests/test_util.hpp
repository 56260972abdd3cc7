#pragma once

#include "invar/polynomial.hpp"

#include <random>

namespace invar::testutil {

inline Rational random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Monomial random_monomial(std::mt19937& rng, size_t nvars, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    Monomial m(nvars);
    for (size_t i = 0; i < nvars; ++i) m.e[i] = e(rng);
    return m;
}

inline Polynomial random_poly(std::mt19937& rng, const VarSetPtr& vars, int max_terms = 5,
                              int max_exp = 3) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::vector<Term> raw;
    int n = nt(rng);
    for (int i = 0; i < n; ++i)
        raw.push_back({random_coeff(rng), random_monomial(rng, vars->size(), max_exp)});
    return Polynomial::from_terms(vars, std::move(raw));
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, const VarSetPtr& vars,
                                      int max_terms = 5, int max_exp = 3) {
    for (;;) {
        Polynomial p = random_poly(rng, vars, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

} // namespace invar::testutil
