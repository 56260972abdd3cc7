#pragma once

#include "invar/families.hpp"
#include "invar/parallel.hpp"
#include "invar/report.hpp"

#include <optional>

namespace invar {

// Subduction against a finite generator set: repeatedly decompose the
// leading monomial as a product of generator leading monomials, match the
// leading coefficients, subtract and continue. Stops as soon as a leading
// monomial admits no decomposition; residue 0 certifies membership in the
// generated algebra.
struct SubductionStep {
    Rational coeff;
    std::vector<size_t> gen_indices; // multiset, ascending
};

struct SubductionResult {
    Polynomial residue;
    std::vector<SubductionStep> expression;
};

SubductionResult subduct(const Polynomial& f, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order);

Polynomial evaluate_expression(const std::vector<SubductionStep>& expr,
                               const std::vector<Polynomial>& gens, const VarSetPtr& vars);

// The leading monomials of the family generators up to bound N:
// b_i = x v^i, c_i = x^3 t v^i, d_i = x^6 u v^i (0 <= i <= N) and e = x^6 u^2.
// Coefficients (1, 2, 3, 9) live on the term level and are not stored here.
class LeadingMonomialSet {
public:
    enum class Gen { b, c, d, e };
    struct Factor {
        Gen gen;
        int index; // ignored for e
        int multiplicity;
    };

    explicit LeadingMonomialSet(int N, bool with_e = true);

    int bound() const { return N_; }

    // multiset of generators whose monomial product equals m, with the
    // v-exponent split greedily onto the highest admissible indices first;
    // nullopt when m is not a product of set monomials.
    std::optional<std::vector<Factor>> decompose(const Monomial& m) const;

    static Monomial monomial(Gen g, int index);

private:
    int N_;
    bool with_e_;
};

// Leading-term and critical-layer checks of the pairwise relation families
// (index sums bounded by N), with annotations where the printed formulas
// disagree with the exact expansion.
Report check_relation_identities(const FamilyArchive& archive, int N);

// (a) every relation instance with index sum <= N subducts to residue 0
// against {g, beta_i, gamma_i, delta_i : i <= N};
// (b) every kernel element of D found on the full-ring slices of torus
// degree <= 2N+1 subducts to residue 0.
Report verify_sagbi(const FamilyArchive& archive, int N, Exec mode = default_exec());

} // namespace invar
