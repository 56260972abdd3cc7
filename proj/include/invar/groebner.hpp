#pragma once

#include "invar/polynomial.hpp"

#include <optional>

namespace invar {

// Result of multivariate division: input = sum quotients[i]*basis[i] +
// remainder, no remainder term divisible by any basis leading monomial,
// and LM(quotients[i]*basis[i]) <= LM(input) throughout.
struct NormalFormResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;
};

// A generating set under a fixed order. When groebner_flag is set the
// generators are a reduced Groebner basis (monic, interreduced, sorted by
// ascending leading monomial) and expressions[i] writes generator i as a
// combination of the original input generators.
class IdealBasis {
public:
    static IdealBasis raw(std::vector<Polynomial> gens, MonomialOrder order);

    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    bool groebner_flag() const { return groebner_; }
    const std::vector<Polynomial>& original_generators() const { return original_; }
    const std::vector<std::vector<Polynomial>>& expressions() const { return expr_; }

    bool contains_unit() const;

private:
    std::vector<Polynomial> gens_;
    MonomialOrder order_;
    bool groebner_ = false;
    std::vector<Polynomial> original_;
    std::vector<std::vector<Polynomial>> expr_;
    friend IdealBasis buchberger(std::vector<Polynomial>, MonomialOrder);
};

// Buchberger's algorithm with the normal pair-selection strategy (smallest
// lcm under the order, ties by index) and the product & chain criteria.
// Output is the reduced basis; deterministic for fixed input.
IdealBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order);

NormalFormResult normal_form(const Polynomial& p, const IdealBasis& basis);

struct MembershipResult {
    bool member = false;
    std::vector<Polynomial> quotients; // aligned with the asked generators, when member
    Polynomial normal_form;            // nonzero witness otherwise
};

MembershipResult ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                                  const MonomialOrder& order);

// p in rad(gens), via 1 in (gens, 1 - w*p) with one fresh variable w
// appended least significant.
bool radical_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                        const MonomialOrder& order);

} // namespace invar
