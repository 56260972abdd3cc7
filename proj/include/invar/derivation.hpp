#pragma once

#include "invar/polynomial.hpp"

namespace invar {

// A derivation given by its variable images, extended to the whole ring by
// the Leibniz rule. The two instances used everywhere are
//   D     = x^3 d/ds + s d/dt + t d/du + x^2 d/dv   on K[x,s,t,u,v]
//   Delta = D restricted to K[x,s,t,u]
// both locally nilpotent and triangular monomial.
class Derivation {
public:
    Derivation(VarSetPtr vars, std::vector<Polynomial> images);

    static const Derivation& D();     // on ring_r
    static const Derivation& Delta(); // on ring_s
    // same variable images on another ring containing x,s,t,u (v optional);
    // variables outside {s,t,u,v} map to zero.
    static Derivation on(const VarSetPtr& vars);

    const VarSetPtr& vars() const { return vars_; }
    const Polynomial& image(size_t var) const { return images_[var]; }

    Polynomial apply(const Polynomial& p) const;
    Polynomial apply_power(const Polynomial& p, unsigned i) const;

    // the unique m with der^m(p) != 0 and der^{m+1}(p) = 0; throws on the
    // zero polynomial and when the iteration cap 4*deg+16 is exceeded
    // (which would mean the input is not locally nilpotent for this map).
    unsigned nilpotency_index(const Polynomial& p) const;

    bool is_invariant(const Polynomial& p) const { return apply(p).is_zero(); }

    // exp(alpha * der) at a rational alpha; finite by local nilpotency.
    Polynomial exp_action(const Polynomial& p, const Rational& alpha) const;
    // exp(alpha * der) with formal alpha; the result lives in the ring
    // extended by the unweighted variable "alpha".
    Polynomial exp_action_formal(const Polynomial& p) const;

private:
    VarSetPtr vars_;
    std::vector<Polynomial> images_;
};

// Witness that an element is a local slice, i.e. image = der(element) is a
// nonzero kernel element; validates der(element) == image, der(image) == 0.
struct PlinthCertificate {
    Polynomial element;
    Polynomial image;
};

bool check_plinth(const Derivation& der, const PlinthCertificate& cert);

} // namespace invar
