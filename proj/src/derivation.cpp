#include "invar/derivation.hpp"

namespace invar {

Derivation::Derivation(VarSetPtr vars, std::vector<Polynomial> images)
    : vars_(std::move(vars)), images_(std::move(images)) {
    if (images_.size() != vars_->size())
        throw Error("derivation needs one image per variable");
    for (const Polynomial& im : images_)
        if (!compatible(im.vars(), vars_)) throw Error("derivation image in wrong ring");
}

Derivation Derivation::on(const VarSetPtr& vars) {
    std::vector<Polynomial> images;
    images.reserve(vars->size());
    for (size_t i = 0; i < vars->size(); ++i) {
        const std::string& n = vars->name(i);
        if (n == "s") images.push_back(Polynomial::variable(vars, "x", 3));
        else if (n == "t") images.push_back(Polynomial::variable(vars, "s"));
        else if (n == "u") images.push_back(Polynomial::variable(vars, "t"));
        else if (n == "v") images.push_back(Polynomial::variable(vars, "x", 2));
        else images.push_back(Polynomial::zero(vars));
    }
    return Derivation(vars, std::move(images));
}

const Derivation& Derivation::D() {
    static Derivation d = on(VariableSet::ring_r());
    return d;
}

const Derivation& Derivation::Delta() {
    static Derivation d = on(VariableSet::ring_s());
    return d;
}

Polynomial Derivation::apply(const Polynomial& p) const {
    if (!compatible(p.vars(), vars_)) throw Error("polynomial in wrong ring for derivation");
    Polynomial acc = Polynomial::zero(vars_);
    for (size_t i = 0; i < vars_->size(); ++i) {
        if (images_[i].is_zero()) continue;
        acc = acc + images_[i] * p.partial_derivative(i);
    }
    return acc;
}

Polynomial Derivation::apply_power(const Polynomial& p, unsigned i) const {
    Polynomial r = p;
    while (i-- > 0) r = apply(r);
    return r;
}

unsigned Derivation::nilpotency_index(const Polynomial& p) const {
    if (p.is_zero()) throw Error("nilpotency index of the zero polynomial");
    unsigned cap = 4u * (unsigned)p.max_total_degree() + 16u;
    Polynomial cur = p;
    for (unsigned m = 0; m <= cap; ++m) {
        Polynomial next = apply(cur);
        if (next.is_zero()) return m;
        cur = std::move(next);
    }
    throw Error("iteration cap exceeded: input does not look locally nilpotent");
}

Polynomial Derivation::exp_action(const Polynomial& p, const Rational& alpha) const {
    Polynomial acc = Polynomial::zero(vars_);
    Polynomial cur = p;
    Rational scale(1);
    for (unsigned i = 0; !cur.is_zero(); ++i) {
        if (i > 0) scale *= alpha / Rational(i);
        acc = acc + cur * scale;
        cur = apply(cur);
    }
    return acc;
}

Polynomial Derivation::exp_action_formal(const Polynomial& p) const {
    VarSetPtr ext = vars_->same_as(*VariableSet::ring_r()) ? VariableSet::ring_r_alpha()
                                                           : vars_->extended("alpha");
    Polynomial acc = Polynomial::zero(ext);
    Polynomial cur = p;
    Rational scale(1);
    for (unsigned i = 0; !cur.is_zero(); ++i) {
        if (i > 0) scale /= Rational(i);
        acc = acc + cur.reindex(ext) * Polynomial::variable(ext, "alpha", (int)i) * scale;
        cur = apply(cur);
    }
    return acc;
}

bool check_plinth(const Derivation& der, const PlinthCertificate& cert) {
    if (cert.image.is_zero()) return false;
    return der.apply(cert.element) == cert.image && der.apply(cert.image).is_zero();
}

} // namespace invar
