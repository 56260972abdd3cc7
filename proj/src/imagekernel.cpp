#include "invar/imagekernel.hpp"

namespace invar {

const std::vector<Polynomial>& delta_kernel_generators() {
    static std::vector<Polynomial> gens = [] {
        const VarSetPtr& s = VariableSet::ring_s();
        return std::vector<Polynomial>{
            parse_polynomial("x", s),
            parse_polynomial("2*x^3*t - s^2", s),
            parse_polynomial("3*x^6*u - 3*x^3*s*t + s^3", s),
            parse_polynomial("9*x^6*u^2 - 18*x^3*s*t*u + 6*s^3*u + 8*x^3*t^3 - 3*s^2*t^2", s),
        };
    }();
    return gens;
}

SliceMap slice_map(long a, long k, const Derivation& der) {
    SliceMap sm;
    sm.domain = slice_basis(a, k, der.vars());
    sm.codomain = slice_basis(a, k - 1, der.vars());
    sm.matrix = QMatrix(sm.codomain.basis.size(), sm.domain.basis.size());
    for (size_t j = 0; j < sm.domain.basis.size(); ++j) {
        Polynomial img = der.apply(Polynomial::from_term(der.vars(), 1, sm.domain.basis[j]));
        for (const Term& t : img.terms()) {
            auto row = sm.codomain.index_of(t.mono);
            if (!row) throw Error("derivation image left the expected slice");
            sm.matrix.at(*row, j) = t.coeff;
        }
    }
    return sm;
}

std::vector<Polynomial> kernel_slice(long a, long k, const Derivation& der, Exec mode) {
    SliceMap sm = slice_map(a, k, der);
    std::vector<Polynomial> out;
    if (sm.domain.basis.empty()) return out;
    MonomialOrder natural = MonomialOrder::natural(der.vars());
    for (auto& vec : nullspace(sm.matrix, mode)) {
        Polynomial p = sm.domain.element(vec);
        if (p.leading_term(natural).coeff < 0) p = -p;
        out.push_back(std::move(p));
    }
    return out;
}

std::optional<Polynomial> preimage_in_slice(const Polynomial& target, const Derivation& der) {
    if (target.is_zero()) return Polynomial::zero(der.vars());
    if (!is_bihomogeneous(target))
        throw Error("preimage_in_slice needs a bihomogeneous target");
    long a = torus_degree(target), k = rho_degree(target);
    SliceMap sm = slice_map(a, k + 1, der);
    if (sm.domain.basis.empty()) return std::nullopt;
    std::vector<Rational> rhs = sm.codomain.coordinates(target);
    auto sol = solve(sm.matrix, rhs);
    if (!sol) return std::nullopt;
    return sm.domain.element(*sol);
}

ImageMembershipResult image_membership(const Polynomial& a) {
    return image_membership(a, Polynomial::variable(VariableSet::ring_s(), "s"),
                            delta_kernel_generators());
}

ImageMembershipResult image_membership(const Polynomial& a, const Polynomial& local_slice,
                                       const std::vector<Polynomial>& kernel_gens) {
    const Derivation& delta = Derivation::Delta();
    if (!compatible(a.vars(), delta.vars()))
        throw Error("image membership queries live in K[x,s,t,u]");
    if (a.is_zero()) {
        ImageMembershipResult res;
        res.member = true;
        res.q_tilde = Polynomial::zero(VariableSet::ring_sy());
        res.preimage = Polynomial::zero(delta.vars());
        return res;
    }
    Polynomial d = delta.apply(local_slice);
    if (d.is_zero() || !delta.apply(d).is_zero())
        throw Error("local slice precondition violated: need der(p) nonzero in the kernel");
    if (kernel_gens.size() != 4) throw Error("expected four kernel generators");

    ImageMembershipResult res;
    res.m = delta.nilpotency_index(a);

    // q = d^{m+1} * sum (-1)^i/(i+1)! Delta^i(a) (p/d)^{i+1}, expanded so it
    // stays polynomial.
    Polynomial q = Polynomial::zero(delta.vars());
    Polynomial der_power = a;
    for (unsigned i = 0; i <= res.m; ++i) {
        Rational c = Rational((i % 2 == 0) ? 1 : -1) / Rational(factorial(i + 1));
        q = q + c * der_power * local_slice.pow(i + 1) * d.pow(res.m - i);
        der_power = delta.apply(der_power);
    }

    const VarSetPtr& sy = VariableSet::ring_sy();
    MonomialOrder elim = MonomialOrder::natural(sy);
    std::vector<Polynomial> ideal_gens;
    for (size_t i = 0; i < 4; ++i) {
        Polynomial yi = Polynomial::variable(sy, "y" + std::to_string(i + 1));
        ideal_gens.push_back(yi - kernel_gens[i].reindex(sy));
    }
    ideal_gens.push_back(d.reindex(sy).pow(res.m + 1));
    IdealBasis gb = buchberger(std::move(ideal_gens), elim);

    res.q_tilde = normal_form(q.reindex(sy), gb).remainder;
    res.member = true;
    for (const Term& t : res.q_tilde.terms()) {
        if (!elim.in_low_block(t.mono)) {
            res.member = false;
            break;
        }
    }
    if (res.member) {
        // substitute the kernel generators back for y1..y4 and divide.
        std::map<size_t, Polynomial> back;
        for (size_t i = 0; i < 4; ++i)
            back[*sy->index_of("y" + std::to_string(i + 1))] = kernel_gens[i].reindex(sy);
        Polynomial evaluated = res.q_tilde.substitute(back).reindex(delta.vars());
        Polynomial b = exact_divide(q - evaluated, d.pow(res.m + 1));
        if (delta.apply(b) != a)
            throw Error("image membership produced an invalid preimage; "
                        "kernel generator set is incomplete");
        res.preimage = std::move(b);
    }
    return res;
}

TruncationSpaces truncation_dims(long n, Exec mode) {
    if (n < 0) throw Error("negative index");
    TruncationSpaces out;
    out.n = n;
    const Derivation& delta = Derivation::Delta();
    SliceMap sm = slice_map(3 * n + 9, n + 3, delta);
    const size_t dim = sm.domain.basis.size();
    const size_t xi = *delta.vars()->index_of("x");

    // M: coefficient vectors whose image has no term of x-degree <= n.
    std::vector<size_t> low_rows;
    for (size_t r = 0; r < sm.codomain.basis.size(); ++r)
        if (sm.codomain.basis[r].e[xi] < n + 1) low_rows.push_back(r);
    QMatrix constraints(low_rows.size(), dim);
    for (size_t r = 0; r < low_rows.size(); ++r)
        for (size_t j = 0; j < dim; ++j) constraints.at(r, j) = sm.matrix.at(low_rows[r], j);
    std::vector<std::vector<Rational>> m_basis = nullspace(constraints, mode);
    std::vector<std::vector<Rational>> n_basis = nullspace(sm.matrix, mode);

    // pi keeps only the basis monomials of x-degree <= n.
    std::vector<size_t> kept;
    for (size_t j = 0; j < dim; ++j)
        if (sm.domain.basis[j].e[xi] < n + 1) kept.push_back(j);
    auto truncated_rank = [&](const std::vector<std::vector<Rational>>& vecs) -> size_t {
        if (vecs.empty() || kept.empty()) return 0;
        QMatrix proj(vecs.size(), kept.size());
        for (size_t i = 0; i < vecs.size(); ++i)
            for (size_t j = 0; j < kept.size(); ++j) proj.at(i, j) = vecs[i][kept[j]];
        return rank(proj, mode);
    };
    out.dim_piM = truncated_rank(m_basis);
    out.dim_piN = truncated_rank(n_basis);
    return out;
}

Rational binomial_determinant(int k) {
    if (k < 0) throw Error("negative index");
    QMatrix m(k + 1, k + 1);
    for (int i = 0; i <= k; ++i)
        for (int p = 0; p <= k; ++p) m.at(i, p) = Rational(binomial(2 * p, i));
    return determinant(m);
}

} // namespace invar
