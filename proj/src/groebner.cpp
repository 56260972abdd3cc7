#include "invar/groebner.hpp"

#include <algorithm>
#include <set>

namespace invar {

IdealBasis IdealBasis::raw(std::vector<Polynomial> gens, MonomialOrder order) {
    IdealBasis b;
    b.order_ = std::move(order);
    for (Polynomial& g : gens)
        if (!g.is_zero()) b.gens_.push_back(std::move(g));
    b.original_ = b.gens_;
    b.groebner_ = false;
    return b;
}

bool IdealBasis::contains_unit() const {
    for (const Polynomial& g : gens_)
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

static NormalFormResult divide(const Polynomial& p, const std::vector<Polynomial>& gens,
                               const MonomialOrder& order) {
    NormalFormResult out;
    out.remainder = Polynomial::zero(p.vars());
    out.quotients.assign(gens.size(), Polynomial::zero(p.vars()));
    Polynomial work = p;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term(order);
        bool reduced = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].is_zero()) continue;
            const Term& glt = gens[i].leading_term(order);
            if (!glt.mono.divides(lt.mono)) continue;
            Polynomial q =
                Polynomial::from_term(p.vars(), lt.coeff / glt.coeff, lt.mono / glt.mono);
            out.quotients[i] = out.quotients[i] + q;
            work = work - q * gens[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial head = Polynomial::from_term(p.vars(), lt.coeff, lt.mono);
            out.remainder = out.remainder + head;
            work = work - head;
        }
    }
    return out;
}

NormalFormResult normal_form(const Polynomial& p, const IdealBasis& basis) {
    return divide(p, basis.generators(), basis.order());
}

namespace {

struct WorkingBasis {
    std::vector<Polynomial> polys;
    std::vector<std::vector<Polynomial>> expr; // polys[i] = sum expr[i][j]*original[j]
};

} // namespace

IdealBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order) {
    const VarSetPtr vars = gens.empty() ? nullptr : gens.front().vars();
    if (!vars) throw Error("buchberger needs at least one generator");
    const size_t n0 = gens.size();

    WorkingBasis wb;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        std::vector<Polynomial> e(n0, Polynomial::zero(vars));
        e[i] = Polynomial::one(vars);
        wb.polys.push_back(gens[i]);
        wb.expr.push_back(std::move(e));
    }
    if (wb.polys.empty()) throw Error("buchberger needs a nonzero generator");

    // reduce p (with its expression) against the working basis
    auto reduce_full = [&](Polynomial p, std::vector<Polynomial> e)
        -> std::pair<Polynomial, std::vector<Polynomial>> {
        Polynomial rem = Polynomial::zero(vars);
        while (!p.is_zero()) {
            const Term& lt = p.leading_term(order);
            bool hit = false;
            for (size_t i = 0; i < wb.polys.size(); ++i) {
                if (wb.polys[i].is_zero()) continue;
                const Term& glt = wb.polys[i].leading_term(order);
                if (!glt.mono.divides(lt.mono)) continue;
                Polynomial q =
                    Polynomial::from_term(vars, lt.coeff / glt.coeff, lt.mono / glt.mono);
                p = p - q * wb.polys[i];
                for (size_t j = 0; j < n0; ++j) e[j] = e[j] - q * wb.expr[i][j];
                hit = true;
                break;
            }
            if (!hit) {
                Polynomial head = Polynomial::from_term(vars, lt.coeff, lt.mono);
                rem = rem + head;
                p = p - head;
            }
        }
        return {rem, std::move(e)};
    };

    std::set<std::pair<size_t, size_t>> pending, processed;
    auto add_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i)
            if (!wb.polys[i].is_zero()) pending.insert({i, k});
    };
    add_pairs_for(wb.polys.size() - 1);
    for (size_t k = 1; k < wb.polys.size(); ++k) add_pairs_for(k);

    while (!pending.empty()) {
        // normal strategy: smallest lcm under the order, ties by index pair
        auto best = pending.begin();
        Monomial best_lcm = Monomial::lcm(wb.polys[best->first].leading_monomial(order),
                                          wb.polys[best->second].leading_monomial(order));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = Monomial::lcm(wb.polys[it->first].leading_monomial(order),
                                       wb.polys[it->second].leading_monomial(order));
            if (order.compare(l, best_lcm) < 0) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        processed.insert({i, j});

        const Monomial& lmi = wb.polys[i].leading_monomial(order);
        const Monomial& lmj = wb.polys[j].leading_monomial(order);
        if (lmi.coprime(lmj)) continue; // product criterion
        bool chained = false;           // chain criterion
        for (size_t k = 0; k < wb.polys.size() && !chained; ++k) {
            if (k == i || k == j || wb.polys[k].is_zero()) continue;
            if (!wb.polys[k].leading_monomial(order).divides(best_lcm)) continue;
            auto key1 = std::minmax(i, k), key2 = std::minmax(j, k);
            if (processed.count({key1.first, key1.second}) &&
                processed.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;

        const Term& lti = wb.polys[i].leading_term(order);
        const Term& ltj = wb.polys[j].leading_term(order);
        Polynomial fi = Polynomial::from_term(vars, Rational(1) / lti.coeff, best_lcm / lti.mono);
        Polynomial fj = Polynomial::from_term(vars, Rational(1) / ltj.coeff, best_lcm / ltj.mono);
        Polynomial spoly = fi * wb.polys[i] - fj * wb.polys[j];
        std::vector<Polynomial> se(n0, Polynomial::zero(vars));
        for (size_t k = 0; k < n0; ++k) se[k] = fi * wb.expr[i][k] - fj * wb.expr[j][k];

        auto [rem, re] = reduce_full(std::move(spoly), std::move(se));
        if (rem.is_zero()) continue;
        wb.polys.push_back(std::move(rem));
        wb.expr.push_back(std::move(re));
        add_pairs_for(wb.polys.size() - 1);
    }

    // minimalize: drop generators whose leading monomial another divides
    std::vector<char> keep(wb.polys.size(), 1);
    for (size_t i = 0; i < wb.polys.size(); ++i) {
        if (!keep[i]) continue;
        for (size_t j = 0; j < wb.polys.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& lmi = wb.polys[i].leading_monomial(order);
            const Monomial& lmj = wb.polys[j].leading_monomial(order);
            if (lmj.divides(lmi) && !(lmi == lmj && j > i)) {
                keep[i] = 0;
                break;
            }
        }
    }
    std::vector<Polynomial> minimal;
    std::vector<std::vector<Polynomial>> minimal_expr;
    for (size_t i = 0; i < wb.polys.size(); ++i)
        if (keep[i]) {
            minimal.push_back(wb.polys[i]);
            minimal_expr.push_back(wb.expr[i]);
        }

    // interreduce tails and scale monic
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<size_t> omap;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) {
                    others.push_back(minimal[j]);
                    omap.push_back(j);
                }
            NormalFormResult nf = divide(minimal[i], others, order);
            if (nf.remainder != minimal[i]) {
                changed = true;
                for (size_t k = 0; k < others.size(); ++k)
                    for (size_t j0 = 0; j0 < n0; ++j0)
                        minimal_expr[i][j0] =
                            minimal_expr[i][j0] - nf.quotients[k] * minimal_expr[omap[k]][j0];
                minimal[i] = nf.remainder;
            }
        }
    }
    for (size_t i = 0; i < minimal.size(); ++i) {
        const Rational& lc = minimal[i].leading_term(order).coeff;
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            minimal[i] = minimal[i] * inv;
            for (size_t j = 0; j < n0; ++j) minimal_expr[i][j] = minimal_expr[i][j] * inv;
        }
    }
    std::vector<size_t> idx(minimal.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return order.compare(minimal[a].leading_monomial(order),
                             minimal[b].leading_monomial(order)) < 0;
    });

    IdealBasis out;
    out.order_ = order;
    out.groebner_ = true;
    out.original_ = gens;
    for (size_t i : idx) {
        out.gens_.push_back(minimal[i]);
        out.expr_.push_back(minimal_expr[i]);
    }
    return out;
}

MembershipResult ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                                  const MonomialOrder& order) {
    IdealBasis gb = buchberger(gens, order);
    NormalFormResult nf = normal_form(p, gb);
    MembershipResult res;
    res.normal_form = nf.remainder;
    if (!nf.remainder.is_zero()) {
        res.member = false;
        return res;
    }
    res.member = true;
    res.quotients.assign(gens.size(), Polynomial::zero(p.vars()));
    for (size_t i = 0; i < gb.generators().size(); ++i) {
        if (nf.quotients[i].is_zero()) continue;
        for (size_t j = 0; j < gens.size(); ++j)
            res.quotients[j] = res.quotients[j] + nf.quotients[i] * gb.expressions()[i][j];
    }
    return res;
}

bool radical_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                        const MonomialOrder& order) {
    if (p.is_zero()) return true;
    VarSetPtr base = p.vars();
    VarSetPtr ext = base->extended("w");
    std::vector<Polynomial> egens;
    for (const Polynomial& g : gens) egens.push_back(g.reindex(ext));
    egens.push_back(Polynomial::one(ext) -
                    Polynomial::variable(ext, "w") * p.reindex(ext));
    std::vector<std::string> ranked;
    for (size_t i : order.ranking()) ranked.push_back(base->name(i));
    ranked.push_back("w");
    MonomialOrder eorder = MonomialOrder::lex(ext, ranked);
    IdealBasis gb = buchberger(std::move(egens), eorder);
    return gb.contains_unit();
}

} // namespace invar
