#include "invar/order.hpp"

#include "invar/polynomial.hpp"
#include "invar/rational.hpp"

#include <algorithm>

namespace invar {

MonomialOrder::MonomialOrder(Kind kind, VarSetPtr vars, std::vector<size_t> ranking, size_t block)
    : kind_(kind), vars_(std::move(vars)), ranking_(std::move(ranking)), block_(block) {
    if (ranking_.size() != vars_->size())
        throw Error("order ranking must mention every variable exactly once");
    std::vector<bool> seen(vars_->size(), false);
    for (size_t i : ranking_) {
        if (i >= vars_->size() || seen[i])
            throw Error("order ranking must be a permutation of the variables");
        seen[i] = true;
    }
}

static std::vector<size_t> resolve(const VarSetPtr& vars, const std::vector<std::string>& names) {
    std::vector<size_t> idx;
    idx.reserve(names.size());
    for (const auto& n : names) {
        auto i = vars->index_of(n);
        if (!i) throw Error("unknown variable in ranking: " + n);
        idx.push_back(*i);
    }
    return idx;
}

MonomialOrder MonomialOrder::lex(const VarSetPtr& vars, const std::vector<std::string>& ranking) {
    return MonomialOrder(Kind::lex, vars, resolve(vars, ranking));
}

MonomialOrder MonomialOrder::block(const VarSetPtr& vars,
                                   const std::vector<std::string>& x_ranking,
                                   const std::vector<std::string>& y_ranking) {
    auto idx = resolve(vars, x_ranking);
    auto y = resolve(vars, y_ranking);
    idx.insert(idx.end(), y.begin(), y.end());
    return MonomialOrder(Kind::block_elimination, vars, std::move(idx), x_ranking.size());
}

MonomialOrder MonomialOrder::natural(const VarSetPtr& vars) {
    if (vars->same_as(*VariableSet::ring_r()))
        return lex(vars, {"v", "u", "t", "s", "x"});
    if (vars->same_as(*VariableSet::ring_s()))
        return lex(vars, {"u", "t", "s", "x"});
    if (vars->same_as(*VariableSet::ring_sy()))
        return block(vars, {"u", "t", "s", "x"}, {"y4", "y3", "y2", "y1"});
    if (vars->same_as(*VariableSet::ring_r_alpha()))
        return lex(vars, {"v", "u", "t", "s", "x", "alpha"});
    // fresh-variable extensions of a known ring keep its ranking and append
    // the new variable as least significant.
    if (vars->size() >= 1) {
        auto base_names = vars->names();
        std::string last = base_names.back();
        base_names.pop_back();
        for (const VarSetPtr& known :
             {VariableSet::ring_r(), VariableSet::ring_s(), VariableSet::ring_sy()}) {
            if (base_names == known->names()) {
                MonomialOrder base = natural(known);
                std::vector<std::string> ranked;
                for (size_t i : base.ranking()) ranked.push_back(known->name(i));
                ranked.push_back(last);
                if (base.kind() == Kind::block_elimination) {
                    std::vector<std::string> xr(ranked.begin(), ranked.begin() + base.block_size());
                    std::vector<std::string> yr(ranked.begin() + base.block_size(), ranked.end());
                    return block(vars, xr, yr);
                }
                return lex(vars, ranked);
            }
        }
    }
    // fallback: last storage variable most significant (matches the R/S
    // convention of "largest differing variable decides").
    std::vector<size_t> idx(vars->size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = vars->size() - 1 - i;
    return MonomialOrder(Kind::lex, vars, std::move(idx));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (size_t i : ranking_) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

bool MonomialOrder::in_low_block(const Monomial& m) const {
    for (size_t k = 0; k < block_; ++k)
        if (m.e[ranking_[k]] != 0) return false;
    return true;
}

bool MonomialOrder::operator==(const MonomialOrder& other) const {
    return kind_ == other.kind_ && ranking_ == other.ranking_ && block_ == other.block_ &&
           compatible(vars_, other.vars_);
}

} // namespace invar
