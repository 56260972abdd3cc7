#pragma once

#include "invar/varset.hpp"

#include <vector>

namespace invar {

struct Monomial;

// Monomial orders used throughout.
//
// All orders here are lexicographic on a declared significance ranking
// (most significant variable first). Beware the classic lex-direction
// confusion: the order on K[x,s,t,u,v] compares exponents of the *largest*
// differing variable in the sequence (x,s,t,u,v), i.e. v dominates, then u,
// t, s, x. As a ranking read from the most significant variable down this
// is v > u > t > s > x. Example: tv > v (t-exponents 1 vs 0 decide). The
// order on K[x,s,t,u] is lex with x < s < t < u, ranking u > t > s > x.
//
// The block (elimination) kind additionally records how many leading
// ranking entries form the dominating X-block; since lex on the combined
// ranking already realises x_i >> y_j, comparison is identical, but the
// block structure is what elimination queries ("lies in K[Y]") consult.
class MonomialOrder {
public:
    enum class Kind { lex, block_elimination };

    MonomialOrder() = default;
    MonomialOrder(Kind kind, VarSetPtr vars, std::vector<size_t> ranking,
                  size_t block = 0);

    // lex with explicit ranking given as variable names, most significant first.
    static MonomialOrder lex(const VarSetPtr& vars, const std::vector<std::string>& ranking);
    // two-block elimination order; every X-block variable dominates every
    // power product of Y-block variables.
    static MonomialOrder block(const VarSetPtr& vars,
                               const std::vector<std::string>& x_ranking,
                               const std::vector<std::string>& y_ranking);
    // the natural order of a known ring (see the class comment).
    static MonomialOrder natural(const VarSetPtr& vars);

    Kind kind() const { return kind_; }
    const VarSetPtr& vars() const { return vars_; }
    const std::vector<size_t>& ranking() const { return ranking_; }
    size_t block_size() const { return block_; }

    // <0, 0, >0 as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // true iff the monomial has zero exponent on every X-block variable.
    bool in_low_block(const Monomial& m) const;

    bool operator==(const MonomialOrder& other) const;

private:
    Kind kind_ = Kind::lex;
    VarSetPtr vars_;
    std::vector<size_t> ranking_; // variable indices, most significant first
    size_t block_ = 0;            // number of leading ranking entries in the X-block
};

} // namespace invar
