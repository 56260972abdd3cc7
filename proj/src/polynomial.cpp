#include "invar/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace invar {

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int Monomial::total_degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) {
        r.e[i] -= m.e[i];
        if (r.e[i] < 0) throw Error("monomial division is not exact");
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && m.e[i] > 0) return false;
    return true;
}

namespace {

std::vector<size_t> storage_ranking(const VarSetPtr& vars) {
    return MonomialOrder::natural(vars).ranking();
}

int compare_ranked(const Monomial& a, const Monomial& b, const std::vector<size_t>& ranking) {
    for (size_t i : ranking)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

} // namespace

void Polynomial::normalize(std::vector<Term>&& raw) {
    auto ranking = storage_ranking(vars_);
    std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) {
        return compare_ranked(a.mono, b.mono, ranking) > 0;
    });
    terms_.clear();
    terms_.reserve(raw.size());
    for (auto& t : raw) {
        if (t.coeff == 0) continue;
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff == 0) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

Polynomial Polynomial::constant(VarSetPtr vars, Rational c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.push_back({std::move(c), Monomial(p.vars_->size())});
    return p;
}

Polynomial Polynomial::variable(const VarSetPtr& vars, size_t index, int power) {
    if (index >= vars->size()) throw Error("variable index out of range");
    if (power < 0) throw Error("negative exponent");
    Polynomial p(vars);
    Monomial m(vars->size());
    m.e[index] = power;
    p.terms_.push_back({Rational(1), std::move(m)});
    return p;
}

Polynomial Polynomial::variable(const VarSetPtr& vars, const std::string& name, int power) {
    auto i = vars->index_of(name);
    if (!i) throw Error("unknown variable: " + name);
    return variable(vars, *i, power);
}

Polynomial Polynomial::from_term(VarSetPtr vars, Rational c, Monomial m) {
    if (m.size() != vars->size()) throw Error("monomial width mismatch");
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.push_back({std::move(c), std::move(m)});
    return p;
}

Polynomial Polynomial::from_terms(VarSetPtr vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    for (const Term& t : terms)
        if (t.mono.size() != p.vars_->size()) throw Error("monomial width mismatch");
    p.normalize(std::move(terms));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

static void require_same_ring(const Polynomial& p, const Polynomial& q) {
    if (!compatible(p.vars(), q.vars()))
        throw Error("mismatched variable sets");
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    require_same_ring(*this, q);
    auto ranking = storage_ranking(vars_);
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < q.terms_.size()) {
        int c;
        if (i == terms_.size()) c = -1;
        else if (j == q.terms_.size()) c = 1;
        else c = compare_ranked(terms_[i].mono, q.terms_[j].mono, ranking);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            Rational sum = terms_[i].coeff + q.terms_[j].coeff;
            if (sum != 0) r.terms_.push_back({std::move(sum), terms_[i].mono});
            ++i, ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({-t.coeff, t.mono});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::operator*(const Polynomial& q) const {
    require_same_ring(*this, q);
    Polynomial r(vars_);
    if (is_zero() || q.is_zero()) return r;
    std::vector<Term> raw;
    raw.reserve(terms_.size() * q.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : q.terms_)
            raw.push_back({a.coeff * b.coeff, a.mono * b.mono});
    r.normalize(std::move(raw));
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.coeff * c, t.mono});
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = one(vars_);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& q) const {
    if (!compatible(vars_, q.vars_)) return false;
    if (terms_.size() != q.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != q.terms_[i].mono || terms_[i].coeff != q.terms_[i].coeff)
            return false;
    return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (is_zero()) throw Error("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (size_t i = 1; i < terms_.size(); ++i)
        if (order.compare(terms_[i].mono, best->mono) > 0) best = &terms_[i];
    return *best;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).mono;
}

Polynomial Polynomial::partial_derivative(size_t var) const {
    if (var >= vars_->size()) throw Error("variable index out of range");
    std::vector<Term> raw;
    for (const Term& t : terms_) {
        int e = t.mono.e[var];
        if (e == 0) continue;
        Term d{t.coeff * e, t.mono};
        d.mono.e[var] = e - 1;
        raw.push_back(std::move(d));
    }
    Polynomial r(vars_);
    r.normalize(std::move(raw));
    return r;
}

Polynomial Polynomial::partial_derivative(const std::string& var) const {
    auto i = vars_->index_of(var);
    if (!i) throw Error("unknown variable: " + var);
    return partial_derivative(*i);
}

Polynomial Polynomial::substitute(const std::map<size_t, Polynomial>& bindings) const {
    for (const auto& [idx, val] : bindings) {
        if (idx >= vars_->size()) throw Error("binding index out of range");
        require_same_ring(*this, val);
    }
    // power cache per substituted variable
    std::map<size_t, std::vector<Polynomial>> powers;
    auto power_of = [&](size_t var, int e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(one(vars_));
        while ((int)cache.size() <= e) cache.push_back(cache.back() * bindings.at(var));
        return cache[e];
    };
    Polynomial acc = zero(vars_);
    for (const Term& t : terms_) {
        Monomial rest = t.mono;
        Polynomial factor = constant(vars_, t.coeff);
        for (const auto& [idx, val] : bindings) {
            int e = rest.e[idx];
            if (e == 0) continue;
            rest.e[idx] = 0;
            factor = factor * power_of(idx, e);
        }
        acc = acc + factor * from_term(vars_, 1, rest);
    }
    return acc;
}

int Polynomial::degree_in(size_t var) const {
    if (is_zero()) throw Error("degree of the zero polynomial");
    if (var >= vars_->size()) throw Error("variable index out of range");
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.e[var]);
    return d;
}

Polynomial Polynomial::coefficient_of(size_t var, int power) const {
    if (var >= vars_->size()) throw Error("variable index out of range");
    std::vector<Term> raw;
    for (const Term& t : terms_) {
        if (t.mono.e[var] != power) continue;
        Term c{t.coeff, t.mono};
        c.mono.e[var] = 0;
        raw.push_back(std::move(c));
    }
    Polynomial r(vars_);
    r.normalize(std::move(raw));
    return r;
}

Polynomial Polynomial::reindex(const VarSetPtr& target) const {
    std::vector<std::optional<size_t>> map(vars_->size());
    for (size_t i = 0; i < vars_->size(); ++i)
        map[i] = target->index_of(vars_->name(i));
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term nt{t.coeff, Monomial(target->size())};
        for (size_t i = 0; i < vars_->size(); ++i) {
            if (t.mono.e[i] == 0) continue;
            if (!map[i])
                throw Error("variable '" + vars_->name(i) + "' not present in target ring");
            nt.mono.e[*map[i]] = t.mono.e[i];
        }
        raw.push_back(std::move(nt));
    }
    Polynomial r(target);
    r.normalize(std::move(raw));
    return r;
}

int Polynomial::max_total_degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

static void print_term_magnitude(std::ostream& os, const Term& t, const VariableSet& vars) {
    Rational a = abs(t.coeff);
    bool printed = false;
    if (a != 1 || t.mono.is_one()) {
        os << a.get_str();
        printed = true;
    }
    for (size_t i = 0; i < vars.size(); ++i) {
        int e = t.mono.e[i];
        if (e == 0) continue;
        if (printed) os << "*";
        os << vars.name(i);
        if (e > 1) os << "^" << e;
        printed = true;
    }
}

std::string Polynomial::to_string() const {
    return to_string(MonomialOrder::natural(vars_));
}

std::string Polynomial::to_string(const MonomialOrder& order) const {
    if (is_zero()) return "0";
    std::vector<const Term*> sorted;
    sorted.reserve(terms_.size());
    for (const Term& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) {
        return order.compare(a->mono, b->mono) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : sorted) {
        if (first) {
            if (t->coeff < 0) os << "-";
            first = false;
        } else {
            os << (t->coeff < 0 ? " - " : " + ");
        }
        print_term_magnitude(os, *t, *vars_);
    }
    return os.str();
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& divisor) {
    if (divisor.is_zero()) throw Error("division by zero polynomial");
    if (!compatible(p.vars(), divisor.vars())) throw Error("mismatched variable sets");
    MonomialOrder order = MonomialOrder::natural(p.vars());
    Polynomial rem = p;
    Polynomial quot = Polynomial::zero(p.vars());
    const Term& dlt = divisor.leading_term(order);
    while (!rem.is_zero()) {
        const Term& rlt = rem.leading_term(order);
        if (!dlt.mono.divides(rlt.mono))
            throw Error("exact division failed: remainder is nonzero");
        Polynomial q = Polynomial::from_term(p.vars(), rlt.coeff / dlt.coeff, rlt.mono / dlt.mono);
        quot = quot + q;
        rem = rem - q * divisor;
    }
    return quot;
}

} // namespace invar
