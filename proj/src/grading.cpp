#include "invar/grading.hpp"

#include <algorithm>

namespace invar {

WeightVector WeightVector::table(const VarSetPtr& vars,
                                 long wx, long ws, long wt, long wu, long wv) {
    WeightVector w;
    w.vars_ = vars;
    w.weights_.assign(vars->size(), std::nullopt);
    for (size_t i = 0; i < vars->size(); ++i) {
        const std::string& n = vars->name(i);
        if (n == "x") w.weights_[i] = wx;
        else if (n == "s") w.weights_[i] = ws;
        else if (n == "t") w.weights_[i] = wt;
        else if (n == "u") w.weights_[i] = wu;
        else if (n == "v") w.weights_[i] = wv;
    }
    return w;
}

WeightVector WeightVector::torus(const VarSetPtr& vars) {
    return table(vars, 1, 3, 3, 3, 2);
}

WeightVector WeightVector::rho(const VarSetPtr& vars) {
    return table(vars, 0, 1, 2, 3, 1);
}

long WeightVector::weight(const Monomial& m) const {
    long acc = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!weights_[i])
            throw Error("grading query on unweighted variable '" + vars_->name(i) + "'");
        acc += (long)m.e[i] * *weights_[i];
    }
    return acc;
}

long WeightVector::weight_of_var(size_t var) const {
    if (!weights_[var])
        throw Error("grading query on unweighted variable '" + vars_->name(var) + "'");
    return *weights_[var];
}

std::optional<long> weighted_degree(const Polynomial& p, const WeightVector& w) {
    if (p.is_zero()) return std::nullopt;
    long best = w.weight(p.terms()[0].mono);
    for (const Term& t : p.terms()) best = std::max(best, w.weight(t.mono));
    return best;
}

bool is_homogeneous(const Polynomial& p, const WeightVector& w) {
    if (p.is_zero()) return true;
    long first = w.weight(p.terms()[0].mono);
    for (const Term& t : p.terms())
        if (w.weight(t.mono) != first) return false;
    return true;
}

long torus_degree(const Polynomial& p) {
    auto d = weighted_degree(p, WeightVector::torus(p.vars()));
    if (!d) throw Error("degree of the zero polynomial");
    return *d;
}

long rho_degree(const Polynomial& p) {
    auto d = weighted_degree(p, WeightVector::rho(p.vars()));
    if (!d) throw Error("rho-degree of the zero polynomial");
    return *d;
}

bool is_bihomogeneous(const Polynomial& p) {
    return is_homogeneous(p, WeightVector::torus(p.vars())) &&
           is_homogeneous(p, WeightVector::rho(p.vars()));
}

static int named_degree(const Polynomial& p, const std::string& name) {
    auto i = p.vars()->index_of(name);
    if (!i) throw Error("ring has no variable '" + name + "'");
    return p.degree_in(*i);
}

int v_degree(const Polynomial& p) { return named_degree(p, "v"); }
int x_degree(const Polynomial& p) { return named_degree(p, "x"); }

std::optional<size_t> GradedSlice::index_of(const Monomial& m) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == m) return i;
    return std::nullopt;
}

Polynomial GradedSlice::element(const std::vector<Rational>& coords) const {
    if (coords.size() != basis.size()) throw Error("coordinate width mismatch");
    std::vector<Term> raw;
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) raw.push_back({coords[i], basis[i]});
    return Polynomial::from_terms(ring, std::move(raw));
}

std::vector<Rational> GradedSlice::coordinates(const Polynomial& p) const {
    std::vector<Rational> coords(basis.size(), Rational(0));
    for (const Term& t : p.terms()) {
        auto i = index_of(t.mono);
        if (!i) throw Error("polynomial does not lie in the slice");
        coords[*i] = t.coeff;
    }
    return coords;
}

GradedSlice slice_basis(long a, long k, const VarSetPtr& ring) {
    GradedSlice slice;
    slice.a = a;
    slice.k = k;
    slice.ring = ring;
    if (a < 0 || k < 0) return slice;
    WeightVector deg = WeightVector::torus(ring);
    WeightVector rho = WeightVector::rho(ring);
    size_t n = ring->size();
    for (size_t i = 0; i < n; ++i) {
        if (!deg.has_weight(i))
            throw Error("slice enumeration requires a fully weighted ring");
    }
    Monomial m(n);
    // depth-first over exponents in storage order; emits ascending
    // lexicographic exponent tuples.
    auto rec = [&](auto&& self, size_t i, long drem, long krem) -> void {
        if (i == n) {
            if (drem == 0 && krem == 0) slice.basis.push_back(m);
            return;
        }
        long dw = deg.weight_of_var(i);
        long rw = rho.weight_of_var(i);
        long emax = drem; // dw >= 1 except x? all torus weights >= 1
        if (dw > 0) emax = drem / dw;
        if (rw > 0) emax = std::min(emax, krem / rw);
        for (long e = 0; e <= emax; ++e) {
            m.e[i] = (int)e;
            self(self, i + 1, drem - e * dw, krem - e * rw);
        }
        m.e[i] = 0;
    };
    rec(rec, 0, a, k);
    return slice;
}

long count_kernel_monomials(long n) {
    if (n < 0) throw Error("negative index");
    const long deg = 3 * n + 9, rho = n + 3;
    long count = 0;
    for (long d = 0; 12 * d <= deg && 6 * d <= rho; ++d)
        for (long c = 0; 12 * d + 9 * c <= deg && 6 * d + 3 * c <= rho; ++c)
            for (long b = 0; 12 * d + 9 * c + 6 * b <= deg && 6 * d + 3 * c + 2 * b <= rho; ++b) {
                if (6 * d + 3 * c + 2 * b != rho) continue;
                // a is determined; any nonnegative value is admissible
                if (deg - (12 * d + 9 * c + 6 * b) >= 0) ++count;
            }
    return count;
}

} // namespace invar
