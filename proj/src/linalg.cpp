#include "invar/linalg.hpp"

#include <algorithm>

namespace invar {

static std::vector<std::vector<Integer>> integerize(const QMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.nrows, std::vector<Integer>(m.ncols));
    for (size_t i = 0; i < m.nrows; ++i) {
        Integer scale(1);
        for (size_t j = 0; j < m.ncols; ++j) {
            const Integer& den = m.at(i, j).get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
            scale = scale / g * den;
        }
        for (size_t j = 0; j < m.ncols; ++j) {
            const Rational& q = m.at(i, j);
            rows[i][j] = q.get_num() * (scale / q.get_den());
        }
    }
    return rows;
}

Echelon fraction_free_echelon(const QMatrix& m, Exec mode) {
    Echelon ech;
    ech.rows = integerize(m);
    Integer prev(1);
    size_t r = 0;
    for (size_t c = 0; c < m.ncols && r < m.nrows; ++c) {
        size_t p = r;
        while (p < m.nrows && ech.rows[p][c] == 0) ++p;
        if (p == m.nrows) continue;
        if (p != r) std::swap(ech.rows[p], ech.rows[r]);
        const std::vector<Integer>& pivot_row = ech.rows[r];
        const Integer& piv = pivot_row[c];
        par_for(m.nrows - r - 1, mode, [&](size_t k) {
            std::vector<Integer>& row = ech.rows[r + 1 + k];
            if (row[c] == 0) {
                // entries still need the Bareiss rescale to stay exact minors
                for (size_t j = c + 1; j < m.ncols; ++j) {
                    row[j] *= piv;
                    mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
                }
                return;
            }
            Integer factor = row[c];
            row[c] = 0;
            for (size_t j = c + 1; j < m.ncols; ++j) {
                row[j] = piv * row[j] - factor * pivot_row[j];
                mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
            }
        });
        prev = piv;
        ech.pivot_cols.push_back(c);
        ++r;
    }
    ech.rank = r;
    return ech;
}

size_t rank(const QMatrix& m, Exec mode) { return fraction_free_echelon(m, mode).rank; }

static void primitivize(std::vector<Rational>& v) {
    Integer den_lcm(1), num_gcd(0);
    for (const Rational& q : v) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        den_lcm = den_lcm / g * q.get_den();
    }
    for (Rational& q : v) q *= den_lcm;
    for (const Rational& q : v)
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    if (num_gcd == 0) return;
    for (Rational& q : v) q /= num_gcd;
    for (const Rational& q : v) {
        if (q == 0) continue;
        if (q < 0)
            for (Rational& w : v) w = -w;
        break;
    }
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m, Exec mode) {
    Echelon ech = fraction_free_echelon(m, mode);
    std::vector<bool> is_pivot(m.ncols, false);
    for (size_t c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < m.ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.ncols, Rational(0));
        v[f] = 1;
        for (size_t k = ech.rank; k-- > 0;) {
            size_t c = ech.pivot_cols[k];
            Rational acc(0);
            for (size_t j = c + 1; j < m.ncols; ++j)
                if (ech.rows[k][j] != 0 && v[j] != 0) acc += Rational(ech.rows[k][j]) * v[j];
            v[c] = -acc / Rational(ech.rows[k][c]);
        }
        primitivize(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& rhs,
                                           Exec mode) {
    if (rhs.size() != a.nrows) throw Error("rhs length mismatch");
    QMatrix aug(a.nrows, a.ncols + 1);
    for (size_t i = 0; i < a.nrows; ++i) {
        for (size_t j = 0; j < a.ncols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.ncols) = rhs[i];
    }
    Echelon ech = fraction_free_echelon(aug, mode);
    // pivots in the rhs column mean an inconsistent row
    for (size_t k = 0; k < ech.pivot_cols.size(); ++k)
        if (ech.pivot_cols[k] == a.ncols) return std::nullopt;
    std::vector<Rational> v(a.ncols, Rational(0));
    for (size_t k = ech.pivot_cols.size(); k-- > 0;) {
        size_t c = ech.pivot_cols[k];
        Rational acc = Rational(ech.rows[k][a.ncols]);
        for (size_t j = c + 1; j < a.ncols; ++j)
            if (ech.rows[k][j] != 0 && v[j] != 0) acc -= Rational(ech.rows[k][j]) * v[j];
        v[c] = acc / Rational(ech.rows[k][c]);
    }
    return v;
}

Rational determinant(const QMatrix& m) {
    if (m.nrows != m.ncols) throw Error("determinant of a non-square matrix");
    QMatrix w = m;
    Rational det(1);
    for (size_t c = 0; c < w.ncols; ++c) {
        size_t p = c;
        while (p < w.nrows && w.at(p, c) == 0) ++p;
        if (p == w.nrows) return Rational(0);
        if (p != c) {
            for (size_t j = 0; j < w.ncols; ++j) std::swap(w.at(p, j), w.at(c, j));
            det = -det;
        }
        det *= w.at(c, c);
        for (size_t i = c + 1; i < w.nrows; ++i) {
            if (w.at(i, c) == 0) continue;
            Rational f = w.at(i, c) / w.at(c, c);
            for (size_t j = c; j < w.ncols; ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    return det;
}

RrefResult rref(const QMatrix& m) {
    RrefResult r;
    r.rows.assign(m.nrows, std::vector<Rational>(m.ncols, Rational(0)));
    for (size_t i = 0; i < m.nrows; ++i)
        for (size_t j = 0; j < m.ncols; ++j) r.rows[i][j] = m.at(i, j);
    size_t row = 0;
    for (size_t c = 0; c < m.ncols && row < m.nrows; ++c) {
        size_t p = row;
        while (p < m.nrows && r.rows[p][c] == 0) ++p;
        if (p == m.nrows) continue;
        std::swap(r.rows[p], r.rows[row]);
        Rational piv = r.rows[row][c];
        for (size_t j = c; j < m.ncols; ++j) r.rows[row][j] /= piv;
        for (size_t i = 0; i < m.nrows; ++i) {
            if (i == row || r.rows[i][c] == 0) continue;
            Rational f = r.rows[i][c];
            for (size_t j = c; j < m.ncols; ++j) r.rows[i][j] -= f * r.rows[row][j];
        }
        r.pivot_cols.push_back(c);
        ++row;
    }
    r.rank = row;
    return r;
}

} // namespace invar
