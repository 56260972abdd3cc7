#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/linalg.hpp"

#include <random>

using namespace invar;

static QMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < m.nrows; ++i)
        for (size_t j = 0; j < m.ncols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

TEST_CASE("rank and pivots") {
    QMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(rank(m) == 2);
    CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(rank(QMatrix(0, 3)) == 0);
}

TEST_CASE("nullspace vectors are primitive kernel elements") {
    QMatrix m = from_rows({{2, 1}}); // kernel spanned by (1, -2)
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == 1);
    CHECK(ns[0][1] == -2);

    QMatrix m2 = from_rows({{1, 2, 3}, {2, 4, 6}});
    auto ns2 = nullspace(m2);
    REQUIRE(ns2.size() == 2);
    for (const auto& v : ns2) {
        Rational acc0(0), acc1(0);
        for (size_t j = 0; j < 3; ++j) {
            acc0 += m2.at(0, j) * v[j];
            acc1 += m2.at(1, j) * v[j];
        }
        CHECK(acc0 == 0);
        CHECK(acc1 == 0);
    }
}

TEST_CASE("solve with free variables pinned to zero") {
    QMatrix m = from_rows({{1, 1, 0}, {0, 0, 1}});
    auto sol = solve(m, {Rational(3), Rational(5)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 3);
    CHECK((*sol)[1] == 0); // free
    CHECK((*sol)[2] == 5);

    auto none = solve(from_rows({{1, 1}, {1, 1}}), {Rational(1), Rational(2)});
    CHECK(!none.has_value());
}

TEST_CASE("determinant") {
    CHECK(determinant(from_rows({{1, 1}, {0, 2}})) == 2);
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
    QMatrix q(2, 2);
    q.at(0, 0) = Rational(1, 2);
    q.at(1, 1) = Rational(1, 3);
    CHECK(determinant(q) == Rational(1, 6));
}

TEST_CASE("property: fraction-free route agrees with the rational rref route") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, 8), entry(-6, 6), denom(1, 4);
    for (int iter = 0; iter < 200; ++iter) {
        size_t r = (size_t)dim(rng), c = (size_t)dim(rng);
        QMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) {
                Rational q(entry(rng), denom(rng));
                q.canonicalize();
                m.at(i, j) = q;
            }
        RrefResult rr = rref(m);
        CHECK(rank(m, Exec::serial) == rr.rank);
        auto ns = nullspace(m, Exec::serial);
        CHECK(ns.size() == c - rr.rank);
        for (const auto& v : ns) {
            for (size_t i = 0; i < r; ++i) {
                Rational acc(0);
                for (size_t j = 0; j < c; ++j) acc += m.at(i, j) * v[j];
                CHECK(acc == 0);
            }
        }
        // solve consistency: A * solution = rhs whenever reported solvable
        std::vector<Rational> rhs(r);
        for (size_t i = 0; i < r; ++i) rhs[i] = entry(rng);
        auto sol = solve(m, rhs, Exec::serial);
        if (sol) {
            for (size_t i = 0; i < r; ++i) {
                Rational acc(0);
                for (size_t j = 0; j < c; ++j) acc += m.at(i, j) * (*sol)[j];
                CHECK(acc == rhs[i]);
            }
        } else {
            // rref of the augmented system must show a pivot in the rhs column
            QMatrix aug(r, c + 1);
            for (size_t i = 0; i < r; ++i) {
                for (size_t j = 0; j < c; ++j) aug.at(i, j) = m.at(i, j);
                aug.at(i, c) = rhs[i];
            }
            CHECK(rref(aug).rank == rr.rank + 1);
        }
    }
}
