#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/grading.hpp"
#include "test_util.hpp"

using namespace invar;

static const VarSetPtr& R = VariableSet::ring_r();
static const VarSetPtr& S = VariableSet::ring_s();

TEST_CASE("weighted degrees of the named elements") {
    Polynomial g =
        parse_polynomial("9*x^6*u^2 - 18*x^3*s*t*u + 6*s^3*u + 8*x^3*t^3 - 3*s^2*t^2", S);
    CHECK(torus_degree(g) == 12);
    CHECK(rho_degree(g) == 6);
    CHECK(is_bihomogeneous(g));

    Polynomial gamma0 = parse_polynomial("2*x^3*t - s^2", S);
    CHECK(rho_degree(gamma0) == 2);
    CHECK(torus_degree(gamma0) == 6);

    Polynomial x = Polynomial::variable(S, "x");
    CHECK(torus_degree(x) == 1);
    CHECK(rho_degree(x) == 0);

    CHECK(!weighted_degree(Polynomial::zero(S), WeightVector::torus(S)).has_value());
}

TEST_CASE("homogeneity predicate") {
    WeightVector w = WeightVector::torus(S);
    CHECK(is_homogeneous(parse_polynomial("2*x^3*t - s^2", S), w));
    CHECK(is_bihomogeneous(parse_polynomial("2*x^3*t - s^2", S)));
    CHECK(!is_homogeneous(parse_polynomial("x + s", S), w));
    CHECK(is_homogeneous(Polynomial::zero(S), w));
}

TEST_CASE("grading queries reject unweighted variables") {
    const VarSetPtr& ra = VariableSet::ring_r_alpha();
    Polynomial with_alpha = parse_polynomial("alpha*x + s", ra);
    CHECK_THROWS_AS(weighted_degree(with_alpha, WeightVector::torus(ra)), Error);
    // alpha-free polynomials over the extended ring still grade fine
    CHECK(*weighted_degree(parse_polynomial("x^2", ra), WeightVector::torus(ra)) == 2);
}

TEST_CASE("v-degree and x-degree") {
    CHECK(v_degree(parse_polynomial("x*v - s", R)) == 1);
    Polynomial g =
        parse_polynomial("9*x^6*u^2 - 18*x^3*s*t*u + 6*s^3*u + 8*x^3*t^3 - 3*s^2*t^2", S);
    CHECK(x_degree(g) == 6);
    CHECK(v_degree(parse_polynomial("2*x^3*t - s^2", R)) == 0);
    CHECK_THROWS_AS(v_degree(Polynomial::zero(R)), Error);
}

TEST_CASE("slice bases") {
    GradedSlice s10 = slice_basis(1, 0, S);
    REQUIRE(s10.basis.size() == 1);
    CHECK(Polynomial::from_term(S, 1, s10.basis[0]) == Polynomial::variable(S, "x"));

    GradedSlice s62 = slice_basis(6, 2, S);
    REQUIRE(s62.basis.size() == 2);
    // the support of gamma0, in ascending exponent-tuple order
    CHECK(Polynomial::from_term(S, 1, s62.basis[0]) == parse_polynomial("s^2", S));
    CHECK(Polynomial::from_term(S, 1, s62.basis[1]) == parse_polynomial("x^3*t", S));

    CHECK(slice_basis(0, 1, S).basis.empty());
    CHECK(slice_basis(0, 0, S).basis.size() == 1); // the constant monomial
}

TEST_CASE("slice bases agree with a brute-force enumerator") {
    WeightVector deg = WeightVector::torus(S), rho = WeightVector::rho(S);
    for (long a = 0; a <= 12; ++a) {
        for (long k = 0; k <= a; ++k) {
            GradedSlice sl = slice_basis(a, k, S);
            // oracle: scan the full exponent box
            size_t count = 0;
            for (int ex = 0; ex <= a; ++ex)
                for (int es = 0; 3 * es <= a; ++es)
                    for (int et = 0; 3 * et <= a; ++et)
                        for (int eu = 0; 3 * eu <= a; ++eu) {
                            Monomial m(S->size());
                            m.e[0] = ex, m.e[1] = es, m.e[2] = et, m.e[3] = eu;
                            if (deg.weight(m) == a && rho.weight(m) == k) ++count;
                        }
            CHECK(sl.basis.size() == count);
            for (const Monomial& m : sl.basis) {
                CHECK(deg.weight(m) == a);
                CHECK(rho.weight(m) == k);
            }
        }
    }
}

TEST_CASE("kernel monomial counting matches the closed forms") {
    // oracle: direct enumeration of the two linear equations
    auto brute = [](long n) {
        long count = 0;
        for (long a = 0; a <= 3 * n + 9; ++a)
            for (long b = 0; 6 * b <= 3 * n + 9; ++b)
                for (long c = 0; 9 * c <= 3 * n + 9; ++c)
                    for (long d = 0; 12 * d <= 3 * n + 9; ++d)
                        if (a + 6 * b + 9 * c + 12 * d == 3 * n + 9 &&
                            2 * b + 3 * c + 6 * d == n + 3)
                            ++count;
        return count;
    };
    CHECK(count_kernel_monomials(0) == 1);
    CHECK(count_kernel_monomials(3) == 3);
    CHECK(count_kernel_monomials(5) == 3);
    for (long n = 0; n <= 40; ++n) {
        long k = n / 6, i = n % 6;
        long expected =
            (i == 3 || i == 5) ? (k + 2) * (k + 3) / 2 : (k + 1) * (k + 2) / 2;
        CHECK(count_kernel_monomials(n) == expected);
        CHECK(count_kernel_monomials(n) == brute(n));
    }
}

TEST_CASE("property: multiplicativity of the weighted degree on homogeneous input") {
    std::mt19937 rng(99);
    WeightVector deg = WeightVector::torus(S), rho = WeightVector::rho(S);
    int done = 0;
    while (done < 200) {
        long a1 = (long)(rng() % 8), k1 = (long)(rng() % 6);
        long a2 = (long)(rng() % 8), k2 = (long)(rng() % 6);
        GradedSlice s1 = slice_basis(a1, k1, S), s2 = slice_basis(a2, k2, S);
        if (s1.basis.empty() || s2.basis.empty()) continue;
        std::vector<Rational> c1, c2;
        for (size_t i = 0; i < s1.basis.size(); ++i) c1.push_back(testutil::random_coeff(rng));
        for (size_t i = 0; i < s2.basis.size(); ++i) c2.push_back(testutil::random_coeff(rng));
        Polynomial p = s1.element(c1), q = s2.element(c2);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK(*weighted_degree(p * q, deg) == a1 + a2);
        CHECK(*weighted_degree(p * q, rho) == k1 + k2);
        ++done;
    }
}

TEST_CASE("slice enumeration requires a weighted ring") {
    CHECK_THROWS_AS(slice_basis(2, 1, VariableSet::ring_r_alpha()), Error);
    CHECK_THROWS_AS(count_kernel_monomials(-1), Error);
}
