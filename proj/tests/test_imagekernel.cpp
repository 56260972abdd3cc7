#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/imagekernel.hpp"

using namespace invar;

static const VarSetPtr& R = VariableSet::ring_r();
static const VarSetPtr& S = VariableSet::ring_s();

static Polynomial g_poly() {
    return parse_polynomial("9*x^6*u^2 - 18*x^3*s*t*u + 6*s^3*u + 8*x^3*t^3 - 3*s^2*t^2", S);
}

TEST_CASE("slice maps of Delta") {
    const Derivation& delta = Derivation::Delta();

    SliceMap m31 = slice_map(3, 1, delta);
    REQUIRE(m31.domain.basis.size() == 1); // {s}
    REQUIRE(m31.codomain.basis.size() == 1); // {x^3}
    CHECK(m31.matrix.at(0, 0) == 1);

    SliceMap m10 = slice_map(1, 0, delta);
    REQUIRE(m10.domain.basis.size() == 1); // {x}
    CHECK(m10.codomain.basis.empty());     // nothing of rho-degree -1

    SliceMap m62 = slice_map(6, 2, delta);
    REQUIRE(m62.domain.basis.size() == 2);  // {s^2, x^3 t}
    REQUIRE(m62.codomain.basis.size() == 1); // {x^3 s}
    CHECK(m62.matrix.at(0, 0) == 2);
    CHECK(m62.matrix.at(0, 1) == 1);
}

TEST_CASE("slice kernels") {
    const Derivation& delta = Derivation::Delta();
    auto k62 = kernel_slice(6, 2, delta);
    REQUIRE(k62.size() == 1);
    CHECK(k62[0] == parse_polynomial("2*x^3*t - s^2", S));

    auto k166 = kernel_slice(16, 6, delta);
    REQUIRE(k166.size() == 1);
    CHECK(k166[0] == Polynomial::variable(S, "x", 4) * g_poly());

    CHECK(kernel_slice(0, 1, delta).empty());
}

TEST_CASE("preimages inside a slice") {
    const Derivation& delta = Derivation::Delta();
    auto pre_x3 = preimage_in_slice(parse_polynomial("x^3", S), delta);
    REQUIRE(pre_x3.has_value());
    CHECK(*pre_x3 == Polynomial::variable(S, "s"));

    auto pre_gamma0 = preimage_in_slice(parse_polynomial("2*x^3*t - s^2", S), delta);
    REQUIRE(pre_gamma0.has_value());
    CHECK(*pre_gamma0 == parse_polynomial("3*x^3*u - s*t", S));
    CHECK(delta.apply(*pre_gamma0) == parse_polynomial("2*x^3*t - s^2", S));

    // x^2 g generates the obstruction: no preimage anywhere
    auto none = preimage_in_slice(Polynomial::variable(S, "x", 2) * g_poly(), delta);
    CHECK(!none.has_value());

    auto zero = preimage_in_slice(Polynomial::zero(S), delta);
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());

    CHECK_THROWS_AS(preimage_in_slice(parse_polynomial("x + s", S), delta), Error);
}

TEST_CASE("image membership: members with validated preimages") {
    const Derivation& delta = Derivation::Delta();

    ImageMembershipResult x3 = image_membership(parse_polynomial("x^3", S));
    CHECK(x3.member);
    CHECK(x3.m == 0);
    REQUIRE(x3.preimage.has_value());
    CHECK(*x3.preimage == Polynomial::variable(S, "s"));

    Polynomial x2 = Polynomial::variable(S, "x", 2);
    for (const char* text : {"2*x^3*t - s^2", "3*x^6*u - 3*x^3*s*t + s^3"}) {
        Polynomial a = x2 * parse_polynomial(text, S);
        ImageMembershipResult res = image_membership(a);
        CHECK(res.member);
        REQUIRE(res.preimage.has_value());
        CHECK(delta.apply(*res.preimage) == a);
    }

    // a query with a positive nilpotency index: 2st = Delta(t^2)
    Polynomial a = parse_polynomial("2*s*t", S);
    ImageMembershipResult res = image_membership(a);
    CHECK(res.m == 3);
    CHECK(res.member);
    REQUIRE(res.preimage.has_value());
    CHECK(delta.apply(*res.preimage) == a);
}

TEST_CASE("image membership: the obstruction family") {
    const VarSetPtr& sy = VariableSet::ring_sy();
    Polynomial x2 = Polynomial::variable(S, "x", 2);
    for (unsigned k = 0; k <= 4; ++k) {
        ImageMembershipResult res = image_membership(x2 * g_poly().pow(k));
        CHECK(!res.member);
        CHECK(res.m == 0);
        Polynomial want = parse_polynomial("y1^2*s", sy) *
                          Polynomial::variable(sy, "y4").pow(k);
        CHECK(res.q_tilde == want);
    }
    // x itself is not in the image
    ImageMembershipResult x = image_membership(Polynomial::variable(S, "x"));
    CHECK(!x.member);

    // a non-slice local element is rejected
    CHECK_THROWS_AS(image_membership(parse_polynomial("s*t", S),
                                     Polynomial::variable(S, "x"),
                                     delta_kernel_generators()),
                    Error);
    CHECK_THROWS_AS(image_membership(parse_polynomial("s*t", S),
                                     Polynomial::variable(S, "u"),
                                     delta_kernel_generators()),
                    Error);
}

TEST_CASE("truncation dimensions") {
    // the truncated spaces agree and have dimension k+1 at every residue
    // ("in all cases there are exactly k+1 solutions"); the un-truncated
    // kernel itself is larger at the residues 3 and 5 mod 6, where the
    // generator relation leaves k+2 independent elements.
    const Derivation& delta = Derivation::Delta();
    for (long n = 0; n <= 24; ++n) {
        TruncationSpaces ts = truncation_dims(n);
        CHECK(ts.dim_piM == ts.dim_piN);
        long k = n / 6, i = n % 6;
        CHECK(ts.dim_piN == (size_t)(k + 1));
        size_t kernel_dim = kernel_slice(3 * n + 9, n + 3, delta).size();
        CHECK(kernel_dim == (size_t)((i == 3 || i == 5) ? k + 2 : k + 1));
        CHECK(ts.dim_piN <= kernel_dim);
    }
    CHECK(truncation_dims(0).dim_piN == 1);
}

TEST_CASE("binomial determinants") {
    CHECK(binomial_determinant(0) == 1);
    CHECK(binomial_determinant(1) == 2); // det [[1,1],[0,2]]
    for (int k = 0; k <= 8; ++k) CHECK(binomial_determinant(k) != 0);

    // oracle: Laplace expansion on the small cases
    struct Laplace {
        static Rational det(const std::vector<std::vector<Rational>>& m) {
            size_t n = m.size();
            if (n == 1) return m[0][0];
            Rational acc(0);
            for (size_t j = 0; j < n; ++j) {
                if (m[0][j] == 0) continue;
                std::vector<std::vector<Rational>> minor;
                for (size_t i = 1; i < n; ++i) {
                    std::vector<Rational> row;
                    for (size_t c = 0; c < n; ++c)
                        if (c != j) row.push_back(m[i][c]);
                    minor.push_back(std::move(row));
                }
                Rational term = m[0][j] * det(minor);
                acc += (j % 2 == 0) ? term : -term;
            }
            return acc;
        }
    };
    for (int k = 0; k <= 5; ++k) {
        std::vector<std::vector<Rational>> m((size_t)k + 1,
                                             std::vector<Rational>((size_t)k + 1));
        for (int i = 0; i <= k; ++i)
            for (int p = 0; p <= k; ++p) m[(size_t)i][(size_t)p] = Rational(binomial(2 * p, i));
        CHECK(binomial_determinant(k) == Laplace::det(m));
    }
}

// oracle: all products of the four kernel generators at one bidegree
static std::vector<Polynomial> generator_products(long a, long k) {
    struct Gen {
        Polynomial p;
        long deg, rho;
    };
    std::vector<Gen> gens = {{Polynomial::variable(S, "x"), 1, 0},
                             {parse_polynomial("2*x^3*t - s^2", S), 6, 2},
                             {parse_polynomial("3*x^6*u - 3*x^3*s*t + s^3", S), 9, 3},
                             {g_poly(), 12, 6}};
    std::vector<Polynomial> out;
    auto rec = [&](auto&& self, size_t i, long da, long dk, Polynomial acc) -> void {
        if (da == 0 && dk == 0) {
            out.push_back(acc);
            return;
        }
        if (i == gens.size() || da < 0 || dk < 0) return;
        self(self, i + 1, da, dk, acc);
        long ca = da, ck = dk;
        Polynomial cur = acc;
        while (ca - gens[i].deg >= 0 && ck - gens[i].rho >= 0) {
            ca -= gens[i].deg;
            ck -= gens[i].rho;
            cur = cur * gens[i].p;
            if (ca == 0 && ck == 0) out.push_back(cur);
            else self(self, i + 1, ca, ck, cur);
        }
    };
    rec(rec, 0, a, k, Polynomial::one(S));
    return out;
}

TEST_CASE("slice kernels equal the span of generator products through degree 36") {
    const Derivation& delta = Derivation::Delta();
    for (long a = 0; a <= 36; ++a) {
        for (long k = 0; k <= a; ++k) {
            GradedSlice slice = slice_basis(a, k, S);
            if (slice.basis.empty()) continue;
            std::vector<Polynomial> kernel = kernel_slice(a, k, delta);
            std::vector<Polynomial> products = generator_products(a, k);
            QMatrix pm(products.size(), slice.basis.size());
            for (size_t i = 0; i < products.size(); ++i) {
                auto coords = slice.coordinates(products[i]);
                for (size_t j = 0; j < coords.size(); ++j) pm.at(i, j) = coords[j];
            }
            size_t span_rank = products.empty() ? 0 : rank(pm);
            CHECK(span_rank == kernel.size());
            // and the kernel lies inside the product span
            QMatrix both(products.size() + kernel.size(), slice.basis.size());
            for (size_t i = 0; i < products.size(); ++i)
                for (size_t j = 0; j < slice.basis.size(); ++j)
                    both.at(i, j) = pm.at(i, j);
            for (size_t i = 0; i < kernel.size(); ++i) {
                auto coords = slice.coordinates(kernel[i]);
                for (size_t j = 0; j < coords.size(); ++j)
                    both.at(products.size() + i, j) = coords[j];
            }
            if (!kernel.empty()) CHECK(rank(both) == span_rank);
        }
    }
}

TEST_CASE("the three kernel-slice tables") {
    const Derivation& delta = Derivation::Delta();
    Polynomial gamma0 = parse_polynomial("2*x^3*t - s^2", S);
    Polynomial delta0 = parse_polynomial("3*x^6*u - 3*x^3*s*t + s^3", S);
    Polynomial g = g_poly();
    auto xp = [&](int e) { return Polynomial::variable(S, "x", e); };

    auto check_table = [&](long a, long k, std::vector<Polynomial> expected,
                           const std::string& who) {
        INFO(who);
        std::vector<Polynomial> kernel = kernel_slice(a, k, delta);
        CHECK(kernel.size() == expected.size());
        if (expected.empty()) return;
        GradedSlice slice = slice_basis(a, k, S);
        QMatrix m(kernel.size() + expected.size(), slice.basis.size());
        for (size_t i = 0; i < kernel.size(); ++i) {
            auto coords = slice.coordinates(kernel[i]);
            for (size_t j = 0; j < coords.size(); ++j) m.at(i, j) = coords[j];
        }
        for (size_t i = 0; i < expected.size(); ++i) {
            auto coords = slice.coordinates(expected[i]);
            for (size_t j = 0; j < coords.size(); ++j) m.at(kernel.size() + i, j) = coords[j];
        }
        CHECK(rank(m) == kernel.size());
    };

    for (long n = 0; n <= 11; ++n) {
        unsigned l = (unsigned)(n / 6);
        long i = n % 6;
        // beta family: products b_0^{(i+1)} b_0^{(j)} live at (2n+4, n+1);
        // the printed table header says (2n+3, n+1), which no product matches.
        std::vector<Polynomial> beta_expected;
        if (i == 1) beta_expected = {gamma0 * g.pow(l)};
        if (i == 5) beta_expected = {xp(2) * g.pow(l + 1)};
        check_table(2 * n + 4, n + 1, beta_expected, "beta table n=" + std::to_string(n));

        std::vector<Polynomial> gamma_expected;
        if (i == 1) gamma_expected = {xp(4) * g.pow(l + 1)};
        if (i == 3) gamma_expected = {xp(2) * gamma0 * g.pow(l + 1)};
        if (i == 4) gamma_expected = {xp(1) * delta0 * g.pow(l + 1)};
        if (i == 5) gamma_expected = {gamma0 * gamma0 * g.pow(l + 1)};
        check_table(2 * n + 14, n + 5, gamma_expected, "gamma table n=" + std::to_string(n));

        std::vector<Polynomial> delta_expected;
        if (i == 1) delta_expected = {xp(4) * gamma0 * g.pow(l + 1)};
        if (i == 2) delta_expected = {xp(3) * delta0 * g.pow(l + 1)};
        if (i == 3) delta_expected = {xp(2) * gamma0 * gamma0 * g.pow(l + 1)};
        if (i == 4) delta_expected = {xp(1) * gamma0 * delta0 * g.pow(l + 1)};
        if (i == 5)
            delta_expected = {gamma0.pow(3) * g.pow(l + 1), delta0.pow(2) * g.pow(l + 1)};
        check_table(2 * n + 20, n + 7, delta_expected, "delta table n=" + std::to_string(n));
    }
}
