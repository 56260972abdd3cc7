#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/imagekernel.hpp"
#include "invar/sagbi.hpp"

#include <random>

using namespace invar;

static const VarSetPtr& R = VariableSet::ring_r();
static const VarSetPtr& S = VariableSet::ring_s();

static FamilyArchive& archive6() {
    static FamilyArchive ar = [] {
        FamilyArchive a = FamilyArchive::seed();
        a.extend_all(6);
        return a;
    }();
    return ar;
}

static Monomial product_monomial(const std::vector<LeadingMonomialSet::Factor>& factors) {
    Monomial acc(R->size());
    for (const auto& f : factors) {
        Monomial one = LeadingMonomialSet::monomial(f.gen, f.index);
        for (int i = 0; i < f.multiplicity; ++i) acc = acc * one;
    }
    return acc;
}

TEST_CASE("leading monomial decomposition") {
    LeadingMonomialSet set(6);

    Monomial d3 = LeadingMonomialSet::monomial(LeadingMonomialSet::Gen::d, 3);
    auto dec = set.decompose(d3);
    REQUIRE(dec.has_value());
    REQUIRE(dec->size() == 1);
    CHECK(dec->front().gen == LeadingMonomialSet::Gen::d);
    CHECK(dec->front().index == 3);
    CHECK(dec->front().multiplicity == 1);

    // x^7 u v^5 splits as one d and one b with a free v split
    Monomial m = parse_polynomial("x^7*u*v^5", R).leading_monomial(MonomialOrder::natural(R));
    auto dec2 = set.decompose(m);
    REQUIRE(dec2.has_value());
    CHECK(product_monomial(*dec2) == m);

    // nothing in the set carries s
    CHECK(!set.decompose(parse_polynomial("s", R).leading_monomial(MonomialOrder::natural(R)))
               .has_value());

    // the closure property: random products of set monomials decompose back
    std::mt19937 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        Monomial acc(R->size());
        int parts = 1 + (int)(rng() % 4);
        for (int p = 0; p < parts; ++p) {
            int which = (int)(rng() % 4);
            int index = (int)(rng() % 7);
            using G = LeadingMonomialSet::Gen;
            G g = which == 0 ? G::b : which == 1 ? G::c : which == 2 ? G::d : G::e;
            acc = acc * LeadingMonomialSet::monomial(g, index);
        }
        auto d = set.decompose(acc);
        REQUIRE(d.has_value());
        CHECK(product_monomial(*d) == acc);
    }
}

TEST_CASE("subduction against the degree-zero generators") {
    std::vector<Polynomial> gens = delta_kernel_generators(); // beta0, gamma0, delta0, g
    MonomialOrder order = MonomialOrder::natural(S);
    Polynomial gamma0 = gens[1], delta0 = gens[2];

    SubductionResult sr = subduct(gamma0.pow(3) + delta0.pow(2), gens, order);
    CHECK(sr.residue.is_zero());
    CHECK(evaluate_expression(sr.expression, gens, S) == gamma0.pow(3) + delta0.pow(2));
    // the single step is x^6 g = beta0^6 g
    REQUIRE(sr.expression.size() == 1);
    CHECK(sr.expression[0].coeff == 1);
    CHECK(sr.expression[0].gen_indices == std::vector<size_t>{0, 0, 0, 0, 0, 0, 3});
}

TEST_CASE("subduction of trivial and non-member inputs") {
    FamilyArchive& ar = archive6();
    std::vector<Polynomial> gens = ar.sagbi_set(2);
    MonomialOrder order = MonomialOrder::natural(R);

    // beta1^2 - beta0 beta2 + gamma0 is identically zero
    Polynomial zero = ar.eta(FamilyKind::beta, 1) * ar.eta(FamilyKind::beta, 1) -
                      ar.eta(FamilyKind::beta, 0) * ar.eta(FamilyKind::beta, 2) +
                      ar.eta(FamilyKind::gamma, 0);
    CHECK(zero.is_zero());
    SubductionResult sz = subduct(zero, gens, order);
    CHECK(sz.residue.is_zero());
    CHECK(sz.expression.empty());

    SubductionResult sv = subduct(Polynomial::variable(R, "v"), gens, order);
    CHECK(sv.residue == Polynomial::variable(R, "v"));
    CHECK(sv.expression.empty());

    // constants are in the algebra
    SubductionResult sc = subduct(Polynomial::constant(R, Rational(7, 3)), gens, order);
    CHECK(sc.residue.is_zero());
}

TEST_CASE("relation identity checks at bound 4") {
    Report rep = check_relation_identities(archive6(), 4);
    CHECK(rep.all_pass());
    CHECK(rep.lines().size() > 100);
}

TEST_CASE("specific relation values") {
    FamilyArchive& ar = archive6();
    MonomialOrder order = MonomialOrder::natural(R);

    // LT(beta1 gamma1 - beta0 gamma2) = 3 x^6 u v
    Polynomial lhs = ar.eta(FamilyKind::beta, 1) * ar.eta(FamilyKind::gamma, 1) -
                     ar.eta(FamilyKind::beta, 0) * ar.eta(FamilyKind::gamma, 2);
    const Term& lt = lhs.leading_term(order);
    CHECK(Polynomial::from_term(R, lt.coeff, lt.mono) == parse_polynomial("3*x^6*u*v", R));

    // beta1^2 - beta0 beta2 = -gamma0
    CHECK(ar.eta(FamilyKind::beta, 1) * ar.eta(FamilyKind::beta, 1) -
              ar.eta(FamilyKind::beta, 0) * ar.eta(FamilyKind::beta, 2) ==
          -ar.eta(FamilyKind::gamma, 0));

    // delta0^2 - g beta0^6 = -gamma0^3, with leading term -8 x^9 t^3
    Polynomial ddg = ar.eta(FamilyKind::delta, 0) * ar.eta(FamilyKind::delta, 0) -
                     ar.g().reindex(R) * ar.eta(FamilyKind::beta, 0).pow(6);
    CHECK(ddg == -(ar.eta(FamilyKind::gamma, 0).pow(3)));
    const Term& lt2 = ddg.leading_term(order);
    CHECK(Polynomial::from_term(R, lt2.coeff, lt2.mono) == parse_polynomial("-8*x^9*t^3", R));
}

TEST_CASE("full verification at bound 4") {
    Report rep = verify_sagbi(archive6(), 4);
    CHECK(rep.all_pass());
    size_t slice_lines = 0;
    for (const CheckLine& l : rep.lines())
        if (l.key.rfind("sagbi/slice", 0) == 0) ++slice_lines;
    CHECK(slice_lines > 10); // the degree <= 9 invariant scan found elements
}

TEST_CASE("degree-zero sanity: small kernel elements subduct against the seeds") {
    FamilyArchive& ar = archive6();
    std::vector<Polynomial> gens = ar.sagbi_set(0);
    MonomialOrder order = MonomialOrder::natural(R);
    const Derivation& delta = Derivation::Delta();
    for (long a = 0; a <= 12; ++a) {
        for (long k = 0; k <= a; ++k) {
            for (const Polynomial& inv : kernel_slice(a, k, delta)) {
                SubductionResult sr = subduct(inv.reindex(R), gens, order);
                CHECK(sr.residue.is_zero());
            }
        }
    }
}

TEST_CASE("property: subduction soundness on perturbed algebra elements") {
    FamilyArchive& ar = archive6();
    std::vector<Polynomial> gens = ar.sagbi_set(3);
    MonomialOrder order = MonomialOrder::natural(R);
    std::mt19937 rng(23);
    for (int iter = 0; iter < 120; ++iter) {
        // random product of generators, optionally plus a non-member tail
        Polynomial p = Polynomial::one(R);
        int parts = 1 + (int)(rng() % 3);
        for (int i = 0; i < parts; ++i) p = p * gens[rng() % gens.size()];
        bool noisy = (iter % 3 == 0);
        if (noisy) p = p + Polynomial::variable(R, "v", 1 + (int)(rng() % 3));
        SubductionResult sr = subduct(p, gens, order);
        CHECK(evaluate_expression(sr.expression, gens, R) + sr.residue == p);
        if (!noisy) CHECK(sr.residue.is_zero());
        if (!sr.residue.is_zero()) {
            // the stopping certificate: the residue's leading monomial is
            // not a product of generator leading monomials
            LeadingMonomialSet set(3);
            CHECK(!set.decompose(sr.residue.leading_monomial(order)).has_value());
        }
    }
}

TEST_CASE("subduction rejects zero generators") {
    CHECK_THROWS_AS(subduct(Polynomial::variable(R, "x"), {Polynomial::zero(R)},
                            MonomialOrder::natural(R)),
                    Error);
}
