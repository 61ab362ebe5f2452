#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcoalg/crossed.hpp"

#include "support/fixtures.hpp"

using namespace gcoalg;
namespace fx = gcoalg::fixtures;

namespace {

WeakAction swap_action(const Coalgebra& c) {
    WeakAction a = WeakAction::trivial(c, FiniteGroup::cyclic(2));
    a.maps[1] = Matrix::of_ints(c.field, 2, 2, {0, 1, 1, 0});
    return a;
}

FactorSet neg_factor_set(const Coalgebra& k) {
    FactorSet f = FactorSet::trivial(k, FiniteGroup::cyclic(2));
    f.f[3] = Matrix::of_ints(k.field, 1, 1, {2});
    f.g[3] = Matrix::of_ints(k.field, 1, 1, {2});
    return f;
}

}  // namespace

TEST_CASE("build_kG") {
    CHECK(build_kG(fx::f3(), FiniteGroup::cyclic(2)) == fx::kg2());
    GroupCoalgebra triv = build_kG(fx::f3(), FiniteGroup::cyclic(1));
    CHECK(triv.dims == std::vector<std::size_t>{1});
    GroupCoalgebra ks3 = build_kG(Field::rationals(), fx::s3());
    CHECK(ks3 == fx::ks3());
    CHECK(is_strong(ks3).strong);
    CHECK(kg_antipode(fx::s3()) == std::vector<std::size_t>{0, 1, 2, 3, 5, 4});
}

TEST_CASE("weak action and factor set validation") {
    Coalgebra c = fx::c2gl();
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    CHECK(verify_weak_action(c, WeakAction::trivial(c, z2)).ok());
    CHECK(verify_weak_action(c, swap_action(c)).ok());

    WeakAction bad = WeakAction::trivial(c, z2);
    bad.maps[1] = Matrix::of_ints(c.field, 2, 2, {1, 0, 0, 0});  // projection: not counital
    CHECK_FALSE(verify_weak_action(c, bad).ok());

    CHECK(verify_factor_set(c, FactorSet::trivial(c, z2)).ok());
    FactorSet wrong = FactorSet::trivial(c, z2);
    wrong.g[0] = Matrix::row_of_ints(c.field, {2, 1});
    CHECK_FALSE(verify_factor_set(c, wrong).ok());
}

TEST_CASE("validate_crossed_data on the worked examples") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    Coalgebra k = Coalgebra::ground(fx::f3());
    CHECK(validate_crossed_data(k, z2, WeakAction::trivial(k, z2), FactorSet::trivial(k, z2)).ok());

    Coalgebra c = fx::c2gl();
    CHECK(validate_crossed_data(c, z2, swap_action(c), FactorSet::trivial(c, z2)).ok());

    FactorSet off = FactorSet::trivial(c, z2);
    off.f[3] = Matrix::row_of_ints(c.field, {1, 2});
    off.g[3] = Matrix::row_of_ints(c.field, {1, 2});
    Report r = validate_crossed_data(c, z2, swap_action(c), off);
    REQUIRE_FALSE(r.ok());
    bool cocycle_sss = false;
    for (const auto& issue : r.issues)
        if (issue.check == "cocycle" && issue.where == std::vector<std::size_t>{1, 1, 1})
            cocycle_sss = true;
    CHECK(cocycle_sss);
}

TEST_CASE("build_crossed reproduces the fixtures") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    Coalgebra k = Coalgebra::ground(fx::f3());
    CHECK(build_crossed(k, z2, WeakAction::trivial(k, z2), FactorSet::trivial(k, z2)) == fx::kg2());

    Coalgebra c = fx::c2gl();
    GroupCoalgebra crossed1 = build_crossed(c, z2, swap_action(c), FactorSet::trivial(c, z2));
    CHECK(crossed1 == fx::crossed1());
    CHECK(is_strong(crossed1).strong);

    GroupCoalgebra neg = build_crossed(k, z2, WeakAction::trivial(k, z2), neg_factor_set(k));
    CHECK(neg == fx::neg());
    CHECK(is_strong(neg).strong);

    FactorSet bad = FactorSet::trivial(c, z2);
    bad.f[3] = Matrix::row_of_ints(c.field, {1, 2});
    bad.g[3] = Matrix::row_of_ints(c.field, {1, 2});
    CHECK_THROWS_AS(build_crossed(c, z2, swap_action(c), bad), InvalidCrossedData);
}

TEST_CASE("crossed coproducts with trivial action and factor set are cofree") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    Coalgebra c = fx::c2gl();
    CHECK(build_crossed(c, z2, WeakAction::trivial(c, z2), FactorSet::trivial(c, z2)) ==
          fx::c2gl_z2());
}

TEST_CASE("normalization leaves normalized inputs alone") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    Coalgebra k = Coalgebra::ground(fx::f3());
    NormalizedCrossed n = normalize_factor_set(k, z2, WeakAction::trivial(k, z2), neg_factor_set(k));
    CHECK(n.fset.f == neg_factor_set(k).f);
    CHECK(n.action.maps == WeakAction::trivial(k, z2).maps);
    for (const Matrix& p : n.iso) CHECK(p == Matrix::identity(k.field, 1));
    CHECK(n.before == n.after);
}

TEST_CASE("normalization of a constant factor set") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    Coalgebra k = Coalgebra::ground(fx::f3());
    FactorSet f = FactorSet::trivial(k, z2);
    for (std::size_t i = 0; i < 4; ++i) {
        f.f[i] = Matrix::of_ints(k.field, 1, 1, {2});
        f.g[i] = Matrix::of_ints(k.field, 1, 1, {2});
    }
    NormalizedCrossed n = normalize_factor_set(k, z2, WeakAction::trivial(k, z2), f);
    for (std::size_t i = 0; i < 4; ++i) CHECK(n.fset.f[i] == k.counit);
    CHECK(n.iso[0] == Matrix::of_ints(k.field, 1, 1, {2}));  // multiplication by 2^-1 = 2
    CHECK(n.iso[1] == Matrix::identity(k.field, 1));
    CHECK(verify_group_coalgebra(n.after).ok());
}

TEST_CASE("normalization over Z3 from random coboundary twists") {
    // the isomorphism property is asserted inside normalize_factor_set, so
    // a pass here certifies the whole construction
    Field f5 = fx::f5();
    Coalgebra k = Coalgebra::ground(f5);
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        FactorSet fset = FactorSet::trivial(k, z3);
        std::vector<long> h(3), hinv(3);
        for (std::size_t a = 0; a < 3; ++a) {
            h[a] = 1 + static_cast<long>(rng() % 4);
            hinv[a] = static_cast<long>(
                Scalar::of_int(f5, h[a]).inverse().residue());
        }
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                long value = h[a] * hinv[z3.mul(a, b)] % 5 * h[b] % 5;
                fset.f[a * 3 + b] = Matrix::of_ints(f5, 1, 1, {value});
                fset.g[a * 3 + b] = Matrix::of_ints(
                    f5, 1, 1, {static_cast<long>(Scalar::of_int(f5, value).inverse().residue())});
            }
        WeakAction trivial = WeakAction::trivial(k, z3);
        REQUIRE(validate_crossed_data(k, z3, trivial, fset).ok());
        NormalizedCrossed n = normalize_factor_set(k, z3, trivial, fset);
        for (std::size_t a = 0; a < 3; ++a) {
            CHECK(n.fset.at(0, a, 3) == k.counit);
            CHECK(n.fset.at(a, 0, 3) == k.counit);
        }
        CHECK(verify_group_coalgebra(n.after).ok());
    }
}

TEST_CASE("normalized crossed outputs satisfy the strongness identity") {
    // (g_{a,a^-1} (x) lambda_{a^-1}) o delta_{a,a^-1} = id for normalized data
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    Coalgebra k = Coalgebra::ground(fx::f3());
    Coalgebra c = fx::c2gl();
    struct Case {
        Coalgebra coalg;
        WeakAction action;
        FactorSet fset;
    };
    std::vector<Case> cases = {
        {k, WeakAction::trivial(k, z2), neg_factor_set(k)},
        {c, swap_action(c), FactorSet::trivial(c, z2)},
        {c, WeakAction::trivial(c, z2), FactorSet::trivial(c, z2)},
    };
    for (const auto& cs : cases) {
        GroupCoalgebra crossed = build_crossed(cs.coalg, z2, cs.action, cs.fset);
        for (std::size_t a = 0; a < 2; ++a) {
            std::size_t ainv = z2.inv(a);
            Matrix section = kronecker(cs.fset.inv_at(a, ainv, 2), cs.action.maps[ainv]) *
                             crossed.delta(a, ainv);
            CHECK(section == Matrix::identity(cs.coalg.field, cs.coalg.dim));
        }
    }
}

TEST_CASE("cocleft data verification") {
    GroupCoalgebra kg2 = fx::kg2();
    Matrix one = Matrix::of_ints(kg2.field, 1, 1, {1});
    CocleftData counits{{one, one}, {one, one}};
    CHECK(verify_cocleft_data(kg2, counits).ok());

    GroupCoalgebra c1 = fx::crossed1();
    Matrix eps = Matrix::row_of_ints(c1.field, {1, 1});
    CocleftData eps_family{{eps, eps}, {eps, eps}};
    CHECK(verify_cocleft_data(c1, eps_family).ok());

    CocleftData zero{{one, Matrix::zero(kg2.field, 1, 1)}, {one, one}};
    Report r = verify_cocleft_data(kg2, zero);
    REQUIRE_FALSE(r.ok());
    CHECK(r.issues[0].where == std::vector<std::size_t>{1});
}

TEST_CASE("solve_convolution_partner") {
    GroupCoalgebra kg2 = fx::kg2();
    Matrix one = Matrix::of_ints(kg2.field, 1, 1, {1});
    PartnerResult r = solve_convolution_partner(kg2, {one, one});
    REQUIRE(r.data.has_value());
    CHECK(r.data->v == std::vector<Matrix>{one, one});

    GroupCoalgebra c1 = fx::crossed1();
    Matrix eps = Matrix::row_of_ints(c1.field, {1, 1});
    PartnerResult r1 = solve_convolution_partner(c1, {eps, eps});
    REQUIRE(r1.data.has_value());
    CHECK(verify_cocleft_data(c1, *r1.data).ok());

    PartnerResult bad = solve_convolution_partner(kg2, {one, Matrix::zero(kg2.field, 1, 1)});
    CHECK_FALSE(bad.data.has_value());
    CHECK(bad.failed_at == 1);

    // NEG with identity characters: v_s must solve 2 u v = 1, so v = 2
    GroupCoalgebra neg = fx::neg();
    PartnerResult rn = solve_convolution_partner(neg, {one, one});
    REQUIRE(rn.data.has_value());
    CHECK(rn.data->v[1] == Matrix::of_ints(neg.field, 1, 1, {2}));
}

TEST_CASE("crossed_from_cocleft on KG2 gives trivial data") {
    GroupCoalgebra kg2 = fx::kg2();
    Matrix one = Matrix::of_ints(kg2.field, 1, 1, {1});
    CrossedExtraction ext = crossed_from_cocleft(kg2, {{one, one}, {one, one}});
    for (const Matrix& m : ext.action.maps) CHECK(m == Matrix::identity(kg2.field, 1));
    for (const Matrix& f : ext.fset.f) CHECK(f == one);
    CHECK(ext.crossed == kg2);
}

TEST_CASE("crossed_from_cocleft recovers the swap action of CROSSED1") {
    GroupCoalgebra c1 = fx::crossed1();
    Matrix eps = Matrix::row_of_ints(c1.field, {1, 1});
    PartnerResult partner = solve_convolution_partner(c1, {eps, eps});
    REQUIRE(partner.data.has_value());
    CrossedExtraction ext = crossed_from_cocleft(c1, *partner.data);
    CHECK(ext.action.maps[0] == Matrix::identity(c1.field, 2));
    CHECK(ext.action.maps[1] == Matrix::of_ints(c1.field, 2, 2, {0, 1, 1, 0}));
    Coalgebra ce = component_e(c1);
    for (const Matrix& f : ext.fset.f) CHECK(f == ce.counit);
    CHECK(ext.crossed == c1);
}

TEST_CASE("crossed_from_cocleft recovers the sign cocycle of NEG") {
    GroupCoalgebra neg = fx::neg();
    Matrix one = Matrix::of_ints(neg.field, 1, 1, {1});
    PartnerResult partner = solve_convolution_partner(neg, {one, one});
    REQUIRE(partner.data.has_value());
    CrossedExtraction ext = crossed_from_cocleft(neg, *partner.data);
    CHECK(ext.fset.f[3] == Matrix::of_ints(neg.field, 1, 1, {2}));
    CHECK(ext.crossed == neg);
}

TEST_CASE("is_cocleft decisions with verified witnesses") {
    CocleftDecision kg2 = is_cocleft(fx::kg2());
    CHECK(kg2.verdict == Verdict::yes);
    REQUIRE(kg2.witness.has_value());
    CHECK(verify_cocleft_data(fx::kg2(), *kg2.witness).ok());

    CocleftDecision tr = is_cocleft(fx::trunc());
    CHECK(tr.verdict == Verdict::no);
    CHECK(tr.witnesses == std::vector<std::size_t>{1});

    for (auto fixture : {fx::crossed1(), fx::neg(), fx::c2gl_z2(), fx::ks3()}) {
        CocleftDecision d = is_cocleft(fixture);
        CHECK(d.verdict == Verdict::yes);
        REQUIRE(d.witness.has_value());
        CHECK(verify_cocleft_data(fixture, *d.witness).ok());
        CrossedExtraction ext = crossed_from_cocleft(fixture, *d.witness);
        CHECK(verify_group_coalgebra(ext.crossed).ok());
    }
}

TEST_CASE("smash_type_check") {
    GroupCoalgebra kg2 = fx::kg2();
    Matrix one = Matrix::of_ints(kg2.field, 1, 1, {1});
    SmashTypeResult r = smash_type_check(kg2, {one, one});
    CHECK(r.report.ok());
    REQUIRE(r.decomposition.has_value());
    for (const Matrix& m : r.decomposition->action.maps)
        CHECK(m == Matrix::identity(kg2.field, 1));

    GroupCoalgebra c1 = fx::crossed1();
    Matrix eps = Matrix::row_of_ints(c1.field, {1, 1});
    SmashTypeResult r1 = smash_type_check(c1, {eps, eps});
    CHECK(r1.report.ok());
    REQUIRE(r1.decomposition.has_value());

    GroupCoalgebra neg = fx::neg();
    SmashTypeResult rn = smash_type_check(neg, {one, one});
    REQUIRE_FALSE(rn.report.ok());
    bool at_ss = false;
    for (const auto& issue : rn.report.issues)
        if (issue.check == "morphism" && issue.where == std::vector<std::size_t>{1, 1}) at_ss = true;
    CHECK(at_ss);
}

TEST_CASE("smash-type decompositions reproduce the action-only comultiplication") {
    // delta_{a,b}(c) = c_(1) (x) lambda_a(c_(2)) once the factor set is trivial
    GroupCoalgebra c1 = fx::crossed1();
    Matrix eps = Matrix::row_of_ints(c1.field, {1, 1});
    SmashTypeResult r = smash_type_check(c1, {eps, eps});
    REQUIRE(r.decomposition.has_value());
    Coalgebra ce = component_e(c1);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            CHECK(r.decomposition->crossed.delta(a, b) ==
                  kronecker(Matrix::identity(c1.field, ce.dim), r.decomposition->action.maps[a]) *
                      ce.comult);
}

TEST_CASE("NEG admits no morphism to kG at all") {
    GroupCoalgebra neg = fx::neg();
    CHECK(enumerate_kg_morphisms(neg).empty());
    // ... while CROSSED1 and KG2 do
    CHECK(enumerate_kg_morphisms(fx::kg2()).size() == 2);
    CHECK_FALSE(enumerate_kg_morphisms(fx::crossed1()).empty());
}

TEST_CASE("trivial_action_check") {
    GroupCoalgebra kg2 = fx::kg2();
    Matrix one = Matrix::of_ints(kg2.field, 1, 1, {1});
    CHECK(trivial_action_check(kg2, {{one, one}, {one, one}}).ok());

    GroupCoalgebra neg = fx::neg();
    PartnerResult pn = solve_convolution_partner(neg, {one, one});
    REQUIRE(pn.data.has_value());
    CHECK(trivial_action_check(neg, *pn.data).ok());

    GroupCoalgebra c1 = fx::crossed1();
    Matrix eps = Matrix::row_of_ints(c1.field, {1, 1});
    PartnerResult p1 = solve_convolution_partner(c1, {eps, eps});
    REQUIRE(p1.data.has_value());
    Report r = trivial_action_check(c1, *p1.data);
    REQUIRE_FALSE(r.ok());
    CHECK(r.issues[0].check == "central-relation");
    CHECK(r.issues[0].where == std::vector<std::size_t>{1});
}

TEST_CASE("crossed coproduct over S3 through the sign action") {
    Coalgebra c = fx::c2gl();
    FiniteGroup s3 = fx::s3();
    WeakAction sign_action = WeakAction::trivial(c, s3);
    Matrix swap = Matrix::of_ints(c.field, 2, 2, {0, 1, 1, 0});
    for (std::size_t a : {1, 2, 3}) sign_action.maps[a] = swap;  // transpositions
    REQUIRE(validate_crossed_data(c, s3, sign_action, FactorSet::trivial(c, s3)).ok());
    GroupCoalgebra crossed = build_crossed(c, s3, sign_action, FactorSet::trivial(c, s3));
    CHECK(is_strong(crossed).strong);

    CocleftDecision d = is_cocleft(crossed);
    REQUIRE(d.verdict == Verdict::yes);
    CrossedExtraction ext = crossed_from_cocleft(crossed, *d.witness);
    CHECK(ext.action.maps == sign_action.maps);
    Coalgebra ce = component_e(crossed);
    for (const Matrix& f : ext.fset.f) CHECK(f == ce.counit);
}

TEST_CASE("span search strategies by field kind and size") {
    Field q = Field::rationals();
    Field f3 = fx::f3();

    // prime, exhaustive: the unique invertible combination is found
    std::vector<Matrix> diag = {Matrix::of_ints(f3, 2, 2, {1, 0, 0, 0}),
                                Matrix::of_ints(f3, 2, 2, {0, 0, 0, 1})};
    SpanSearch hit = search_invertible_in_span(diag, f3, 2);
    REQUIRE(hit.verdict == Verdict::yes);
    CHECK(rank(*hit.found) == 2);

    // prime, exhaustive miss: rank-one span, definite negative
    std::vector<Matrix> corner = {Matrix::of_ints(f3, 2, 2, {1, 0, 0, 0})};
    CHECK(search_invertible_in_span(corner, f3, 2).verdict == Verdict::no);

    // rationals, sampling succeeds
    std::vector<Matrix> diag_q = {Matrix::of_ints(q, 2, 2, {1, 0, 0, 0}),
                                  Matrix::of_ints(q, 2, 2, {0, 0, 0, 1})};
    CHECK(search_invertible_in_span(diag_q, q, 2).verdict == Verdict::yes);

    // rationals, grid certification: strictly upper triangular span is
    // entirely singular, a definite negative without enumeration of Q
    std::vector<Matrix> nilpotent = {Matrix::of_ints(q, 2, 2, {0, 1, 0, 0})};
    CHECK(search_invertible_in_span(nilpotent, q, 2).verdict == Verdict::no);

    // rationals, grid budget exhausted: honest inconclusive
    SearchPolicy tight;
    tight.exhaustive_bound = 1;
    tight.rational_retries = 3;
    CHECK(search_invertible_in_span(nilpotent, q, 2, tight).verdict == Verdict::inconclusive);

    // zero-dimensional target: the empty matrix is invertible
    CHECK(search_invertible_in_span({}, q, 0).verdict == Verdict::yes);
}

TEST_CASE("round trip through cocleft extraction for the crossed fixtures") {
    for (auto fixture : {fx::crossed1(), fx::neg()}) {
        CocleftDecision d = is_cocleft(fixture);
        REQUIRE(d.verdict == Verdict::yes);
        CrossedExtraction ext = crossed_from_cocleft(fixture, *d.witness);
        // the isomorphism property is asserted inside; double-check shape here
        for (std::size_t a = 0; a < fixture.group.order(); ++a) {
            CHECK(ext.iso[a].rows() == component_e(fixture).dim);
            CHECK(rank(ext.iso[a]) == component_e(fixture).dim);
        }
    }
}
