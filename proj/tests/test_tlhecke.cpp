#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/fleet.hpp"
#include "tlq/errors.hpp"

using namespace tlq;

TEST_CASE("instance validation spells out the violated condition") {
    Field f = Field::ratfunc_sigma();
    auto el = [&](const char* t) { return f.parse(t); };

    // wrong vector length
    CHECK_THROWS_AS(build_instance(f, 2, -1, {el("1")}, {el("1"), el("1")}),
                    InvalidInstanceError);
    // zero entry
    CHECK_THROWS_AS(
        build_instance(f, 2, -1, {el("0"), el("1")}, {el("1"), el("1")}),
        InvalidInstanceError);
    // weight sum misses 1 + q
    CHECK_THROWS_AS(
        build_instance(f, 2, -1, {el("1"), el("1")}, {el("1"), el("1")}),
        InvalidInstanceError);
    // pair products miss q
    CHECK_THROWS_AS(build_instance(f, 4, -1,
                                   {el("1/(1+q)"), el("q/(2*(1+q))"),
                                    el("3*q/(2*(1+q))"), el("-q/(1+q)")},
                                   {el("1"), el("1"), el("1"), el("1")}),
                    InvalidInstanceError);
    // odd middle weight must be branch * s^2
    CHECK_THROWS_AS(
        build_instance(f, 3, +1,
                       {el("1/(1+q)"), el("-s^2/(1+q)"), el("q/(1+q)")},
                       {el("1"), el("1"), el("1")}),
        InvalidInstanceError);
    CHECK_THROWS_AS(build_instance(f, 7, -1, {}, {}), InvalidInstanceError);
    CHECK_THROWS_AS(
        build_instance(Field::rationals(), 2, -1, {el("1"), el("1")}, {el("1"), el("1")}),
        InvalidInstanceError);
}

TEST_CASE("operator entries at n = 2 match the defining pattern") {
    TLInstance inst = fleet::n2_basic();
    const Field& f = inst.field;
    TensorOperator s = build_S(inst);
    auto S = [&](int a, int b, int c, int d) {
        return s.coeff({a - 1, b - 1}, {c - 1, d - 1});
    };
    FieldElement q = f.q();
    CHECK(S(1, 1, 1, 1) == q);
    CHECK(S(2, 2, 2, 2) == q);
    CHECK(S(1, 2, 1, 2) == q - f.one());
    CHECK(S(1, 2, 2, 1) == -f.one());
    CHECK(S(2, 1, 1, 2) == -q);
    CHECK(S(2, 1, 2, 1).is_zero());  // structural zero, not stored
    CHECK(s.nnz() == 5);

    // skew-diagonal off-rows carry -(1+q) u_{i} v^{j}
    TLInstance g = fleet::n3_scalar_minus();
    TensorOperator sg = build_S(g);
    FieldElement expect = -(g.field.one() + g.q) * g.u[0] * g.v[2];
    CHECK(sg.coeff({0, 2}, {2, 0}) == expect);
}

TEST_CASE("derived weights and spectrum properties across the fleet") {
    for (const auto& inst : fleet::all()) {
        CAPTURE(fleet::label(inst));
        FieldElement sum = inst.field.zero();
        for (const auto& zi : inst.z) sum += zi;
        CHECK(sum == inst.field.one() + inst.q);
        for (int i = 0; i < inst.n; ++i)
            CHECK(inst.z[size_t(i)] * inst.z[size_t(inst.n - 1 - i)] == inst.q);
        CHECK(spectrum_involution_check(inst));
        CHECK(inst.m * inst.m == inst.lambda);
        auto cm = constraint_matrix_checks(inst);
        CHECK(cm.trace_one);
        CHECK(cm.product_scalar);
    }
    CHECK(simple_spectrum_check(fleet::n4_scalar_minus()));
    CHECK(simple_spectrum_check(fleet::n4_plus()));
}

TEST_CASE("scalar reduction flag matches the gauge") {
    CHECK_FALSE(fleet::n2_basic().scalar_M);
    CHECK_FALSE(fleet::n4_nonscalar().scalar_M);
    for (const auto& inst : fleet::scalar_fleet()) {
        CAPTURE(fleet::label(inst));
        CHECK(inst.scalar_M);
        CHECK(scalar_M_condition(inst));
        CHECK(inst.m == inst.field.integer(inst.branch) * inst.sqrt_q /
                            (inst.field.one() + inst.q));
    }
}

TEST_CASE("braid and quadratic relations hold for every member") {
    for (const auto& inst : fleet::all()) {
        CAPTURE(fleet::label(inst));
        TensorOperator s = build_S(inst);
        CHECK(ybe_check(s).ok);
        CHECK(hecke_check(s, inst.q).ok);
    }
}

TEST_CASE("projector relations on three factors") {
    for (const auto& inst : {fleet::n2_basic(), fleet::n3_scalar_minus()}) {
        CAPTURE(fleet::label(inst));
        CHECK(tl_relations_check(inst, 3).ok);
    }
}

TEST_CASE("diagonal regauging preserves both relations") {
    // only the skew-diagonal rows can move, and only when the pair products
    // w_k w_{n+1-k} differ, which needs n >= 3
    TLInstance inst = fleet::n3_scalar_minus();
    const Field& f = inst.field;
    TensorOperator s = build_S(inst);
    TensorOperator s2 = conjugate_by_diagonal(s, {f.parse("s"), f.one(), f.one()});
    CHECK(s2 != s);
    CHECK(ybe_check(s2).ok);
    CHECK(hecke_check(s2, inst.q).ok);
    CHECK_THROWS_AS(conjugate_by_diagonal(s, {f.zero(), f.one(), f.one()}), GuardError);
}

TEST_CASE("scalar construction from free inner weights") {
    auto c4 = construct_scalar_instance(4, +1, {RatFunc(1)});
    CHECK(c4.delta == Poly(-1));
    CHECK(c4.instance.scalar_M);
    CHECK(c4.instance.branch == 1);

    auto c5 = construct_scalar_instance(5, +1, {RatFunc(1)});
    CHECK(c5.delta == Poly(-3));
    CHECK(c5.instance.scalar_M);

    // inner weights that keep the outer discriminant a perfect square stay
    // over plain rational functions: at n = 6 the choice (s^2, -s^2) gives
    // remainder 1 + q and discriminant (1 - q)^2
    Field F = Field::ratfunc_sigma();
    RatFunc zp = F.parse("s^2").as_ratfunc();
    RatFunc zm = F.parse("-s^2").as_ratfunc();
    auto c6 = construct_scalar_instance(6, -1, {zp, zm});
    CHECK(c6.delta.is_zero());
    CHECK(c6.field.kind() == FieldKind::ratfunc_sigma);
    CHECK(c6.instance.scalar_M);
    // that choice doubles two weights: z_2 = z_5 and z_3 = z_4
    CHECK_FALSE(simple_spectrum_check(c6.instance));

    CHECK_THROWS_AS(construct_scalar_instance(4, -1, {RatFunc(0)}),
                    InvalidInstanceError);
    CHECK_THROWS_AS(construct_scalar_instance(4, -1, {zm, zm}), InvalidInstanceError);
}

TEST_CASE("gauge derived from weights reproduces them") {
    TLInstance ref = fleet::n4_scalar_minus();
    TLInstance rebuilt = instance_from_z(ref.field, ref.branch, ref.z);
    CHECK(rebuilt.scalar_M);
    for (int i = 0; i < 4; ++i) CHECK(rebuilt.z[size_t(i)] == ref.z[size_t(i)]);
    CHECK(rebuilt.m == ref.m);
}
