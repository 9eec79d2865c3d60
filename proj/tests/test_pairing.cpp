#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/fleet.hpp"
#include "tlq/pairing.hpp"

using namespace tlq;

namespace {

Word W(std::initializer_list<Letter> ls) { return Word(ls); }

}  // namespace

TEST_CASE("free words and linear combinations") {
    Field f = Field::ratfunc_sigma();
    LinComb a = LinComb::generator(f, 1, 2);
    LinComb b = LinComb::generator(f, 2, 1);
    LinComb p = a * b;
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms().begin()->first == W({{1, 2}, {2, 1}}));
    CHECK(p.str() == "(1)*t[1,2]*t[2,1]");

    LinComb zero = p - p;
    CHECK(zero.is_zero());
    LinComb combo = a * b - b.scaled(f.q()) * a;
    CHECK(combo.terms().size() == 2);
    CHECK((combo + b.scaled(f.q()) * a) == a * b);
    CHECK(LinComb::unit(f).str() == "(1)");

    WordLess less;
    CHECK(less(W({{2, 2}}), W({{1, 1}, {1, 1}})));  // shorter first
    CHECK(less(W({{1, 1}, {1, 2}}), W({{1, 1}, {2, 1}})));
}

TEST_CASE("generator pairing reads the structure constants") {
    TLInstance inst = fleet::n2_basic();
    const Field& f = inst.field;
    PairingContext ctx(inst, f.one());
    FieldElement q = f.q();
    // <<t_i^j, t_k^l>> takes the S entry with input (k, i), output (j, l)
    CHECK(ctx.pair_generators(1, 1, 1, 1) == q);
    CHECK(ctx.pair_generators(2, 2, 1, 1) == -f.one());   // S_{12}^{21}
    CHECK(ctx.pair_generators(1, 1, 2, 2) == -q);         // S_{21}^{12}
    CHECK(ctx.pair_generators(1, 2, 2, 1).is_zero());     // S_{21}^{21} = 0
    CHECK(ctx.pair_generators(2, 1, 1, 2) == q - f.one());  // S_{12}^{12}
    CHECK(ctx.pair_generators(1, 2, 1, 2).is_zero());     // S_{11}^{22} = 0

    PairingContext scaled(inst, f.parse("s"));
    CHECK(scaled.pair_generators(1, 1, 1, 1) == f.parse("s^5"));
}

TEST_CASE("counit is multiplicative Kronecker data") {
    TLInstance inst = fleet::n2_basic();
    PairingContext ctx(inst, inst.field.one());
    CHECK(ctx.counit(W({})) == inst.field.one());
    CHECK(ctx.counit(W({{1, 1}})) == inst.field.one());
    CHECK(ctx.counit(W({{1, 2}})).is_zero());
    CHECK(ctx.counit(W({{1, 1}, {2, 2}})) == inst.field.one());
    CHECK(ctx.counit(W({{1, 1}, {2, 1}})).is_zero());
}

TEST_CASE("unit axioms: pairing against the empty word is the counit") {
    for (const auto& inst : {fleet::n2_basic(), fleet::n3_scalar_minus()}) {
        CAPTURE(fleet::label(inst));
        PairingContext ctx(inst, inst.field.parse("s"));
        int n = inst.n;
        std::vector<Word> words = {W({})};
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                words.push_back(W({{i, j}}));
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l)
                        words.push_back(W({{i, j}, {k, l}}));
            }
        for (const auto& w : words) {
            CHECK(ctx.pair_words(W({}), w) == ctx.counit(w));
            CHECK(ctx.pair_words(w, W({})) == ctx.counit(w));
        }
    }
}

TEST_CASE("splitting a length-two right argument reverses the factor order") {
    // <<t_x^y, t_k^l t_m^p>> = sum_s <<t_x^s, t_m^p>> <<t_s^y, t_k^l>>
    for (const auto& inst : {fleet::n2_basic(), fleet::n3_plus()}) {
        CAPTURE(fleet::label(inst));
        const Field& f = inst.field;
        PairingContext ctx(inst, f.parse("s+1"));
        int n = inst.n;
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l)
                        for (int mm = 1; mm <= n; ++mm)
                            for (int p = 1; p <= n; ++p) {
                                FieldElement direct =
                                    ctx.pair_words(W({{x, y}}), W({{k, l}, {mm, p}}));
                                FieldElement acc = f.zero();
                                for (int s = 1; s <= n; ++s)
                                    acc += ctx.pair_generators(x, s, mm, p) *
                                           ctx.pair_generators(s, y, k, l);
                                CHECK(direct == acc);
                            }
    }
}

TEST_CASE("splitting the left argument sums over middle indices") {
    // <<t_a^b t_x^y, B>> = sum_p <<t_a^b, t_low^p>> <<t_x^y, t_p^up>>
    TLInstance inst = fleet::n2_basic();
    const Field& f = inst.field;
    PairingContext ctx(inst, f.one());
    int n = inst.n;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l)
                            for (int mm = 1; mm <= n; ++mm)
                                for (int p = 1; p <= n; ++p) {
                                    Word A = W({{a, b}, {x, y}});
                                    Word B = W({{k, l}, {mm, p}});
                                    FieldElement direct = ctx.pair_words(A, B);
                                    FieldElement acc = f.zero();
                                    for (int r = 1; r <= n; ++r)
                                        for (int t = 1; t <= n; ++t)
                                            acc += ctx.pair_words(
                                                       W({{a, b}}), W({{k, r}, {mm, t}})) *
                                                   ctx.pair_words(
                                                       W({{x, y}}), W({{r, l}, {t, p}}));
                                    CHECK(direct == acc);
                                }
}

TEST_CASE("pinned degree-two value") {
    TLInstance inst = fleet::n2_basic();
    PairingContext ctx(inst, inst.field.one());
    Word w = W({{1, 1}, {1, 1}});
    CHECK(ctx.pair_words(w, w) == inst.field.parse("q^4"));
}

TEST_CASE("exchange relators vanish exactly off the skew diagonal") {
    for (const auto& inst : {fleet::n2_basic(), fleet::n3_scalar_minus()}) {
        CAPTURE(fleet::label(inst));
        PairingContext ctx(inst, inst.field.one());
        int n = inst.n;
        auto idx = ctx.nonzero_relator_indices();
        CHECK((int)idx.size() == 2 * n * n * n - n * n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int p = 1; p <= n; ++p)
                    for (int r = 1; r <= n; ++r) {
                        bool expect_zero = (i + j != n + 1) && (p + r != n + 1);
                        CHECK(ctx.rtt_relator(i, j, p, r).is_zero() == expect_zero);
                    }
    }
}

TEST_CASE("well-definedness against degree-two words") {
    for (const auto& inst : {fleet::n2_basic(), fleet::n2_scalar_plus(),
                             fleet::n3_scalar_minus()}) {
        CAPTURE(fleet::label(inst));
        PairingContext ctx(inst, inst.field.parse("s^2"));
        WellDefResult r = ctx.well_definedness_check(2);
        CHECK(r.ok);
        CHECK_FALSE(r.witness.has_value());
    }
}

TEST_CASE("well-definedness fails for a gauge that breaks the braid relation") {
    // keep the weights but scramble one skew entry of S
    TLInstance inst = fleet::n2_basic();
    TensorOperator s = build_S(inst);
    s.set({0, 1}, {1, 0}, inst.field.parse("s^3"));
    PairingContext ctx(inst.field, s, inst.field.one());
    WellDefResult r = ctx.well_definedness_check(2);
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->value != "0");
}

TEST_CASE("splitting-rule compatibility with the exchange relators") {
    for (const auto& inst :
         {fleet::n2_basic(), fleet::n2_scalar_minus(), fleet::n3_plus()}) {
        CAPTURE(fleet::label(inst));
        PairingContext ctx(inst, inst.field.parse("s"));
        CHECK(ctx.axiom_iii_check());
    }
}

TEST_CASE("right action realizes words as tensor operators") {
    TLInstance inst = fleet::n2_scalar_minus();
    const Field& f = inst.field;
    PairingContext ctx(inst, f.one());

    // one letter on one factor: coefficients are single S entries
    SparseVec xi;
    xi.terms.emplace_back(pack_index({0}, 2), f.one());
    SparseVec out = ctx.act(LinComb::generator(f, 1, 1), xi, 1);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms[0].first == pack_index({0}, 2));
    CHECK(out.terms[0].second == ctx.pair_generators(1, 1, 1, 1));

    // the action is associative: (ab) acts as b then a... fixed convention:
    // acting by a word equals acting by its letters right to left
    for (int m = 1; m <= 2; ++m) {
        for (uint64_t start = 0; start < (uint64_t(1) << m); ++start) {
            SparseVec base;
            base.terms.emplace_back(start, f.one());
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j)
                    for (int k = 1; k <= 2; ++k)
                        for (int l = 1; l <= 2; ++l) {
                            LinComb a = LinComb::generator(f, i, j);
                            LinComb b = LinComb::generator(f, k, l);
                            SparseVec lhs = ctx.act(a * b, base, m);
                            SparseVec rhs = ctx.act(a, ctx.act(b, base, m), m);
                            CHECK(sparse_axpy(lhs, f.integer(-1), rhs).terms.empty());
                        }
        }
    }
}
