// Acceptance battery: ten pinned criteria, each with a wall-clock budget.
// Every check is exact field arithmetic except the numeric scan, whose
// tolerance is pinned below. Exits nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/fleet.hpp"
#include "tlq/errors.hpp"
#include "tlq/gram.hpp"
#include "tlq/poincare.hpp"
#include "tlq/qdet.hpp"

using namespace tlq;

namespace {

constexpr double kScanTol = 1e-20;  // |det| / Hadamard bound cutoff

struct Criterion {
    int id;
    const char* what;
    double limit_s;
    std::function<bool(std::string&)> run;
};

bool check_eq(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

// (1) braid + quadratic relation across the whole family
bool c1(std::string& detail) {
    bool ok = true;
    for (const auto& inst : fleet::all()) {
        TensorOperator s = build_S(inst);
        ok &= check_eq(ybe_check(s).ok, detail, "braid fails on " + fleet::label(inst));
        ok &= check_eq(hecke_check(s, inst.q).ok, detail,
                       "quadratic relation fails on " + fleet::label(inst));
    }
    return ok;
}

// (2) projector relations on up to four tensor factors
bool c2(std::string& detail) {
    bool ok = true;
    for (const auto& inst : fleet::all()) {
        CheckResult r = tl_relations_check(inst, 4);
        ok &= check_eq(r.ok, detail, "projector relation fails on " + fleet::label(inst));
    }
    return ok;
}

// (3) pairing well-definedness against all words of degree <= 2
bool c3(std::string& detail) {
    bool ok = true;
    for (const auto& inst : {fleet::n2_basic(), fleet::n2_scalar_minus(),
                             fleet::n2_scalar_plus(), fleet::n3_scalar_minus(),
                             fleet::n3_plus()}) {
        PairingContext ctx(inst, inst.field.one());
        WellDefResult r = ctx.well_definedness_check(2);
        ok &= check_eq(r.ok, detail,
                       "relator pairs nonzero on " + fleet::label(inst) +
                           (r.witness ? " value " + r.witness->value : ""));
    }
    return ok;
}

// (4) generator-determinant pairing equals the closed diagonal form
bool c4(std::string& detail) {
    bool ok = true;
    for (const auto& inst : {fleet::n2_basic(), fleet::n2_scalar_minus(),
                             fleet::n2_scalar_plus(), fleet::n3_scalar_minus(),
                             fleet::n3_plus()}) {
        ok &= check_eq(det_pairing_check(inst, inst.field.one()), detail,
                       "det pairing at c = 1 fails on " + fleet::label(inst));
        try {
            FieldElement c = compute_c(inst);
            ok &= check_eq(det_pairing_check(inst, c), detail,
                           "det pairing at canonical c fails on " + fleet::label(inst));
        } catch (const Error&) {
            // no canonical c on this member; the c = 1 case above covers it
        }
    }
    return ok;
}

// (5) canonical descent: identity pairing and counit law through degree 2
bool c5(std::string& detail) {
    bool ok = true;
    for (const auto& inst :
         {fleet::n2_scalar_minus(), fleet::n2_scalar_plus(), fleet::n3_scalar_minus(),
          fleet::n4_scalar_minus(), fleet::n5_scalar_minus(), fleet::n4_plus()}) {
        FieldElement c = compute_c(inst);
        ok &= check_eq(descent_check(inst, c), detail,
                       "identity descent fails on " + fleet::label(inst));
        ok &= check_eq(det_counit_check(inst, c, 2), detail,
                       "counit law fails on " + fleet::label(inst));
    }
    return ok;
}

// (6) factored determinant identity plus its block sub-identities
bool c6(std::string& detail) {
    bool ok = true;
    for (const auto& inst :
         {fleet::n2_basic(), fleet::n2_scalar_minus(), fleet::n2_scalar_plus(),
          fleet::n3_scalar_minus(), fleet::n3_plus(), fleet::n4_scalar_minus(),
          fleet::n4_nonscalar(), fleet::n4_plus()}) {
        FieldElement c = inst.field.one();
        try {
            c = compute_c(inst);
        } catch (const Error&) {
        }
        ClosedFormCheck r = closed_form_check(inst, c);
        ok &= check_eq(r.det_sq_ok, detail, "det^2 form fails on " + fleet::label(inst));
        ok &= check_eq(r.singles_ok, detail, "singles fail on " + fleet::label(inst));
        ok &= check_eq(r.doubles_ok, detail, "doubles fail on " + fleet::label(inst));
    }
    return ok;
}

// (7) exact degeneracy: the n = 2 family, and the q = 1 specialization
bool c7(std::string& detail) {
    bool ok = true;
    for (const auto& inst :
         {fleet::n2_basic(), fleet::n2_scalar_minus(), fleet::n2_scalar_plus()})
        ok &= check_eq(gram_det(inst, inst.field.one()).is_zero(), detail,
                       "n = 2 determinant is not zero on " + fleet::label(inst));
    for (const auto& inst :
         {fleet::n2_basic(), fleet::n3_scalar_minus(), fleet::n3_plus(),
          fleet::n4_scalar_minus(), fleet::n4_nonscalar()})
        ok &= check_eq(gram_det_vanishes_at(inst, inst.field.one(), Rational(1)), detail,
                       "no vanishing at q = 1 on " + fleet::label(inst));
    return ok;
}

// (8) numeric scans: generic nondegeneracy and 100% planted detection
bool c8(std::string& detail) {
    bool ok = true;
    for (int n : {3, 4, 5}) {
        ScanOptions opt;
        opt.n = n;
        opt.samples = 100;
        opt.seed = 40 + uint64_t(n);
        opt.tol = kScanTol;
        ScanResult clean = gram_scan(opt);
        ok &= check_eq(clean.degenerate_count == 0, detail,
                       "generic sample flagged degenerate at n = " + std::to_string(n));

        opt.plant_z_eq_q = true;
        ScanResult planted = gram_scan(opt);
        ok &= check_eq(planted.degenerate_count == opt.samples, detail,
                       "planted degeneracy missed at n = " + std::to_string(n));
        int typed = 0;
        for (const auto& fl : planted.flagged)
            for (const auto& d : fl.factors)
                if (d.type == "z_eq_q") {
                    ++typed;
                    break;
                }
        ok &= check_eq(typed == opt.samples, detail,
                       "planted factor untyped at n = " + std::to_string(n));
    }
    return ok;
}

// (9) dimension tables, series convolution, and the recursion match
bool c9(std::string& detail) {
    bool ok = true;
    for (const auto& inst :
         {fleet::n2_basic(), fleet::n3_scalar_minus(), fleet::n4_scalar_minus()}) {
        TensorOperator s = build_S(inst);
        auto plus = lambda_dims(s, inst.q, +1, 5);
        auto minus = lambda_dims(s, inst.q, -1, 5);
        std::vector<Integer> expect = {Integer(1), Integer(inst.n), Integer(1),
                                       Integer(0), Integer(0), Integer(0)};
        ok &= check_eq(minus == expect, detail,
                       "one-sided table off on " + fleet::label(inst));
        bool rec = true;
        for (int l = 0; l <= 5; ++l) rec &= plus[size_t(l)] == sym_dim(inst.n, l);
        ok &= check_eq(rec, detail, "recursion mismatch on " + fleet::label(inst));
        ok &= check_eq(series_product_check(plus, minus), detail,
                       "series convolution fails on " + fleet::label(inst));
    }
    return ok;
}

// (10) negative controls: broken inputs must be caught, not absorbed
bool c10(std::string& detail) {
    bool ok = true;

    TLInstance base = fleet::n2_basic();
    TensorOperator s = build_S(base);
    s.set({0, 0}, {1, 1}, base.field.parse("s"));
    CheckResult ybe = ybe_check(s);
    ok &= check_eq(!ybe.ok && ybe.witness.has_value(), detail,
                   "perturbed operator slipped through the braid check");

    for (const auto& inst : {fleet::n2_basic(), fleet::n4_nonscalar()}) {
        ok &= check_eq(!centrality_criterion(inst).has_value(), detail,
                       "nonscalar gauge reported central on " + fleet::label(inst));
        MNPair mn = mn_matrices(inst);
        bool left_obstructed = !mn.m.as_scalar().has_value();
        bool right_obstructed = !mn.n.as_scalar().has_value();
        ok &= check_eq(left_obstructed == right_obstructed && left_obstructed, detail,
                       "the two pairing orientations disagree on " + fleet::label(inst));
        ok &= check_eq(!descent_check(inst, inst.field.one()), detail,
                       "identity descent passed without a scalar reduction on " +
                           fleet::label(inst));
    }

    ok &= check_eq(!product_expansion_check(3, 1, 1), detail,
                   "step-one expansion unexpectedly holds");
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> list = {
        {1, "braid + quadratic relation, n = 2..5, both branches", 10.0, c1},
        {2, "projector relations on <= 4 factors", 10.0, c2},
        {3, "pairing well-definedness through degree 2 (n = 2, 3)", 60.0, c3},
        {4, "generator-determinant pairing closed form (n = 2, 3)", 30.0, c4},
        {5, "canonical descent + counit law through degree 2", 60.0, c5},
        {6, "factored Gram determinant with block sub-identities", 60.0, c6},
        {7, "exact degeneracy: n = 2 family and q = 1", 10.0, c7},
        {8, "numeric scans with planted degeneracy detection", 120.0, c8},
        {9, "dimension tables, convolution, recursion (lmax = 5)", 120.0, c9},
        {10, "negative controls", 30.0, c10},
    };

    int failures = 0;
    for (auto& cr : list) {
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = cr.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        if (dt > cr.limit_s) {
            ok = false;
            if (detail.empty())
                detail = "over budget (" + std::to_string(cr.limit_s) + " s)";
        }
        std::printf("[%s] (%2d) %-55s %7.2fs%s%s\n", ok ? "PASS" : "FAIL", cr.id,
                    cr.what, dt, detail.empty() ? "" : "  -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, list.size());
    else std::printf("all %zu criteria passed\n", list.size());
    return failures ? 1 : 0;
}
