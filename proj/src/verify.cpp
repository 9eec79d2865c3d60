#include "tlq/verify.hpp"

#include "tlq/errors.hpp"
#include "tlq/gram.hpp"
#include "tlq/poincare.hpp"
#include "tlq/qdet.hpp"

namespace tlq {

namespace {

Json status_pass() { return Json{{"status", "pass"}}; }

Json status_fail() { return Json{{"status", "fail"}}; }

Json status_skip(const std::string& reason) {
    return Json{{"status", "skip"}, {"reason", reason}};
}

Json status_info() { return Json{{"status", "info"}}; }

Json from_bool(bool ok) { return ok ? status_pass() : status_fail(); }

Json witness_json(const Witness& w) {
    Json j;
    j["in"] = w.in;
    j["out"] = w.out;
    j["lhs"] = w.lhs;
    j["rhs"] = w.rhs;
    return j;
}

}  // namespace

Json run_verify(const TLInstance& inst, const VerifyOptions& opt) {
    const Field& f = inst.field;
    Json checks;

    TensorOperator s = build_S(inst);

    {
        CheckResult r = ybe_check(s);
        Json j = from_bool(r.ok);
        if (r.witness) j["witness"] = witness_json(*r.witness);
        checks["ybe"] = std::move(j);
    }
    {
        CheckResult r = hecke_check(s, inst.q);
        Json j = from_bool(r.ok);
        if (r.witness) j["witness"] = witness_json(*r.witness);
        checks["hecke"] = std::move(j);
    }
    {
        CheckResult r = tl_relations_check(inst, opt.tl_arity);
        Json j = from_bool(r.ok);
        j["max_arity"] = opt.tl_arity;
        if (r.witness) j["witness"] = witness_json(*r.witness);
        checks["tl_relations"] = std::move(j);
    }
    {
        ConstraintMatrixChecks r = constraint_matrix_checks(inst);
        Json j = from_bool(r.trace_one && r.product_scalar &&
                           spectrum_involution_check(inst));
        j["trace_one"] = r.trace_one;
        j["product_scalar"] = r.product_scalar;
        j["spectrum_involution"] = spectrum_involution_check(inst);
        checks["constraints_5_6"] = std::move(j);
    }

    std::optional<FieldElement> scalar = centrality_criterion(inst);
    {
        Json j = scalar.has_value() == inst.scalar_M ? status_info() : status_fail();
        j["value"] = inst.scalar_M;
        checks["scalar_M"] = std::move(j);
    }
    {
        Json j = status_info();
        j["value"] = inst.m.str();
        if (scalar && !(*scalar == inst.m)) j = status_fail();
        checks["m"] = std::move(j);
    }

    std::optional<FieldElement> c;
    {
        Json j;
        try {
            c = compute_c(inst, opt.negate_c);
            j = status_info();
            j["value"] = c->str();
        } catch (const Error& e) {
            j = status_skip(e.what());
        }
        checks["c"] = std::move(j);
    }

    {
        Json j;
        if (inst.n <= 3 || opt.force_well_def) {
            PairingContext ctx(inst, f.one());
            WellDefResult r = ctx.well_definedness_check(opt.well_def_degree);
            j = from_bool(r.ok);
            j["degree"] = opt.well_def_degree;
            if (r.witness) {
                Json w;
                w["relator"] = r.witness->relator_index;
                w["word"] = word_str(r.witness->word);
                w["word_on_left"] = r.witness->word_on_left;
                w["value"] = r.witness->value;
                j["witness"] = std::move(w);
            }
        } else {
            j = status_skip("cost guard at n >= 4; rerun with the force flag");
        }
        checks["well_definedness"] = std::move(j);
    }

    {
        Json j;
        if (c) {
            j = from_bool(det_counit_check(inst, *c, opt.counit_degree));
            j["degree_checked"] = opt.counit_degree;
        } else {
            j = status_skip("needs the canonical c");
        }
        checks["eq2"] = std::move(j);
    }
    {
        bool ok = det_pairing_check(inst, f.one());
        if (ok && c) ok = det_pairing_check(inst, *c);
        Json j = from_bool(ok);
        j["c_used"] = c ? Json::array({"1", c->str()}) : Json::array({"1"});
        checks["eq3"] = std::move(j);
    }
    {
        Json j = status_info();
        j["central"] = scalar.has_value();
        if (inst.n <= 3 || opt.force_ideal) {
            bool member = ideal_membership_check(inst);
            j["ideal_membership"] = member;
            if (member != scalar.has_value()) j["status"] = "fail";
        } else {
            j["ideal_membership"] = nullptr;
            j["ideal_membership_reason"] = "cost guard at n = 4; rerun with the force flag";
        }
        checks["centrality"] = std::move(j);
    }

    FieldElement c_used = c ? *c : f.one();
    {
        Json j = status_info();
        j["c_used"] = c_used.str();
        j["value"] = gram_det(inst, c_used).str();
        checks["gram_det"] = std::move(j);
    }
    {
        ClosedFormCheck r = closed_form_check(inst, c_used);
        Json j = from_bool(r.ok());
        j["det_sq"] = r.det_sq_ok;
        j["singles"] = r.singles_ok;
        j["doubles"] = r.doubles_ok;
        checks["prop4"] = std::move(j);
    }
    {
        Json j = status_info();
        Json factors = Json::array();
        for (const auto& d : degeneracy_factors(inst)) {
            Json fj;
            fj["type"] = d.type;
            if (d.i) fj["i"] = d.i;
            if (d.j) fj["j"] = d.j;
            factors.push_back(std::move(fj));
        }
        j["factors"] = std::move(factors);
        checks["degeneracy_factors"] = std::move(j);
    }

    {
        auto plus = lambda_dims(s, inst.q, +1, opt.poincare_lmax);
        auto minus = lambda_dims(s, inst.q, -1, opt.poincare_lmax);
        bool minus_ok = true;
        for (size_t l = 0; l < minus.size(); ++l) {
            Integer want = l == 0 ? 1 : (l == 1 ? inst.n : (l == 2 ? 1 : 0));
            if (minus[l] != want) minus_ok = false;
        }
        bool plus_ok = true;
        for (size_t l = 0; l < plus.size(); ++l)
            if (plus[l] != sym_dim(inst.n, int(l))) plus_ok = false;
        bool series_ok = series_product_check(plus, minus);
        Json j = from_bool(minus_ok && plus_ok && series_ok);
        j["lmax"] = opt.poincare_lmax;
        Json dp = Json::array(), dm = Json::array();
        for (const auto& d : plus) dp.push_back(d.get_str());
        for (const auto& d : minus) dm.push_back(d.get_str());
        j["dims_plus"] = std::move(dp);
        j["dims_minus"] = std::move(dm);
        j["series_product"] = series_ok;
        j["matches_recursion"] = plus_ok;
        checks["poincare"] = std::move(j);
    }
    {
        Json j = from_bool(product_expansion_check(inst.n, opt.expansion_imax, 2));
        j["imax"] = opt.expansion_imax;
        checks["eq9"] = std::move(j);
    }

    int pass = 0, fail = 0, skip = 0, info = 0;
    for (const auto& [key, val] : checks.items()) {
        (void)key;
        std::string st = val.at("status").get<std::string>();
        if (st == "pass") ++pass;
        else if (st == "fail") ++fail;
        else if (st == "skip") ++skip;
        else ++info;
    }

    Json report;
    report["schema_version"] = 1;
    report["tool"] = Json{{"name", "tlq"}, {"version", "0.1.0"}};
    report["seed"] = opt.seed;
    report["instance"] = echo_instance(inst);
    report["checks"] = std::move(checks);
    report["summary"] =
        Json{{"pass", pass}, {"fail", fail}, {"skip", skip}, {"info", info}};
    report["ok"] = fail == 0;
    return report;
}

}  // namespace tlq
