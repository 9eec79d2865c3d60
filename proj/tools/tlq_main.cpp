#include <cctype>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tlq/errors.hpp"
#include "tlq/gram.hpp"
#include "tlq/poincare.hpp"
#include "tlq/qdet.hpp"
#include "tlq/verify.hpp"

namespace {

using namespace tlq;

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

FieldElement resolve_c(const TLInstance& inst, const std::string& expr, bool negate,
                       std::string* how = nullptr) {
    if (!expr.empty()) {
        if (how) *how = "explicit";
        return inst.field.parse(expr);
    }
    try {
        FieldElement c = compute_c(inst, negate);
        if (how) *how = "canonical";
        return c;
    } catch (const Error&) {
        if (how) *how = "default 1";
        return inst.field.one();
    }
}

int cmd_verify(const std::string& path, const VerifyOptions& opt, bool as_json) {
    TLInstance inst = load_instance_file(path);
    Json report = run_verify(inst, opt);
    if (as_json) {
        emit(report);
    } else {
        for (const auto& [name, check] : report["checks"].items()) {
            std::cout << name << ": " << check["status"].get<std::string>();
            if (check.contains("reason"))
                std::cout << " (" << check["reason"].get<std::string>() << ")";
            std::cout << "\n";
        }
        const Json& s = report["summary"];
        std::cout << "summary: " << s["pass"] << " pass, " << s["fail"] << " fail, "
                  << s["skip"] << " skip, " << s["info"] << " info\n";
    }
    return report["ok"].get<bool>() ? 0 : 1;
}

int cmd_pair(const std::string& path, const std::string& a, const std::string& b,
             const std::string& cexpr, bool negate, bool as_json) {
    TLInstance inst = load_instance_file(path);
    std::string how;
    FieldElement c = resolve_c(inst, cexpr, negate, &how);
    PairingContext ctx(inst, c);
    LinComb la = parse_lincomb(inst.field, inst.n, a);
    LinComb lb = parse_lincomb(inst.field, inst.n, b);
    FieldElement value = ctx.pair(la, lb);
    if (as_json) {
        Json doc;
        doc["c"] = c.str();
        doc["c_source"] = how;
        doc["left"] = la.str();
        doc["right"] = lb.str();
        doc["value"] = value.str();
        emit(doc);
    } else {
        std::cout << "c = " << c.str() << " (" << how << ")\n"
                  << "value = " << value.str() << "\n";
    }
    return 0;
}

int cmd_gram(const std::string& path, const std::string& cexpr, bool negate,
             bool dump_matrix, bool closed_form, bool as_json) {
    TLInstance inst = load_instance_file(path);
    std::string how;
    FieldElement c = resolve_c(inst, cexpr, negate, &how);
    Matrix g = build_gram(inst, c);
    FieldElement det = g.det();

    Json doc;
    doc["c"] = c.str();
    doc["c_source"] = how;
    doc["det"] = det.str();
    Json factors = Json::array();
    for (const auto& d : degeneracy_factors(inst)) {
        Json fj;
        fj["type"] = d.type;
        if (d.i) fj["i"] = d.i;
        if (d.j) fj["j"] = d.j;
        factors.push_back(std::move(fj));
    }
    doc["degeneracy_factors"] = std::move(factors);
    bool ok = true;
    if (closed_form) {
        ClosedFormCheck r = closed_form_check(inst, c);
        ok = r.ok();
        doc["closed_form"] = Json{{"status", ok ? "pass" : "fail"},
                                  {"det_sq", r.det_sq_ok},
                                  {"singles", r.singles_ok},
                                  {"doubles", r.doubles_ok}};
    }
    if (dump_matrix) {
        Json rows = Json::array();
        for (size_t i = 0; i < g.rows(); ++i) {
            Json row = Json::array();
            for (size_t j = 0; j < g.cols(); ++j) row.push_back(g.at(i, j).str());
            rows.push_back(std::move(row));
        }
        doc["matrix"] = std::move(rows);
    }
    if (as_json) {
        emit(doc);
    } else {
        std::cout << "c = " << c.str() << " (" << how << ")\n"
                  << "det = " << det.str() << "\n";
        if (closed_form)
            std::cout << "closed form: " << (ok ? "pass" : "fail") << "\n";
        if (!doc["degeneracy_factors"].empty())
            std::cout << "degenerate factors: " << doc["degeneracy_factors"].dump()
                      << "\n";
        if (dump_matrix)
            for (size_t i = 0; i < g.rows(); ++i) {
                for (size_t j = 0; j < g.cols(); ++j)
                    std::cout << (j ? "\t" : "") << g.at(i, j).str();
                std::cout << "\n";
            }
    }
    return ok ? 0 : 1;
}

int cmd_scan(const ScanOptions& opt, bool as_json) {
    ScanResult res = gram_scan(opt);
    Json doc;
    doc["n"] = res.n;
    doc["samples"] = res.samples;
    doc["seed"] = res.seed;
    doc["tol"] = res.tol;
    doc["min_absdet"] = res.min_absdet;
    doc["max_absdet"] = res.max_absdet;
    doc["min_ratio"] = res.min_ratio;
    doc["max_ratio"] = res.max_ratio;
    doc["degenerate_count"] = res.degenerate_count;
    Json flagged = Json::array();
    for (const auto& fl : res.flagged) {
        Json fj;
        fj["sample"] = fl.sample;
        Json fs = Json::array();
        for (const auto& d : fl.factors) {
            Json dj;
            dj["type"] = d.type;
            if (d.i) dj["i"] = d.i;
            if (d.j) dj["j"] = d.j;
            fs.push_back(std::move(dj));
        }
        fj["factors"] = std::move(fs);
        flagged.push_back(std::move(fj));
    }
    doc["flagged"] = std::move(flagged);
    if (as_json) {
        emit(doc);
    } else {
        std::cout << "n = " << res.n << ", samples = " << res.samples
                  << ", degenerate = " << res.degenerate_count << "\n"
                  << "|det| in [" << res.min_absdet << ", " << res.max_absdet << "]\n"
                  << "|det|/bound in [" << res.min_ratio << ", " << res.max_ratio
                  << "]\n";
        for (const auto& fl : res.flagged)
            std::cout << "sample " << fl.sample << " flagged ("
                      << fl.factors.size() << " factors)\n";
    }
    return 0;
}

int cmd_poincare(const std::string& path, int lmax, int eq9_imax, bool as_json) {
    TLInstance inst = load_instance_file(path);
    TensorOperator s = build_S(inst);
    auto plus = lambda_dims(s, inst.q, +1, lmax);
    auto minus = lambda_dims(s, inst.q, -1, lmax);
    bool series_ok = series_product_check(plus, minus);
    bool sym_ok = true;
    for (size_t l = 0; l < plus.size(); ++l)
        if (plus[l] != sym_dim(inst.n, int(l))) sym_ok = false;
    bool expansion_ok = eq9_imax < 0 || product_expansion_check(inst.n, eq9_imax, 2);

    Json doc;
    doc["n"] = inst.n;
    doc["lmax"] = lmax;
    Json dp = Json::array(), dm = Json::array();
    for (const auto& d : plus) dp.push_back(d.get_str());
    for (const auto& d : minus) dm.push_back(d.get_str());
    doc["dims_plus"] = std::move(dp);
    doc["dims_minus"] = std::move(dm);
    doc["series_product"] = series_ok;
    doc["matches_recursion"] = sym_ok;
    if (eq9_imax >= 0)
        doc["eq9"] = Json{{"imax", eq9_imax}, {"status", expansion_ok ? "pass" : "fail"}};
    bool ok = series_ok && sym_ok && expansion_ok;
    doc["ok"] = ok;
    if (as_json) {
        emit(doc);
    } else {
        std::cout << "dims_plus =" ;
        for (const auto& d : plus) std::cout << " " << d.get_str();
        std::cout << "\ndims_minus =";
        for (const auto& d : minus) std::cout << " " << d.get_str();
        std::cout << "\nseries product: " << (series_ok ? "pass" : "fail")
                  << "\nrecursion match: " << (sym_ok ? "pass" : "fail") << "\n";
        if (eq9_imax >= 0)
            std::cout << "product expansion (imax " << eq9_imax
                      << "): " << (expansion_ok ? "pass" : "fail") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_act(const std::string& path, const std::string& word,
            const std::string& index, const std::string& cexpr, bool negate,
            bool as_json) {
    TLInstance inst = load_instance_file(path);
    std::string how;
    FieldElement c = resolve_c(inst, cexpr, negate, &how);
    PairingContext ctx(inst, c);
    LinComb a = parse_lincomb(inst.field, inst.n, word);

    std::vector<int> digits;
    for (const auto& part : [&] {
             std::vector<std::string> out;
             std::string cur;
             for (char ch : index) {
                 if (ch == ',') {
                     out.push_back(cur);
                     cur.clear();
                 } else if (!isspace(static_cast<unsigned char>(ch))) {
                     cur.push_back(ch);
                 }
             }
             out.push_back(cur);
             return out;
         }()) {
        if (part.empty() || part.size() > 2 ||
            part.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("basis index \"" + part + "\" is not a valid index");
        int v = std::stoi(part);
        if (v < 1 || v > inst.n)
            throw ParseError("basis index " + part + " out of range 1.." +
                             std::to_string(inst.n));
        digits.push_back(v - 1);
    }
    int m = int(digits.size());
    if (m > 4) throw GuardError("action guarded to at most 4 tensor factors");

    SparseVec xi;
    xi.terms.emplace_back(pack_index(digits, inst.n), inst.field.one());
    SparseVec res = ctx.act(a, xi, m);

    auto basis_str = [&](uint64_t idx) {
        std::vector<int> d = unpack_index(idx, inst.n, m);
        std::string out = "x[";
        for (int t = 0; t < m; ++t) {
            if (t) out += ",";
            out += std::to_string(d[t] + 1);
        }
        return out + "]";
    };

    Json doc;
    doc["c"] = c.str();
    doc["c_source"] = how;
    Json terms = Json::array();
    std::string text;
    for (const auto& [idx, coef] : res.terms) {
        Json tj;
        tj["basis"] = basis_str(idx);
        tj["coeff"] = coef.str();
        terms.push_back(std::move(tj));
        if (!text.empty()) text += " + ";
        text += "(" + coef.str() + ")*" + basis_str(idx);
    }
    if (text.empty()) text = "0";
    doc["value"] = text;
    doc["terms"] = std::move(terms);
    if (as_json) emit(doc);
    else std::cout << "value = " << text << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for even Temperley-Lieb symmetries, their canonical "
                 "pairing, determinant descent, Gram certificates, and dimension "
                 "series"};
    app.require_subcommand(1);

    std::string path, word_a, word_b, basis_index, cexpr, sigma_spec;
    bool as_json = false, negate_c = false, dump_matrix = false, closed_form = false;
    VerifyOptions vopt;
    ScanOptions sopt;
    int lmax = 4, eq9_imax = -1;

    auto* construct = app.add_subcommand("construct", "validate an instance file and "
                                                      "echo its canonical form");
    construct->add_option("instance", path, "instance JSON file")->required();

    auto* verify = app.add_subcommand("verify", "run the full check battery");
    verify->add_option("instance", path)->required();
    verify->add_flag("--json", as_json, "emit the JSON report");
    verify->add_option("--wd-degree", vopt.well_def_degree,
                       "word degree for well-definedness");
    verify->add_option("--eq2-degree", vopt.counit_degree,
                       "word degree for the determinant counit identity");
    verify->add_option("--arity", vopt.tl_arity, "tensor factors for the projector "
                                                 "relations");
    verify->add_option("--lmax", vopt.poincare_lmax, "dimension table depth");
    verify->add_option("--imax", vopt.expansion_imax, "product expansion range");
    verify->add_flag("--force-wd", vopt.force_well_def,
                     "run well-definedness even for n >= 4");
    verify->add_flag("--force-ideal", vopt.force_ideal,
                     "run ideal membership even for n = 4");
    verify->add_flag("--negate-c", vopt.negate_c, "pick the other square root for c");
    verify->add_option("--seed", vopt.seed, "echoed in the report");

    auto* pair = app.add_subcommand("pair", "evaluate the pairing of two elements");
    pair->add_option("instance", path)->required();
    pair->add_option("left", word_a, "left element")->required();
    pair->add_option("right", word_b, "right element")->required();
    pair->add_option("--c", cexpr, "normalization (default: canonical, else 1)");
    pair->add_flag("--negate-c", negate_c);
    pair->add_flag("--json", as_json);

    auto* gram = app.add_subcommand("gram", "Gram matrix of the generators");
    gram->add_option("instance", path)->required();
    gram->add_option("--c", cexpr, "normalization (default: canonical, else 1)");
    gram->add_flag("--negate-c", negate_c);
    gram->add_flag("--dump-matrix", dump_matrix, "include all entries");
    gram->add_flag("--closed-form", closed_form, "check the factored determinant");
    gram->add_flag("--json", as_json);

    auto* scan = app.add_subcommand("scan", "numeric nondegeneracy scan over "
                                            "admissible weights");
    scan->add_option("--n", sopt.n, "matrix size")->required();
    scan->add_option("--samples", sopt.samples, "number of weight tuples");
    scan->add_option("--seed", sopt.seed, "RNG seed");
    scan->add_option("--tol", sopt.tol, "threshold coefficient");
    scan->add_option("--bits", sopt.bits, "float precision");
    scan->add_option("--sigma", sigma_spec, "complex sigma as re,im");
    scan->add_flag("--plant-zq", sopt.plant_z_eq_q, "plant z_1 = q in every sample");
    scan->add_flag("--json", as_json);

    auto* poincare = app.add_subcommand("poincare", "dimension tables of the two "
                                                    "quadratic algebras");
    poincare->add_option("instance", path)->required();
    poincare->add_option("--lmax", lmax, "table depth");
    poincare->add_option("--check-eq9", eq9_imax, "also check the product expansion "
                                                  "up to this index");
    poincare->add_flag("--json", as_json);

    auto* act = app.add_subcommand("act", "right action on a tensor basis vector");
    act->add_option("instance", path)->required();
    act->add_option("element", word_a, "acting element")->required();
    act->add_option("index", basis_index, "basis multi-index, e.g. 1,2")->required();
    act->add_option("--c", cexpr, "normalization (default: canonical, else 1)");
    act->add_flag("--negate-c", negate_c);
    act->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) {
            emit(echo_instance(load_instance_file(path)));
            return 0;
        }
        if (verify->parsed()) return cmd_verify(path, vopt, as_json);
        if (pair->parsed())
            return cmd_pair(path, word_a, word_b, cexpr, negate_c, as_json);
        if (gram->parsed())
            return cmd_gram(path, cexpr, negate_c, dump_matrix, closed_form, as_json);
        if (scan->parsed()) {
            if (!sigma_spec.empty()) {
                auto comma = sigma_spec.find(',');
                if (comma == std::string::npos)
                    throw ParseError("--sigma expects re,im");
                sopt.sigma_re = std::stod(sigma_spec.substr(0, comma));
                sopt.sigma_im = std::stod(sigma_spec.substr(comma + 1));
            }
            return cmd_scan(sopt, as_json);
        }
        if (poincare->parsed()) return cmd_poincare(path, lmax, eq9_imax, as_json);
        if (act->parsed())
            return cmd_act(path, word_a, basis_index, cexpr, negate_c, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
