#include "tlq/instance_io.hpp"

#include <cctype>
#include <fstream>

#include "tlq/errors.hpp"

namespace tlq {

namespace {

Field field_from_json(const Json& fj) {
    if (!fj.is_object() || !fj.contains("kind") || !fj["kind"].is_string())
        throw InvalidInstanceError("field config must be an object with a \"kind\"");
    std::string kind = fj["kind"].get<std::string>();
    if (kind == "ratfunc-sigma") return Field::ratfunc_sigma();
    if (kind == "quadext") {
        if (!fj.contains("delta") || !fj["delta"].is_string())
            throw InvalidInstanceError("quadext field config needs a \"delta\" string");
        FieldElement d = Field::ratfunc_sigma().parse(fj["delta"].get<std::string>());
        const RatFunc& r = d.as_ratfunc();
        if (!r.is_polynomial())
            throw InvalidInstanceError("delta must be a polynomial in s");
        return Field::quad_ext(r.num());
    }
    if (kind == "complex")
        throw InvalidInstanceError(
            "instances must live over an exact field (ratfunc-sigma or quadext); "
            "the complex backend is only used for numeric scans");
    throw InvalidInstanceError("unknown field kind \"" + kind + "\"");
}

std::vector<FieldElement> elements_from_json(const Field& f, const Json& arr,
                                             const char* name) {
    if (!arr.is_array())
        throw InvalidInstanceError(std::string(name) + " must be an array of strings");
    std::vector<FieldElement> out;
    for (const auto& e : arr) {
        if (!e.is_string())
            throw InvalidInstanceError(std::string(name) + " entries must be strings");
        out.push_back(f.parse(e.get<std::string>()));
    }
    return out;
}

}  // namespace

TLInstance load_instance(const Json& doc) {
    if (!doc.is_object()) throw InvalidInstanceError("instance must be a JSON object");
    for (const char* key : {"n", "field", "u", "v", "branch"})
        if (!doc.contains(key))
            throw InvalidInstanceError(std::string("instance is missing \"") + key + "\"");
    if (!doc["n"].is_number_integer())
        throw InvalidInstanceError("n must be an integer");
    int n = doc["n"].get<int>();
    Field f = field_from_json(doc["field"]);
    std::vector<FieldElement> u = elements_from_json(f, doc["u"], "u");
    std::vector<FieldElement> v = elements_from_json(f, doc["v"], "v");
    if (!doc["branch"].is_string())
        throw InvalidInstanceError("branch must be \"+\" or \"-\"");
    std::string branch = doc["branch"].get<std::string>();
    if (branch != "+" && branch != "-")
        throw InvalidInstanceError("branch must be \"+\" or \"-\"");
    return build_instance(f, n, branch == "+" ? 1 : -1, std::move(u), std::move(v));
}

TLInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInstanceError("cannot open instance file " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInstanceError("invalid JSON in " + path + ": " + e.what());
    }
    return load_instance(doc);
}

Json field_config_json(const Field& f) {
    Json fj;
    switch (f.kind()) {
        case FieldKind::rational:
            fj["kind"] = "rational";
            break;
        case FieldKind::ratfunc_sigma:
            fj["kind"] = "ratfunc-sigma";
            break;
        case FieldKind::quad_ext:
            fj["kind"] = "quadext";
            fj["delta"] = f.delta().str();
            break;
        case FieldKind::complex_float:
            fj["kind"] = "complex";
            fj["bits"] = static_cast<int64_t>(f.bits());
            break;
    }
    return fj;
}

Json echo_instance(const TLInstance& inst) {
    Json doc;
    doc["n"] = inst.n;
    doc["field"] = field_config_json(inst.field);
    Json u = Json::array(), v = Json::array(), z = Json::array();
    for (const auto& e : inst.u) u.push_back(e.str());
    for (const auto& e : inst.v) v.push_back(e.str());
    for (const auto& e : inst.z) z.push_back(e.str());
    doc["u"] = std::move(u);
    doc["v"] = std::move(v);
    doc["branch"] = inst.branch > 0 ? "+" : "-";
    Json derived;
    derived["q"] = inst.q.str();
    derived["z"] = std::move(z);
    derived["scalar_M"] = inst.scalar_M;
    derived["m"] = inst.m.str();
    derived["lambda"] = inst.lambda.str();
    doc["derived"] = std::move(derived);
    return doc;
}

namespace {

// splits at depth-0 separators; '(' and '[' open nesting
std::vector<std::string> split_depth0(const std::string& text, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (depth == 0 && ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Letter parse_generator(const std::string& text, int n) {
    // "t[i,j]"
    size_t close = text.find(']');
    if (close == std::string::npos || close + 1 != text.size())
        throw ParseError("malformed generator \"" + text + "\"; expected t[i,j]");
    std::string inner = text.substr(2, close - 2);
    auto parts = split_depth0(inner, ',');
    if (parts.size() != 2)
        throw ParseError("generator needs two indices: \"" + text + "\"");
    int idx[2];
    for (int t = 0; t < 2; ++t) {
        std::string p = trim(parts[t]);
        if (p.empty() || p.size() > 2 ||
            p.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("generator index \"" + p + "\" is not a valid index");
        idx[t] = std::stoi(p);
        if (idx[t] < 1 || idx[t] > n)
            throw ParseError("generator index " + p + " out of range 1.." +
                             std::to_string(n));
    }
    return {idx[0], idx[1]};
}

}  // namespace

LinComb parse_lincomb(const Field& f, int n, const std::string& text) {
    // carve into signed terms at depth-0 +/- that are not exponent signs
    std::vector<std::pair<int, std::string>> terms;
    int depth = 0, sign = 1;
    std::string cur;
    char prev_sig = 0;  // last non-space character seen
    for (char ch : text) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        bool separator = depth == 0 && (ch == '+' || ch == '-') && prev_sig != 0 &&
                         std::string("*/^+-(,").find(prev_sig) == std::string::npos;
        bool leading_sign = depth == 0 && (ch == '+' || ch == '-') && prev_sig == 0;
        if (separator) {
            terms.emplace_back(sign, cur);
            cur.clear();
            sign = ch == '-' ? -1 : 1;
            prev_sig = 0;
        } else if (leading_sign) {
            sign *= ch == '-' ? -1 : 1;
        } else {
            cur.push_back(ch);
            if (!isspace(static_cast<unsigned char>(ch))) prev_sig = ch;
        }
    }
    terms.emplace_back(sign, cur);

    LinComb out(f);
    for (const auto& [tsign, term] : terms) {
        std::string body = trim(term);
        if (body.empty()) throw ParseError("empty term in \"" + text + "\"");
        FieldElement coeff = tsign < 0 ? -f.one() : f.one();
        Word w;
        for (const auto& raw : split_depth0(body, '*')) {
            std::string factor = trim(raw);
            if (factor.empty()) throw ParseError("empty factor in \"" + body + "\"");
            if (factor.size() >= 2 && factor[0] == 't' && factor[1] == '[')
                w.push_back(parse_generator(factor, n));
            else
                coeff *= f.parse(factor);
        }
        out.add_term(w, coeff);
    }
    return out;
}

}  // namespace tlq
