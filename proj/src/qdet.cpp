#include "tlq/qdet.hpp"

#include "tlq/errors.hpp"

namespace tlq {

LinComb build_det(const TLInstance& inst) {
    LinComb det(inst.field);
    int n = inst.n;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            det.add_term({{k, i}, {n + 1 - k, n + 1 - i}},
                         inst.u[i - 1] * inst.v[k - 1]);
    return det;
}

MNPair mn_matrices(const TLInstance& inst) {
    const Field& f = inst.field;
    int n = inst.n;
    Matrix m(f, n, n), nn(f, n, n), u(f, n, n), v(f, n, n);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            FieldElement mv = f.zero(), nv = f.zero();
            for (int i = 1; i <= n; ++i) {
                mv += inst.u_entry(i, k) * inst.v_entry(l, i);
                nv += inst.u_entry(k, i) * inst.v_entry(i, l);
            }
            m.set(k - 1, l - 1, mv);
            nn.set(k - 1, l - 1, nv);
            u.set(k - 1, l - 1, inst.u_entry(k, l));
            v.set(k - 1, l - 1, inst.v_entry(k, l));
        }
    if (!(m == v * u) || !(nn == u * v))
        throw GuardError("index contraction disagrees with the product form");
    return {m, nn};
}

bool mn_product_identity(const TLInstance& inst) {
    auto [m, n] = mn_matrices(inst);
    Matrix want = Matrix::identity(inst.field, inst.n).scaled(inst.lambda);
    return m * n == want && n * m == want;
}

std::optional<FieldElement> centrality_criterion(const TLInstance& inst) {
    auto [m, n] = mn_matrices(inst);
    auto scalar = m.as_scalar();
    if (!scalar || !(m == n)) return std::nullopt;
    if (!(*scalar * *scalar == inst.lambda))
        throw GuardError("scalar M with m^2 != q/(1+q)^2");
    return scalar;
}

namespace {

bool negative_leading(const RatFunc& r) {
    return r.num().leading() < 0;
}

// canonical root: leading numerator coefficient of the first nonzero
// component positive
bool negative_leading(const FieldElement& x) {
    switch (x.kind()) {
        case FieldKind::rational:
            return x.as_rational() < 0;
        case FieldKind::ratfunc_sigma:
            return negative_leading(x.as_ratfunc());
        case FieldKind::quad_ext: {
            const auto& v = x.as_quadext();
            if (!v.a.is_zero()) return negative_leading(v.a);
            return negative_leading(v.b);
        }
        case FieldKind::complex_float: {
            const auto& z = x.as_complex();
            int sr = z.re().sign();
            if (sr != 0) return sr < 0;
            return z.im().sign() < 0;
        }
    }
    return false;
}

}  // namespace

FieldElement compute_c(const TLInstance& inst, bool negate) {
    auto scalar = centrality_criterion(inst);
    if (!scalar)
        throw GuardError(
            "M is not scalar, so the determinant is not group-like and no "
            "canonical c exists");
    const Field& f = inst.field;
    FieldElement m = *scalar;
    FieldElement csq = -(inst.q * (f.one() + inst.q) * m).inv();
    auto root = csq.sqrt_in_field();
    if (!root) {
        throw FieldExtensionError(
            "c^2 = " + csq.str() + " has no square root in " + f.describe() +
            "; rebuild the instance over the quadratic extension with delta = -1");
    }
    FieldElement c = negative_leading(*root) ? -*root : *root;
    if (!((c * c * inst.q * (f.one() + inst.q) * m + f.one()).is_zero()))
        throw GuardError("computed c fails its defining relation");
    return negate ? -c : c;
}

bool det_pairing_check(const TLInstance& inst, const FieldElement& c) {
    PairingContext ctx(inst, c);
    const Field& f = inst.field;
    LinComb det = build_det(inst);
    auto [m, n] = mn_matrices(inst);
    FieldElement scale = -(c * c * inst.q * (f.one() + inst.q));
    for (int k = 1; k <= inst.n; ++k)
        for (int l = 1; l <= inst.n; ++l) {
            LinComb g = LinComb::generator(f, k, l);
            if (ctx.pair(g, det) != scale * m.at(k - 1, l - 1)) return false;
            if (ctx.pair(det, g) != scale * n.at(k - 1, l - 1)) return false;
        }
    return true;
}

bool descent_check(const TLInstance& inst, const FieldElement& c) {
    PairingContext ctx(inst, c);
    const Field& f = inst.field;
    LinComb det = build_det(inst);
    for (int k = 1; k <= inst.n; ++k)
        for (int l = 1; l <= inst.n; ++l) {
            LinComb g = LinComb::generator(f, k, l);
            FieldElement want = k == l ? f.one() : f.zero();
            if (ctx.pair(g, det) != want) return false;
            if (ctx.pair(det, g) != want) return false;
        }
    return true;
}

bool det_counit_check(const TLInstance& inst, const FieldElement& c, int max_len) {
    PairingContext ctx(inst, c);
    LinComb det = build_det(inst);
    int n = inst.n;
    for (int len = 0; len <= max_len; ++len) {
        uint64_t count = 1;
        for (int t = 0; t < 2 * len; ++t) {
            count *= uint64_t(n);
            if (count > (1u << 24)) throw GuardError("counit check degree too large");
        }
        for (uint64_t wi = 0; wi < count; ++wi) {
            Word w(len);
            uint64_t x = wi;
            for (int t = len; t-- > 0;) {
                int up = int(x % n) + 1;
                x /= n;
                int lo = int(x % n) + 1;
                x /= n;
                w[t] = {lo, up};
            }
            FieldElement eps = ctx.counit(w);
            LinComb wc(inst.field);
            wc.add_term(w, inst.field.one());
            if (ctx.pair(det, wc) != eps) return false;
            if (ctx.pair(wc, det) != eps) return false;
        }
    }
    return true;
}

namespace {

uint64_t word_index(const Word& w, int n) {
    uint64_t idx = 0;
    for (const auto& [i, j] : w)
        idx = idx * uint64_t(n) * n + uint64_t(i - 1) * n + (j - 1);
    return idx;
}

SparseVec to_sparse(const LinComb& x, int n) {
    std::map<uint64_t, FieldElement> acc;
    for (const auto& [w, c] : x.terms()) {
        uint64_t idx = word_index(w, n);
        auto it = acc.find(idx);
        if (it == acc.end()) acc.emplace(idx, c);
        else it->second += c;
    }
    SparseVec v;
    for (auto& [idx, c] : acc)
        if (!c.is_zero()) v.terms.emplace_back(idx, c);
    return v;
}

}  // namespace

bool ideal_membership_check(const TLInstance& inst) {
    if (inst.n > 4)
        throw GuardError("degree-3 ideal membership is guarded to n <= 4");
    const Field& f = inst.field;
    int n = inst.n;
    PairingContext ctx(inst, f.one());
    LinComb det = build_det(inst);

    Echelon span(f);
    for (const auto& ridx : ctx.nonzero_relator_indices()) {
        LinComb rel = ctx.rtt_relator(ridx[0], ridx[1], ridx[2], ridx[3]);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                LinComb g = LinComb::generator(f, i, j);
                span.insert(to_sparse(rel * g, n));
                span.insert(to_sparse(g * rel, n));
            }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            LinComb g = LinComb::generator(f, i, j);
            if (!span.reduce(to_sparse(det * g - g * det, n)).is_zero())
                return false;
        }
    return true;
}

}  // namespace tlq
