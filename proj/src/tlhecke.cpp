#include "tlq/tlhecke.hpp"

#include <algorithm>

#include "tlq/errors.hpp"

namespace tlq {

FieldElement TLInstance::u_entry(int i, int j) const {
    if (i < 1 || i > n || j < 1 || j > n) throw GuardError("matrix entry index out of range");
    return j == n + 1 - i ? u[size_t(i - 1)] : field.zero();
}

FieldElement TLInstance::v_entry(int i, int j) const {
    if (i < 1 || i > n || j < 1 || j > n) throw GuardError("matrix entry index out of range");
    return j == n + 1 - i ? v[size_t(i - 1)] : field.zero();
}

TLInstance build_instance(Field f, int n, int branch, std::vector<FieldElement> u,
                          std::vector<FieldElement> v) {
    if (f.kind() != FieldKind::ratfunc_sigma && f.kind() != FieldKind::quad_ext)
        throw InvalidInstanceError("instances require an exact field containing s, got " +
                                   f.describe());
    if (n < 2 || n > 6) throw InvalidInstanceError("n must be between 2 and 6");
    if (branch != 1 && branch != -1) throw InvalidInstanceError("branch must be +1 or -1");
    if (int(u.size()) != n || int(v.size()) != n)
        throw InvalidInstanceError("u and v must each have exactly n entries");

    TLInstance inst;
    inst.field = f;
    inst.n = n;
    inst.branch = branch;
    inst.q = f.q();
    inst.sqrt_q = f.sqrt_q();
    FieldElement one = f.one(), qp1 = one + inst.q;
    inst.lambda = inst.q / (qp1 * qp1);
    inst.m = f.integer(branch) * inst.sqrt_q / qp1;

    for (int i = 0; i < n; ++i) {
        if (u[size_t(i)].is_zero())
            throw InvalidInstanceError("u entry " + std::to_string(i + 1) + " is zero");
        if (v[size_t(i)].is_zero())
            throw InvalidInstanceError("v entry " + std::to_string(i + 1) + " is zero");
    }
    inst.u = std::move(u);
    inst.v = std::move(v);

    inst.z.reserve(size_t(n));
    FieldElement zsum = f.zero();
    for (int i = 0; i < n; ++i) {
        inst.z.push_back(qp1 * inst.u[size_t(i)] * inst.v[size_t(i)]);
        zsum = zsum + inst.z.back();
    }
    if (!(zsum == qp1))
        throw InvalidInstanceError("weights z must sum to 1+q, got " + zsum.str());
    for (int i = 0; i < n; ++i) {
        FieldElement prod = inst.z[size_t(i)] * inst.z[size_t(n - 1 - i)];
        if (!(prod == inst.q))
            throw InvalidInstanceError("z_" + std::to_string(i + 1) + " * z_" +
                                       std::to_string(n - i) + " must equal q, got " +
                                       prod.str());
    }

    // M = diag(u_{n+1-k} v^k); scalar means every diagonal entry coincides.
    bool scalar = true;
    FieldElement m0 = inst.u[size_t(n - 1)] * inst.v[0];
    for (int k = 1; k < n && scalar; ++k)
        scalar = inst.u[size_t(n - 1 - k)] * inst.v[size_t(k)] == m0;
    if (scalar) {
        if (!(m0 == inst.m))
            throw InvalidInstanceError(
                "M is scalar with value " + m0.str() +
                " which does not match the requested branch value " + inst.m.str());
        inst.scalar_M = true;
    } else if (n % 2 == 1) {
        const FieldElement& zmid = inst.z[size_t((n - 1) / 2)];
        FieldElement want = f.integer(branch) * inst.sqrt_q;
        if (!(zmid == want))
            throw InvalidInstanceError("middle weight z_" + std::to_string((n + 1) / 2) +
                                       " is " + zmid.str() +
                                       " but the requested branch needs " + want.str());
    }
    return inst;
}

TensorOperator build_S(const TLInstance& inst) {
    const Field& f = inst.field;
    int n = inst.n;
    TensorOperator s(f, n, 2);
    FieldElement neg_qp1 = -(f.one() + inst.q);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            uint64_t d = uint64_t(i) * uint64_t(n) + uint64_t(j);
            s.add_to(d, d, inst.q);
        }
    for (int i = 0; i < n; ++i) {
        uint64_t in = uint64_t(i) * uint64_t(n) + uint64_t(n - 1 - i);
        FieldElement row = neg_qp1 * inst.u[size_t(i)];
        for (int k = 0; k < n; ++k) {
            uint64_t out = uint64_t(k) * uint64_t(n) + uint64_t(n - 1 - k);
            s.add_to(in, out, row * inst.v[size_t(k)]);
        }
    }
    return s;
}

TensorOperator rank_one_projector(const TLInstance& inst) {
    const Field& f = inst.field;
    int n = inst.n;
    TensorOperator p(f, n, 2);
    for (int i = 0; i < n; ++i) {
        uint64_t in = uint64_t(i) * uint64_t(n) + uint64_t(n - 1 - i);
        for (int k = 0; k < n; ++k) {
            uint64_t out = uint64_t(k) * uint64_t(n) + uint64_t(n - 1 - k);
            p.add_to(in, out, inst.u[size_t(i)] * inst.v[size_t(k)]);
        }
    }
    return p;
}

TensorOperator tl_projector(const TLInstance& inst) {
    return hecke_projector(build_S(inst), inst.q);
}

CheckResult tl_relations_check(const TLInstance& inst, int m) {
    if (m < 2) throw GuardError("need at least two tensor factors");
    TensorOperator qproj = tl_projector(inst);
    std::vector<TensorOperator> t;
    for (int i = 0; i + 1 < m; ++i) t.push_back(qproj.lift(i, m));
    for (size_t i = 0; i < t.size(); ++i) {
        CheckResult r = operators_equal_check(t[i].compose_after(t[i]), t[i]);
        if (!r.ok) return r;
    }
    for (size_t i = 0; i + 1 < t.size(); ++i) {
        CheckResult r = operators_equal_check(t[i].compose_after(t[i + 1]).compose_after(t[i]),
                                              t[i].scaled(inst.lambda));
        if (!r.ok) return r;
        r = operators_equal_check(t[i + 1].compose_after(t[i]).compose_after(t[i + 1]),
                                  t[i + 1].scaled(inst.lambda));
        if (!r.ok) return r;
    }
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 2; j < t.size(); ++j) {
            CheckResult r = operators_equal_check(t[i].compose_after(t[j]),
                                                  t[j].compose_after(t[i]));
            if (!r.ok) return r;
        }
    return {true, std::nullopt};
}

bool spectrum_involution_check(const TLInstance& inst) {
    std::vector<FieldElement> a = inst.z, b;
    b.reserve(a.size());
    for (const auto& x : a) b.push_back(inst.q / x);
    auto by_order = [](const FieldElement& x, const FieldElement& y) { return x.less(y); };
    std::sort(a.begin(), a.end(), by_order);
    std::sort(b.begin(), b.end(), by_order);
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

bool simple_spectrum_check(const TLInstance& inst) {
    for (size_t i = 0; i < inst.z.size(); ++i)
        for (size_t j = i + 1; j < inst.z.size(); ++j)
            if (inst.z[i] == inst.z[j]) return false;
    return true;
}

bool scalar_M_condition(const TLInstance& inst) {
    int n = inst.n;
    for (int k = 0; k < n; ++k) {
        if (!(inst.u[size_t(n - 1 - k)] * inst.v[size_t(k)] == inst.m)) return false;
        if (!(inst.u[size_t(k)] * inst.v[size_t(n - 1 - k)] == inst.m)) return false;
    }
    return true;
}

ConstraintMatrixChecks constraint_matrix_checks(const TLInstance& inst) {
    const Field& f = inst.field;
    int n = inst.n;
    Matrix U(f, size_t(n), size_t(n)), V(f, size_t(n), size_t(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            U.set(size_t(i - 1), size_t(j - 1), inst.u_entry(i, j));
            V.set(size_t(i - 1), size_t(j - 1), inst.v_entry(i, j));
        }
    Matrix UVt = U * V.transpose();
    FieldElement tr = f.zero();
    for (int i = 0; i < n; ++i) tr = tr + UVt.at(size_t(i), size_t(i));

    Matrix N = U * V, M = V * U;
    Matrix lam = Matrix::identity(f, size_t(n)).scaled(inst.lambda);

    ConstraintMatrixChecks r;
    r.trace_one = tr == f.one();
    r.product_scalar = (N * M == lam) && (M * N == lam);
    return r;
}

TensorOperator conjugate_by_diagonal(const TensorOperator& s,
                                     const std::vector<FieldElement>& w) {
    if (int(w.size()) != s.local_dim()) throw GuardError("weight count must match n");
    for (const auto& x : w)
        if (x.is_zero()) throw GuardError("diagonal weights must be nonzero");
    if (s.arity() != 2) throw GuardError("diagonal re-gauge requires an arity-2 operator");
    int n = s.local_dim();
    TensorOperator r(s.field(), n, 2);
    for (const auto& [key, val] : s.raw()) {
        uint64_t in = key >> 32, out = key & 0xffffffffu;
        size_t i = size_t(in / uint64_t(n)), j = size_t(in % uint64_t(n));
        size_t k = size_t(out / uint64_t(n)), l = size_t(out % uint64_t(n));
        r.add_to(in, out, val * w[k] * w[l] / (w[i] * w[j]));
    }
    return r;
}

TLInstance instance_from_z(Field f, int branch, const std::vector<FieldElement>& z) {
    int n = int(z.size());
    if (n < 2 || n > 6) throw InvalidInstanceError("n must be between 2 and 6");
    FieldElement msq = f.integer(branch) * f.sqrt_q();  // branch * s^2
    FieldElement qp1 = f.one() + f.q();
    std::vector<FieldElement> v(size_t(n), f.one()), u;
    for (int i = 1; 2 * i <= n; ++i) v[size_t(i - 1)] = z[size_t(i - 1)] / msq;
    u.reserve(size_t(n));
    for (int i = 0; i < n; ++i) {
        if (z[size_t(i)].is_zero()) throw InvalidInstanceError("weights z must be nonzero");
        u.push_back(z[size_t(i)] / (qp1 * v[size_t(i)]));
    }
    return build_instance(std::move(f), n, branch, std::move(u), std::move(v));
}

ScalarConstruction construct_scalar_instance(int n, int branch,
                                             const std::vector<RatFunc>& inner_z) {
    if (n < 2 || n > 6) throw InvalidInstanceError("n must be between 2 and 6");
    if (branch != 1 && branch != -1) throw InvalidInstanceError("branch must be +1 or -1");
    size_t want = size_t(n / 2 - 1);
    if (inner_z.size() != want)
        throw InvalidInstanceError("expected " + std::to_string(want) +
                                   " inner weights for n = " + std::to_string(n));

    RatFunc q(Poly::sigma().pow(4)), one(1);
    RatFunc msq(Poly::sigma().pow(2).mul_scalar(Rational(branch)));
    RatFunc rem = one + q;
    for (const auto& zi : inner_z) {
        if (zi.is_zero()) throw InvalidInstanceError("inner weights must be nonzero");
        rem = rem - zi - q / zi;
    }
    if (n % 2 == 1) rem = rem - msq;

    // Outer pair: roots of x^2 - rem x + q.
    RatFunc disc = rem * rem - q * RatFunc(4);
    Field field = Field::ratfunc_sigma();
    Poly delta;
    FieldElement sqrt_disc = field.zero();
    if (!disc.is_zero()) {
        auto split = disc.square_split();  // disc = split.delta * split.root^2
        if (split.delta.degree() == 0) {
            auto r = rational_sqrt(split.delta.coeff(0));
            if (r) {
                sqrt_disc = field.from_ratfunc(split.root * RatFunc(*r));
            } else {
                delta = split.delta;
            }
        } else {
            delta = split.delta;
        }
        if (!delta.is_zero()) {
            field = Field::quad_ext(delta);
            sqrt_disc = field.theta() * field.from_ratfunc(split.root);
        }
    }

    FieldElement rem_f = field.from_ratfunc(rem);
    FieldElement half = field.from_rational(rat(1, 2));
    FieldElement z1 = (rem_f + sqrt_disc) * half;
    if (z1.is_zero()) throw InvalidInstanceError("outer weight came out zero");
    FieldElement zn = field.from_ratfunc(q) / z1;

    std::vector<FieldElement> z(size_t(n), field.zero());
    z[0] = z1;
    z[size_t(n - 1)] = zn;
    for (size_t t = 0; t < inner_z.size(); ++t) {
        z[t + 1] = field.from_ratfunc(inner_z[t]);
        z[size_t(n) - 2 - t] = field.from_ratfunc(q / inner_z[t]);
    }
    if (n % 2 == 1) z[size_t((n - 1) / 2)] = field.from_ratfunc(msq);

    ScalarConstruction out{field, instance_from_z(field, branch, z), delta};
    return out;
}

}  // namespace tlq
