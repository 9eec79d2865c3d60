#include "tlq/poincare.hpp"

#include <algorithm>
#include <cstdlib>

#include "tlq/errors.hpp"

namespace tlq {

std::vector<Integer> lambda_dims(const TensorOperator& s, const FieldElement& q,
                                 int sign, int lmax) {
    if (s.arity() != 2) throw GuardError("dimension table needs an arity-2 operator");
    if (sign != 1 && sign != -1) throw GuardError("sign must be +1 or -1");
    if (lmax < 0) throw GuardError("lmax must be nonnegative");
    if (!hecke_check(s, q).ok)
        throw GuardError("operator fails the quadratic relation; dimensions undefined");

    const Field& f = s.field();
    int n = s.local_dim();
    uint64_t top = 1;
    for (int l = 0; l < lmax; ++l) {
        top *= uint64_t(n);
        if (top > (1u << 22)) throw GuardError("n^lmax too large for the dimension table");
    }

    TensorOperator id2 = TensorOperator::identity(f, n, 2);
    TensorOperator k = sign > 0 ? id2.scaled(q) - s : id2 + s;

    // small echelonized basis of the relation space Im K
    Echelon rel(f);
    for (const auto& col : k.columns()) rel.insert(col);
    std::vector<SparseVec> basis;
    for (const auto& kv : rel.rows()) basis.push_back(kv.second);

    std::vector<Integer> dims(size_t(lmax) + 1);
    dims[0] = 1;
    if (lmax >= 1) dims[1] = n;
    for (int l = 2; l <= lmax; ++l) {
        uint64_t dim = 1;
        for (int t = 0; t < l; ++t) dim *= uint64_t(n);
        Echelon ideal(f);
        for (int pos = 0; pos + 2 <= l; ++pos) {
            uint64_t left = 1, right = 1;
            for (int t = 0; t < pos; ++t) left *= uint64_t(n);
            for (int t = pos + 2; t < l; ++t) right *= uint64_t(n);
            for (const auto& r : basis)
                for (uint64_t a = 0; a < left; ++a)
                    for (uint64_t b = 0; b < right; ++b) {
                        SparseVec v;
                        v.terms.reserve(r.terms.size());
                        for (const auto& [idx2, coef] : r.terms)
                            v.terms.emplace_back((a * uint64_t(n) * n + idx2) * right + b,
                                                 coef);
                        ideal.insert(std::move(v));
                    }
        }
        dims[size_t(l)] = Integer(dim) - Integer(ideal.dim());
    }
    return dims;
}

bool series_product_check(const std::vector<Integer>& plus,
                          const std::vector<Integer>& minus) {
    if (plus.empty() || minus.empty()) throw GuardError("empty dimension table");
    size_t lmax = std::min(plus.size(), minus.size()) - 1;
    for (size_t l = 0; l <= lmax; ++l) {
        Integer acc = 0;
        for (size_t kk = 0; kk <= l; ++kk) {
            Integer term = plus[l - kk] * minus[kk];
            if (kk % 2) acc -= term;
            else acc += term;
        }
        if (acc != (l == 0 ? 1 : 0)) return false;
    }
    return true;
}

Integer sym_dim(int n, int m) {
    if (m < 0) throw GuardError("negative degree");
    Integer prev = 1, cur = n;
    if (m == 0) return prev;
    for (int t = 2; t <= m; ++t) {
        Integer next = Integer(n) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

bool product_expansion_check(int n, int imax, int step) {
    if (step < 1) throw GuardError("step must be positive");
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; j <= imax; ++j) {
            Integer lhs = sym_dim(n, i) * sym_dim(n, j);
            Integer rhs = 0;
            for (int k = std::abs(i - j); k <= i + j; k += step)
                rhs += sym_dim(n, k);
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace tlq
