#include "tlq/tensorop.hpp"

#include "tlq/errors.hpp"

namespace tlq {

uint64_t pack_index(const std::vector<int>& digits, int n) {
    uint64_t p = 0;
    for (int d : digits) {
        if (d < 0 || d >= n) throw GuardError("tensor index digit out of range");
        p = p * uint64_t(n) + uint64_t(d);
    }
    return p;
}

std::vector<int> unpack_index(uint64_t packed, int n, int arity) {
    std::vector<int> d(arity);
    for (int i = arity - 1; i >= 0; --i) {
        d[i] = int(packed % uint64_t(n));
        packed /= uint64_t(n);
    }
    return d;
}

TensorOperator::TensorOperator(Field f, int n, int arity)
    : field_(std::move(f)), n_(n), arity_(arity) {
    if (n < 1 || arity < 0) throw GuardError("bad tensor operator shape");
    if (dim() >= (uint64_t(1) << 32)) throw GuardError("tensor space too large");
}

uint64_t TensorOperator::dim() const {
    uint64_t d = 1;
    for (int i = 0; i < arity_; ++i) d *= uint64_t(n_);
    return d;
}

TensorOperator TensorOperator::identity(Field f, int n, int arity) {
    TensorOperator t(std::move(f), n, arity);
    FieldElement one = t.field_.one();
    for (uint64_t i = 0; i < t.dim(); ++i) t.coeffs_.emplace((i << 32) | i, one);
    return t;
}

void TensorOperator::set(const std::vector<int>& in, const std::vector<int>& out,
                         FieldElement v) {
    if (int(in.size()) != arity_ || int(out.size()) != arity_)
        throw GuardError("tensor index arity mismatch");
    uint64_t key = (pack_index(in, n_) << 32) | pack_index(out, n_);
    if (v.is_zero())
        coeffs_.erase(key);
    else
        coeffs_[key] = std::move(v);
}

void TensorOperator::add_to(uint64_t in, uint64_t out, const FieldElement& v) {
    if (v.is_zero()) return;
    uint64_t key = (in << 32) | out;
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, v);
    } else {
        it->second = it->second + v;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

FieldElement TensorOperator::coeff_packed(uint64_t in, uint64_t out) const {
    auto it = coeffs_.find((in << 32) | out);
    return it == coeffs_.end() ? field_.zero() : it->second;
}

FieldElement TensorOperator::coeff(const std::vector<int>& in,
                                   const std::vector<int>& out) const {
    return coeff_packed(pack_index(in, n_), pack_index(out, n_));
}

TensorOperator TensorOperator::operator+(const TensorOperator& o) const {
    if (n_ != o.n_ || arity_ != o.arity_) throw GuardError("tensor operator shape mismatch");
    TensorOperator r = *this;
    for (const auto& [k, v] : o.coeffs_) r.add_to(k >> 32, k & 0xffffffffu, v);
    return r;
}

TensorOperator TensorOperator::operator-(const TensorOperator& o) const {
    if (n_ != o.n_ || arity_ != o.arity_) throw GuardError("tensor operator shape mismatch");
    TensorOperator r = *this;
    for (const auto& [k, v] : o.coeffs_) r.add_to(k >> 32, k & 0xffffffffu, -v);
    return r;
}

TensorOperator TensorOperator::scaled(const FieldElement& c) const {
    TensorOperator r(field_, n_, arity_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : coeffs_) {
        FieldElement t = v * c;
        if (!t.is_zero()) r.coeffs_.emplace(k, std::move(t));
    }
    return r;
}

TensorOperator TensorOperator::compose_after(const TensorOperator& first) const {
    if (n_ != first.n_ || arity_ != first.arity_)
        throw GuardError("tensor operator shape mismatch in composition");
    // (this . first)_{i}^{k} = sum_j first_i^j this_j^k
    TensorOperator r(field_, n_, arity_);
    for (const auto& [fk, fv] : first.coeffs_) {
        uint64_t i = fk >> 32, j = fk & 0xffffffffu;
        auto lo = coeffs_.lower_bound(j << 32);
        auto hi = coeffs_.lower_bound((j + 1) << 32);
        for (auto it = lo; it != hi; ++it)
            r.add_to(i, it->first & 0xffffffffu, fv * it->second);
    }
    return r;
}

bool TensorOperator::operator==(const TensorOperator& o) const {
    if (n_ != o.n_ || arity_ != o.arity_) return false;
    if (coeffs_.size() != o.coeffs_.size()) return false;
    auto it = o.coeffs_.begin();
    for (const auto& [k, v] : coeffs_) {
        if (it->first != k || !(it->second == v)) return false;
        ++it;
    }
    return true;
}

TensorOperator TensorOperator::lift(int pos, int target_arity) const {
    if (pos < 0 || pos + arity_ > target_arity)
        throw GuardError("lift position out of range");
    TensorOperator r(field_, n_, target_arity);
    int left = pos, right = target_arity - pos - arity_;
    uint64_t nl = 1, nr = 1, nm = 1;
    for (int i = 0; i < left; ++i) nl *= uint64_t(n_);
    for (int i = 0; i < right; ++i) nr *= uint64_t(n_);
    for (int i = 0; i < arity_; ++i) nm *= uint64_t(n_);
    for (uint64_t a = 0; a < nl; ++a)
        for (const auto& [k, v] : coeffs_) {
            uint64_t in = k >> 32, out = k & 0xffffffffu;
            uint64_t base_in = (a * nm + in) * nr, base_out = (a * nm + out) * nr;
            for (uint64_t b = 0; b < nr; ++b)
                r.coeffs_.emplace(((base_in + b) << 32) | (base_out + b), v);
        }
    return r;
}

Matrix TensorOperator::as_matrix() const {
    uint64_t d = dim();
    Matrix m(field_, size_t(d), size_t(d));
    for (const auto& [k, v] : coeffs_) m.set(size_t(k & 0xffffffffu), size_t(k >> 32), v);
    return m;
}

std::vector<SparseVec> TensorOperator::columns() const {
    std::vector<SparseVec> cols;
    auto it = coeffs_.begin();
    while (it != coeffs_.end()) {
        uint64_t in = it->first >> 32;
        SparseVec col;  // map order gives ascending out within fixed in
        while (it != coeffs_.end() && (it->first >> 32) == in) {
            col.terms.emplace_back(it->first & 0xffffffffu, it->second);
            ++it;
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

SparseVec TensorOperator::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [in, c] : v.terms) {
        auto lo = coeffs_.lower_bound(in << 32);
        auto hi = coeffs_.lower_bound((in + 1) << 32);
        SparseVec img;
        for (auto it = lo; it != hi; ++it)
            img.terms.emplace_back(it->first & 0xffffffffu, it->second);
        out = sparse_axpy(out, c, img);
    }
    return out;
}

CheckResult operators_equal_check(const TensorOperator& lhs, const TensorOperator& rhs) {
    TensorOperator d = lhs - rhs;
    if (d.is_zero()) return {true, std::nullopt};
    uint64_t k = d.raw().begin()->first;
    uint64_t in = k >> 32, out = k & 0xffffffffu;
    Witness w;
    w.in = unpack_index(in, lhs.local_dim(), lhs.arity());
    w.out = unpack_index(out, lhs.local_dim(), lhs.arity());
    w.lhs = lhs.coeff_packed(in, out).str();
    w.rhs = rhs.coeff_packed(in, out).str();
    return {false, std::move(w)};
}

CheckResult ybe_check(const TensorOperator& s) {
    if (s.arity() != 2) throw GuardError("braid check requires an arity-2 operator");
    TensorOperator s12 = s.lift(0, 3), s23 = s.lift(1, 3);
    TensorOperator lhs = s12.compose_after(s23.compose_after(s12));
    TensorOperator rhs = s23.compose_after(s12.compose_after(s23));
    return operators_equal_check(lhs, rhs);
}

CheckResult hecke_check(const TensorOperator& s, const FieldElement& q) {
    if (s.arity() != 2) throw GuardError("quadratic relation check requires an arity-2 operator");
    TensorOperator id = TensorOperator::identity(s.field(), s.local_dim(), 2);
    TensorOperator a = id + s;
    TensorOperator b = id.scaled(q) - s;
    TensorOperator prod = a.compose_after(b);
    TensorOperator zero(s.field(), s.local_dim(), 2);
    return operators_equal_check(prod, zero);
}

TensorOperator hecke_projector(const TensorOperator& s, const FieldElement& q) {
    TensorOperator id = TensorOperator::identity(s.field(), s.local_dim(), s.arity());
    FieldElement one = s.field().one();
    return (id.scaled(q) - s).scaled((one + q).inv());
}

}  // namespace tlq
