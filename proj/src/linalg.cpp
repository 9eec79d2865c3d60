#include "tlq/linalg.hpp"

#include "tlq/errors.hpp"

namespace tlq {

SparseVec sparse_axpy(const SparseVec& v, const FieldElement& c, const SparseVec& w) {
    SparseVec r;
    r.terms.reserve(v.terms.size() + w.terms.size());
    size_t i = 0, j = 0;
    while (i < v.terms.size() || j < w.terms.size()) {
        if (j == w.terms.size() ||
            (i < v.terms.size() && v.terms[i].first < w.terms[j].first)) {
            r.terms.push_back(v.terms[i++]);
        } else if (i == v.terms.size() || w.terms[j].first < v.terms[i].first) {
            FieldElement t = c * w.terms[j].second;
            if (!t.is_zero()) r.terms.emplace_back(w.terms[j].first, std::move(t));
            ++j;
        } else {
            FieldElement t = v.terms[i].second + c * w.terms[j].second;
            if (!t.is_zero()) r.terms.emplace_back(v.terms[i].first, std::move(t));
            ++i;
            ++j;
        }
    }
    return r;
}

SparseVec sparse_scale(const SparseVec& v, const FieldElement& c) {
    SparseVec r;
    if (c.is_zero()) return r;
    r.terms.reserve(v.terms.size());
    for (const auto& [k, x] : v.terms) r.terms.emplace_back(k, c * x);
    return r;
}

SparseVec Echelon::reduce(SparseVec v) const {
    SparseVec out;
    size_t start = 0;
    while (start < v.terms.size()) {
        auto it = rows_.find(v.terms[start].first);
        if (it == rows_.end()) {
            // No pivot on this index: it survives; keep eliminating deeper.
            out.terms.push_back(v.terms[start]);
            ++start;
            continue;
        }
        SparseVec tail;
        tail.terms.assign(v.terms.begin() + start, v.terms.end());
        v = sparse_axpy(tail, -tail.leading_coeff(), it->second);
        start = 0;
    }
    return out;
}

bool Echelon::insert(SparseVec v) {
    // Eliminate only leading entries: each step strictly increases the leading
    // index, so this terminates and leaves a vector whose leading index is not
    // yet a pivot (or zero).
    while (!v.is_zero()) {
        auto it = rows_.find(v.leading_index());
        if (it == rows_.end()) break;
        v = sparse_axpy(v, -v.leading_coeff(), it->second);
    }
    if (v.is_zero()) return false;
    SparseVec row = sparse_scale(v, v.leading_coeff().inv());
    rows_.emplace(row.leading_index(), std::move(row));
    return true;
}

size_t rank_of(Field f, const std::vector<SparseVec>& vectors) {
    Echelon e(std::move(f));
    for (const auto& v : vectors) e.insert(v);
    return e.dim();
}

namespace {
constexpr uint64_t kHalf = uint64_t(1) << 32;
}

std::vector<SparseVec> intersect_spans(Field f, const std::vector<SparseVec>& a,
                                       const std::vector<SparseVec>& b) {
    // Zassenhaus: echelonize rows (x|x) for x in a and (y|0) for y in b inside
    // V(+)V with left indices ordered first. Stored rows supported entirely in
    // the right copy have right half in span(a) \cap span(b), and they span it.
    Echelon e(f);
    for (const auto& x : a) {
        SparseVec w = x;
        for (const auto& [k, c] : x.terms) {
            if (k >= kHalf) throw GuardError("index too large for span intersection");
            w.terms.emplace_back(k + kHalf, c);
        }
        e.insert(std::move(w));
    }
    for (const auto& y : b) e.insert(y);
    std::vector<SparseVec> out;
    for (const auto& [piv, row] : e.rows()) {
        if (piv < kHalf) continue;
        SparseVec v;
        v.terms.reserve(row.terms.size());
        for (const auto& [k, c] : row.terms) v.terms.emplace_back(k - kHalf, c);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SparseVec> kernel_of(Field f, const std::vector<SparseVec>& vectors) {
    // Augment each v_i with a tracking coordinate; relations among the v_i
    // surface as echelon rows supported only in the tracking block.
    Echelon e(f);
    std::vector<SparseVec> out;
    for (size_t i = 0; i < vectors.size(); ++i) {
        SparseVec w = vectors[i];
        for (auto& [k, c] : w.terms) {
            if (k >= kHalf) throw GuardError("index too large for kernel computation");
            (void)c;
        }
        w.terms.emplace_back(kHalf + i, f.one());
        SparseVec red = w;
        while (!red.is_zero()) {
            auto it = e.rows().find(red.leading_index());
            if (it == e.rows().end()) break;
            red = sparse_axpy(red, -red.leading_coeff(), it->second);
        }
        if (!red.is_zero() && red.leading_index() >= kHalf) {
            SparseVec v;
            for (const auto& [k, c] : red.terms) v.terms.emplace_back(k - kHalf, c);
            out.push_back(std::move(v));
        } else {
            e.insert(std::move(red));
        }
    }
    return out;
}

}  // namespace tlq
