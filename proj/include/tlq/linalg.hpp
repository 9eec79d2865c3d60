#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tlq/field.hpp"

namespace tlq {

/// Sparse vector: (index, coefficient) pairs sorted by index, coefficients
/// nonzero. The leading entry is the one with the smallest index.
struct SparseVec {
    std::vector<std::pair<uint64_t, FieldElement>> terms;

    bool is_zero() const { return terms.empty(); }
    uint64_t leading_index() const { return terms.front().first; }
    const FieldElement& leading_coeff() const { return terms.front().second; }
};

SparseVec sparse_axpy(const SparseVec& v, const FieldElement& c, const SparseVec& w);
SparseVec sparse_scale(const SparseVec& v, const FieldElement& c);

/// Incremental row-echelon basis of a subspace, pivoted on leading indices.
class Echelon {
public:
    explicit Echelon(Field f) : field_(std::move(f)) {}

    /// Reduces v against the stored rows (eliminating every pivot index).
    SparseVec reduce(SparseVec v) const;

    /// Inserts v if independent of the span so far. Returns true if the
    /// dimension grew.
    bool insert(SparseVec v);

    size_t dim() const { return rows_.size(); }
    const std::map<uint64_t, SparseVec>& rows() const { return rows_; }

private:
    Field field_;
    std::map<uint64_t, SparseVec> rows_;  // pivot index -> row with leading coeff 1
};

size_t rank_of(Field f, const std::vector<SparseVec>& vectors);

/// Basis of span(a) \cap span(b). Indices must be < 2^32.
std::vector<SparseVec> intersect_spans(Field f, const std::vector<SparseVec>& a,
                                       const std::vector<SparseVec>& b);

/// Basis of { x : sum_i x_i v_i = 0 }, as coefficient vectors indexed 0..k-1.
std::vector<SparseVec> kernel_of(Field f, const std::vector<SparseVec>& vectors);

}  // namespace tlq
