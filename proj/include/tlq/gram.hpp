#pragma once

#include <string>
#include <vector>

#include "tlq/pairing.hpp"

namespace tlq {

/// n^2 x n^2 matrix of <<t_i^j, t_k^l>> with rows (i,j) and columns (k,l) in
/// row-major label order. Each row has at most two nonzero entries: column
/// (j,i) and column (n+1-i, n+1-j).
Matrix build_gram(const TLInstance& inst, const FieldElement& c);

struct GramTwoBlock {
    int i, j;  // row labels (i,j) and (n+1-j, n+1-i); i+j != n+1
    Matrix block;
};

struct GramBlocks {
    /// Row labels (packed (i-1)*n+(j-1)) in block order; the matching column
    /// order swaps each label pair, so G restricted to (row_order, col_order)
    /// is block diagonal.
    std::vector<int> row_order, col_order;
    std::vector<FieldElement> singles;  // entry for row (i, n+1-i), i = 1..n
    std::vector<GramTwoBlock> doubles;  // one per unordered label pair
};

/// Splits the Gram matrix into n one-dimensional blocks and (n^2-n)/2
/// two-dimensional blocks. Throws GuardError if any entry violates the
/// support pattern.
GramBlocks block_decompose(const TLInstance& inst, const FieldElement& c);

FieldElement gram_det(const TLInstance& inst, const FieldElement& c);

/// c^{2 n^2} prod_i (q - z_i)^2 prod_{i+j != n+1} (q^2 - z_{n+1-i} z_j).
FieldElement closed_form_det_sq(const TLInstance& inst, const FieldElement& c);

struct ClosedFormCheck {
    bool det_sq_ok = false;   // det(G)^2 equals the closed form
    bool singles_ok = false;  // single blocks equal c (q - z_{n+1-i})
    bool doubles_ok = false;  // two-blocks have det c^2 (q^2 - z_{n+1-i} z_j)
    bool ok() const { return det_sq_ok && singles_ok && doubles_ok; }
};

ClosedFormCheck closed_form_check(const TLInstance& inst, const FieldElement& c);

struct DegeneracyFactor {
    std::string type;  // "z_eq_q", "pair_product", or "q_special"
    int i = 0, j = 0;
};

/// Exactly vanishing factors of the closed form for this instance.
std::vector<DegeneracyFactor> degeneracy_factors(const TLInstance& inst);

/// Exact test that det G specializes to zero at a rational sigma.
bool gram_det_vanishes_at(const TLInstance& inst, const FieldElement& c,
                          const Rational& sigma0);

struct ScanOptions {
    int n = 3;
    int samples = 100;
    uint64_t seed = 1;
    double tol = 1e-20;  // degenerate iff |det| < tol * Hadamard bound
    unsigned bits = 128;
    double sigma_re = 1.2, sigma_im = 0.35;
    bool plant_z_eq_q = false;  // force z_1 = q in every sample
};

struct ScanFlag {
    int sample = 0;
    std::vector<DegeneracyFactor> factors;
};

struct ScanResult {
    int n = 0;
    int samples = 0;
    uint64_t seed = 0;
    double tol = 0;
    double min_absdet = 0, max_absdet = 0;
    // |det| / Hadamard bound, the scale-free gap actually compared to tol
    double min_ratio = 0, max_ratio = 0;
    int degenerate_count = 0;
    std::vector<ScanFlag> flagged;
};

/// Numeric nondegeneracy scan over admissible weight tuples at a generic
/// complex sigma. Requires n >= 3; the n = 2 family is identically
/// degenerate. For n = 3 the sampler cycles through the four (branch, root)
/// choices of the outer weight.
ScanResult gram_scan(const ScanOptions& opt);

}  // namespace tlq
