#pragma once

#include <vector>

#include "tlq/tensorop.hpp"

namespace tlq {

/// dims[l] for l = 0..lmax of the quadratic algebra whose relation space is
/// the image of q id - S (sign +1) or id + S (sign -1). Requires S to satisfy
/// the quadratic (Hecke) relation; computed as n^l minus the rank of the
/// degree-l component of the two-sided ideal.
std::vector<Integer> lambda_dims(const TensorOperator& s, const FieldElement& q,
                                 int sign, int lmax);

/// Convolution identity: sum_k (-1)^k plus[l-k] minus[k] = [l == 0].
bool series_product_check(const std::vector<Integer>& plus,
                          const std::vector<Integer>& minus);

/// d_0 = 1, d_1 = n, d_m = n d_{m-1} - d_{m-2}.
Integer sym_dim(int n, int m);

/// d_i d_j = sum over k from |i-j| to i+j in the given step of d_k.
/// Holds with step 2; step 1 is a deliberately refutable variant.
bool product_expansion_check(int n, int imax, int step = 2);

}  // namespace tlq
