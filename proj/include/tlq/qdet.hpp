#pragma once

#include <optional>

#include "tlq/pairing.hpp"

namespace tlq {

/// sum_{i,k} u_i v^k t_k^i t_{n+1-k}^{n+1-i}; its counit is 1.
LinComb build_det(const TLInstance& inst);

struct MNPair {
    Matrix m, n;
};

/// M_k^l = u_{ik} v^{li} and N_k^l = u_{ki} v^{il}; both diagonal, and equal
/// to the matrix products V U and U V respectively (asserted).
MNPair mn_matrices(const TLInstance& inst);

/// M N = N M = q/(1+q)^2 times the identity.
bool mn_product_identity(const TLInstance& inst);

/// Returns the scalar m when M is scalar (equivalently the determinant is
/// central); empty otherwise. Asserts m^2 = q/(1+q)^2 when scalar.
std::optional<FieldElement> centrality_criterion(const TLInstance& inst);

/// The normalization with c^2 = -1/(q (1+q) m), canonical square root;
/// `negate` picks the other root. Throws FieldExtensionError with an
/// actionable message when no root exists in the instance field.
FieldElement compute_c(const TLInstance& inst, bool negate = false);

/// <<t_k^l, det>> = -c^2 q (1+q) M_k^l and <<det, t_k^l>> = -c^2 q (1+q) N_k^l
/// for all k, l; holds whether or not M is scalar.
bool det_pairing_check(const TLInstance& inst, const FieldElement& c);

/// With the canonical c on a scalar instance, det pairs with generators as
/// the identity matrix from both sides.
bool descent_check(const TLInstance& inst, const FieldElement& c);

/// <<det, w>> = counit(w) = <<w, det>> for every word with |w| <= max_len.
bool det_counit_check(const TLInstance& inst, const FieldElement& c, int max_len);

/// det g - g det lies in the span of { r g', g' r } over relators r and
/// generators g', checked in degree 3 for every generator g. Guarded to
/// n <= 4.
bool ideal_membership_check(const TLInstance& inst);

}  // namespace tlq
