#pragma once

#include <vector>

#include "tlq/ratfunc.hpp"
#include "tlq/tensorop.hpp"

namespace tlq {

/// A Temperley-Lieb symmetry datum on C^n: skew-diagonal matrices U, V stored
/// by their nonzero entries u[i] = U(i+1, n-i), v[i] = V(i+1, n-i) (0-based
/// storage, 1-based matrix positions), plus the derived weights
/// z[i] = (1+q) u[i] v[i], with q = s^4 living in the carrier field.
struct TLInstance {
    Field field;
    int n = 0;
    int branch = -1;  // sign attached to sqrt(q) in the scalar reduction
    std::vector<FieldElement> u, v, z;
    bool scalar_M = false;
    FieldElement q, sqrt_q, m, lambda;

    /// Dense 1-based entries of U and V.
    FieldElement u_entry(int i, int j) const;
    FieldElement v_entry(int i, int j) const;
};

/// Validates the defining constraints exactly and assembles the instance.
/// Throws InvalidInstanceError with the violated condition spelled out.
TLInstance build_instance(Field f, int n, int branch, std::vector<FieldElement> u,
                          std::vector<FieldElement> v);

/// S = q id - (1+q) P with P the rank-one piece below.
TensorOperator build_S(const TLInstance& inst);

/// P_{ij}^{kl} = u_{ij} v^{kl}; a projector once tr(U V^t) = 1.
TensorOperator rank_one_projector(const TLInstance& inst);

/// Q = (q id - S)/(1+q), the idempotent generating the diagram algebra.
TensorOperator tl_projector(const TLInstance& inst);

/// Checks t_i^2 = t_i, t_i t_{i+-1} t_i = lambda t_i, and distant
/// commutativity for the lifted projectors on m tensor factors.
CheckResult tl_relations_check(const TLInstance& inst, int m);

/// Multiset {z_i} is stable under x -> q/x.
bool spectrum_involution_check(const TLInstance& inst);

/// All z_i pairwise distinct.
bool simple_spectrum_check(const TLInstance& inst);

/// Whether M = diag(u_{n+1-k} v^k) and N = diag(u_k v^{n+1-k}) are both the
/// scalar branch*s^2/(1+q) times the identity.
bool scalar_M_condition(const TLInstance& inst);

/// Independent matrix-form cross-checks: tr(U V^t) = 1 and N M = lambda id.
struct ConstraintMatrixChecks {
    bool trace_one = false;
    bool product_scalar = false;
};
ConstraintMatrixChecks constraint_matrix_checks(const TLInstance& inst);

/// Re-gauges S by a diagonal change of basis with weights w (all nonzero):
/// entries pick up w_k w_l / (w_i w_j). Preserves the braid and quadratic
/// relations.
TensorOperator conjugate_by_diagonal(const TensorOperator& s,
                                     const std::vector<FieldElement>& w);

/// Scalar-type construction from free inner weights: the caller fixes z_i for
/// the inner pairs i = 2..floor(n/2) (the partner gets q/z_i and an odd middle
/// is forced to branch*s^2); the outer pair solves z + q/z = remainder, which
/// may require adjoining a square root. Returns the carrier field (plain
/// rational functions when the discriminant is a perfect square) and the
/// finished instance with the canonical gauge v = 1 on each pair's high side.
struct ScalarConstruction {
    Field field;
    TLInstance instance;
    Poly delta;  // adjoined discriminant; zero when none was needed
};
ScalarConstruction construct_scalar_instance(int n, int branch,
                                             const std::vector<RatFunc>& inner_z);

/// Derives a scalar-type gauge (u, v) from admissible weights z in the given
/// field: v = 1 on the high side of each pair, v^i = z_i / (branch s^2) on the
/// low side, u_i = z_i / ((1+q) v^i).
TLInstance instance_from_z(Field f, int branch, const std::vector<FieldElement>& z);

}  // namespace tlq
