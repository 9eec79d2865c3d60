#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlq/linalg.hpp"
#include "tlq/matrix.hpp"

namespace tlq {

/// Packs digits (most significant first) in base n.
uint64_t pack_index(const std::vector<int>& digits, int n);
std::vector<int> unpack_index(uint64_t packed, int n, int arity);

/// A linear operator on (C^n)^{tensor arity}, stored sparsely as coefficients
/// T_{in}^{out}: T(x_in) = sum_out T_{in}^{out} x_out.
class TensorOperator {
public:
    TensorOperator(Field f, int n, int arity);

    static TensorOperator identity(Field f, int n, int arity);

    const Field& field() const { return field_; }
    int local_dim() const { return n_; }
    int arity() const { return arity_; }
    size_t nnz() const { return coeffs_.size(); }

    void set(const std::vector<int>& in, const std::vector<int>& out, FieldElement v);
    void add_to(uint64_t in, uint64_t out, const FieldElement& v);
    FieldElement coeff(const std::vector<int>& in, const std::vector<int>& out) const;
    FieldElement coeff_packed(uint64_t in, uint64_t out) const;

    TensorOperator operator+(const TensorOperator& o) const;
    TensorOperator operator-(const TensorOperator& o) const;
    TensorOperator scaled(const FieldElement& c) const;
    /// Composition "this after first": (compose(A,B))(x) = A(B(x)).
    TensorOperator compose_after(const TensorOperator& first) const;
    bool operator==(const TensorOperator& o) const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Acts as this operator on factors [pos, pos+arity) of a larger product,
    /// identity elsewhere.
    TensorOperator lift(int pos, int target_arity) const;

    /// Matrix with rows indexed by outputs, columns by inputs.
    Matrix as_matrix() const;

    /// Column space generators: for each input index in the support, the
    /// sparse output combination T(x_in).
    std::vector<SparseVec> columns() const;

    /// Image of a sparse vector under the operator.
    SparseVec apply(const SparseVec& v) const;

    const std::map<uint64_t, FieldElement>& raw() const { return coeffs_; }

private:
    Field field_;
    int n_, arity_;
    std::map<uint64_t, FieldElement> coeffs_;  // key = (in << 32) | out

    uint64_t dim() const;
};

struct Witness {
    std::vector<int> in, out;
    std::string lhs, rhs;
};

struct CheckResult {
    bool ok = false;
    std::optional<Witness> witness;
};

/// Componentwise equality with a witness entry on failure.
CheckResult operators_equal_check(const TensorOperator& lhs, const TensorOperator& rhs);

/// S12 S23 S12 == S23 S12 S23 on three factors.
CheckResult ybe_check(const TensorOperator& s);

/// (id + S)(q id - S) == 0.
CheckResult hecke_check(const TensorOperator& s, const FieldElement& q);

/// (q id - S)/(1+q); idempotent whenever S satisfies the quadratic relation.
TensorOperator hecke_projector(const TensorOperator& s, const FieldElement& q);

}  // namespace tlq
