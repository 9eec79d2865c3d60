#pragma once

#include <optional>
#include <vector>

#include "tlq/field.hpp"

namespace tlq {

/// Dense matrix over a single field. Rows and columns are 0-indexed.
class Matrix {
public:
    Matrix(Field f, size_t rows, size_t cols);

    static Matrix identity(Field f, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const FieldElement& at(size_t i, size_t j) const;
    void set(size_t i, size_t j, FieldElement v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const FieldElement& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;

    /// Exact determinant. Exact fields use fraction-free (Bareiss) elimination;
    /// complex fields use LU with partial pivoting by modulus.
    FieldElement det() const;

    /// Rank by exact elimination. Exact fields only.
    size_t rank() const;

    /// If the matrix equals c*I, returns c.
    std::optional<FieldElement> as_scalar() const;

private:
    Field field_;
    size_t rows_, cols_;
    std::vector<FieldElement> data_;

    FieldElement det_bareiss() const;
    FieldElement det_lu() const;
};

}  // namespace tlq
