#include "tlq/matrix.hpp"

#include "tlq/errors.hpp"

namespace tlq {

Matrix::Matrix(Field f, size_t rows, size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(Field f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

const FieldElement& Matrix::at(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_) throw GuardError("matrix index out of range");
    return data_[i * cols_ + j];
}

void Matrix::set(size_t i, size_t j, FieldElement v) {
    if (i >= rows_ || j >= cols_) throw GuardError("matrix index out of range");
    data_[i * cols_ + j] = std::move(v);
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw GuardError("matrix shape mismatch in +");
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw GuardError("matrix shape mismatch in -");
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw GuardError("matrix shape mismatch in *");
    Matrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const FieldElement& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.data_[i * o.cols_ + j] = r.data_[i * o.cols_ + j] + a * b;
            }
        }
    return r;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (!(data_[i] == o.data_[i])) return false;
    return true;
}

FieldElement Matrix::det() const {
    if (rows_ != cols_) throw GuardError("determinant of a non-square matrix");
    if (rows_ == 0) return field_.one();
    if (field_.kind() == FieldKind::complex_float) return det_lu();
    return det_bareiss();
}

FieldElement Matrix::det_bareiss() const {
    const size_t n = rows_;
    std::vector<FieldElement> m = data_;
    auto e = [&](size_t i, size_t j) -> FieldElement& { return m[i * n + j]; };
    FieldElement prev = field_.one();
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && e(piv, k).is_zero()) ++piv;
        if (piv == n) return field_.zero();
        if (piv != k) {
            for (size_t j = k; j < n; ++j) std::swap(e(k, j), e(piv, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                e(i, j) = (e(k, k) * e(i, j) - e(i, k) * e(k, j)) / prev;
            e(i, k) = field_.zero();
        }
        prev = e(k, k);
    }
    FieldElement d = e(n - 1, n - 1);
    return negate ? -d : d;
}

FieldElement Matrix::det_lu() const {
    const size_t n = rows_;
    std::vector<FieldElement> m = data_;
    auto e = [&](size_t i, size_t j) -> FieldElement& { return m[i * n + j]; };
    bool negate = false;
    FieldElement d = field_.one();
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        BigFloat best = e(k, k).as_complex().abs();
        for (size_t i = k + 1; i < n; ++i) {
            BigFloat a = e(i, k).as_complex().abs();
            if (best < a) {
                best = a;
                piv = i;
            }
        }
        if (e(piv, k).is_zero()) return field_.zero();
        if (piv != k) {
            for (size_t j = k; j < n; ++j) std::swap(e(k, j), e(piv, j));
            negate = !negate;
        }
        d = d * e(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            FieldElement f = e(i, k) / e(k, k);
            if (f.is_zero()) continue;
            for (size_t j = k + 1; j < n; ++j) e(i, j) = e(i, j) - f * e(k, j);
        }
    }
    return negate ? -d : d;
}

size_t Matrix::rank() const {
    if (field_.kind() == FieldKind::complex_float)
        throw GuardError("rank is only defined over exact fields");
    std::vector<FieldElement> m = data_;
    auto e = [&](size_t i, size_t j) -> FieldElement& { return m[i * cols_ + j]; };
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t piv = r;
        while (piv < rows_ && e(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (size_t j = c; j < cols_; ++j) std::swap(e(r, j), e(piv, j));
        for (size_t i = r + 1; i < rows_; ++i) {
            if (e(i, c).is_zero()) continue;
            FieldElement f = e(i, c) / e(r, c);
            for (size_t j = c; j < cols_; ++j) e(i, j) = e(i, j) - f * e(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<FieldElement> Matrix::as_scalar() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    const FieldElement& c = at(0, 0);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j) {
                if (!(at(i, j) == c)) return std::nullopt;
            } else if (!at(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    return c;
}

}  // namespace tlq
