#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "tlq/bigfloat.hpp"
#include "tlq/ratfunc.hpp"

namespace tlq {

enum class FieldKind {
    rational,       // Q
    ratfunc_sigma,  // Q(s), with q an alias for s^4
    quad_ext,       // Q(s)[th] / (th^2 - delta)
    complex_float,  // arbitrary-precision complex floats
};

/// Element payload of a quadratic extension: a + b*th.
struct QuadExt {
    RatFunc a, b;
};

struct FieldConfig {
    FieldKind kind;
    Poly delta;                             // quad_ext only
    mpfr_prec_t bits = 0;                   // complex_float only
    std::optional<BigComplex> sigma_value;  // complex_float: numeric value of s
};

class FieldElement;

/// Shared, immutable description of a scalar field. Copies are cheap handles.
class Field {
public:
    Field();  // the rationals
    static Field rationals();
    static Field ratfunc_sigma();
    /// delta must be nonzero and squarefree, and must not be a square in Q(s).
    static Field quad_ext(const Poly& delta);
    static Field complex_floats(unsigned bits);
    static Field complex_floats(unsigned bits, const BigComplex& sigma);

    FieldKind kind() const { return cfg_->kind; }
    const Poly& delta() const;
    mpfr_prec_t bits() const { return cfg_->bits; }
    bool has_sigma_value() const { return cfg_->sigma_value.has_value(); }
    const BigComplex& sigma_value() const;

    /// Structural compatibility: elements of compatible fields interoperate.
    bool compatible(const Field& o) const;
    std::string describe() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement integer(long v) const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement from_ratfunc(const RatFunc& f) const;  // exact sigma-kinds only
    FieldElement from_complex(const BigComplex& z) const;
    FieldElement sigma() const;   // s
    FieldElement q() const;       // s^4
    FieldElement sqrt_q() const;  // s^2
    FieldElement theta() const;   // quad_ext only

    /// Parse the element grammar: rationals, s, q (= s^4), th, + - * / ^ ( ).
    FieldElement parse(const std::string& text) const;

    bool operator==(const Field& o) const { return compatible(o); }
    bool operator!=(const Field& o) const { return !compatible(o); }

private:
    explicit Field(std::shared_ptr<const FieldConfig> cfg) : cfg_(std::move(cfg)) {}
    std::shared_ptr<const FieldConfig> cfg_;
};

/// Immutable field element with value semantics.
class FieldElement {
public:
    using Payload = std::variant<Rational, RatFunc, QuadExt, BigComplex>;

    FieldElement();  // rational zero
    FieldElement(Field f, Payload v);

    const Field& field() const { return f_; }
    FieldKind kind() const { return f_.kind(); }

    bool is_zero() const;
    bool is_one() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inv() const;
    FieldElement pow(long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Total order used for deterministic container keys.
    bool less(const FieldElement& o) const;

    /// Canonical serialization (sorted monomials, reduced monic-denominator
    /// fractions; quad elements as "(a)+(b)*th").
    std::string str() const;

    const Rational& as_rational() const;
    const RatFunc& as_ratfunc() const;
    const QuadExt& as_quadext() const;
    const BigComplex& as_complex() const;

    /// Exact square root within the same field, when one exists.
    std::optional<FieldElement> sqrt_in_field() const;

private:
    Field f_;
    Payload v_;
};

/// Exact evaluation at a rational sigma. Returns a rational-field element
/// when the value is rational; otherwise falls back to a complex-float
/// element with the given precision, taking the principal square root of
/// delta(sigma0) for quadratic extensions.
FieldElement specialize(const FieldElement& x, const Rational& sigma0, unsigned bits = 128);

/// Numeric evaluation at a complex sigma.
FieldElement specialize_complex(const FieldElement& x, const BigComplex& sigma0);

/// Exact test: does x evaluate to zero at the rational sigma0? For quadratic
/// extensions the components are compared against the (possibly irrational)
/// value of th, entirely in rational arithmetic. Exact fields only.
bool vanishes_at(const FieldElement& x, const Rational& sigma0);

}  // namespace tlq
