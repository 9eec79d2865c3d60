#pragma once

#include <mpfr.h>

#include <string>

#include "tlq/rational.hpp"

namespace tlq {

/// RAII wrapper around mpfr_t with explicit per-value precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec);
    BigFloat(const Rational& q, mpfr_prec_t prec);
    BigFloat(double d, mpfr_prec_t prec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static BigFloat from_string(const std::string& s, mpfr_prec_t prec);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    bool operator==(const BigFloat& o) const { return mpfr_equal_p(v_, o.v_) != 0; }
    bool operator<(const BigFloat& o) const { return mpfr_less_p(v_, o.v_) != 0; }

    BigFloat abs() const;
    BigFloat sqrt() const;  // requires a nonnegative value

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(size_t digits = 0) const;  // 0: precision-derived digit count

private:
    mpfr_t v_;
};

/// Complex numbers as explicit (re, im) BigFloat pairs.
class BigComplex {
public:
    explicit BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(const Rational& q, mpfr_prec_t prec) : re_(q, prec), im_(mpfr_prec_t(prec)) {}

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    BigComplex operator-() const;

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool operator==(const BigComplex& o) const { return re_ == o.re_ && im_ == o.im_; }

    BigComplex inv() const;
    BigFloat abs() const;       // modulus
    BigComplex sqrt() const;    // principal branch
    BigComplex pow(long e) const;

    std::string str(size_t digits = 0) const;

private:
    BigFloat re_, im_;
};

}  // namespace tlq
