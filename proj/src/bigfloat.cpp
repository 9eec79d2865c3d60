#include "tlq/bigfloat.hpp"

#include <algorithm>
#include <cmath>

#include "tlq/errors.hpp"

namespace tlq {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("malformed numeric literal: '" + s + "'");
    return r;
}

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw DivisionByZeroError("BigFloat division by zero");
    BigFloat r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    if (sign() < 0) throw Error("BigFloat::sqrt of a negative value");
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(size_t digits) const {
    if (digits == 0)
        digits = static_cast<size_t>(std::ceil(static_cast<double>(prec()) * 0.30103)) + 2;
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    if (mpfr_zero_p(v_)) return "0";
    bool neg = mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "");
    out += body.substr(0, 1) + "." + body.substr(1) + "e" + std::to_string(static_cast<long>(e - 1));
    return out;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) { return a * b.inv(); }

BigComplex BigComplex::operator-() const { return {-re_, -im_}; }

BigComplex BigComplex::inv() const {
    if (is_zero()) throw DivisionByZeroError("BigComplex inverse of zero");
    BigFloat n = re_ * re_ + im_ * im_;
    return {re_ / n, (-im_) / n};
}

BigFloat BigComplex::abs() const {
    BigFloat n = re_ * re_ + im_ * im_;
    return n.sqrt();
}

BigComplex BigComplex::sqrt() const {
    // principal branch: re(result) >= 0
    BigFloat r = abs();
    BigFloat two(2.0, prec());
    BigFloat sr = ((r + re_) / two).sqrt();
    BigFloat si = ((r - re_) / two).sqrt();
    if (im_.sign() < 0) si = -si;
    return {sr, si};
}

BigComplex BigComplex::pow(long e) const {
    BigComplex base(*this);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    BigComplex r(Rational(1), prec());
    while (k) {
        if (k & 1ul) r = r * base;
        base = base * base;
        k >>= 1ul;
    }
    return invert ? r.inv() : r;
}

std::string BigComplex::str(size_t digits) const {
    return "(" + re_.str(digits) + "," + im_.str(digits) + ")";
}

}  // namespace tlq
