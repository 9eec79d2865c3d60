#include "tlq/ratfunc.hpp"

#include "tlq/errors.hpp"

namespace tlq {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (!g.is_constant()) {
        num = Poly::divexact(num, g);
        den = Poly::divexact(den, g);
    }
    Rational lead = den.leading();
    num_ = num.mul_scalar(Rational(1) / lead);
    den_ = den.mul_scalar(Rational(1) / lead);
}

bool RatFunc::is_one() const { return den_.degree() == 0 && num_ == den_; }

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // cross-reduce before multiplying to keep degrees low
    Poly g1 = Poly::gcd(a.num_, b.den_);
    Poly g2 = Poly::gcd(b.num_, a.den_);
    Poly n1 = g1.is_constant() ? a.num_ : Poly::divexact(a.num_, g1);
    Poly d2 = g1.is_constant() ? b.den_ : Poly::divexact(b.den_, g1);
    Poly n2 = g2.is_constant() ? b.num_ : Poly::divexact(b.num_, g2);
    Poly d1 = g2.is_constant() ? a.den_ : Poly::divexact(a.den_, g2);
    RatFunc r;
    Poly num = n1 * n2, den = d1 * d2;
    Rational lead = den.leading();
    r.num_ = num.mul_scalar(Rational(1) / lead);
    r.den_ = den.mul_scalar(Rational(1) / lead);
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero rational function");
    RatFunc r;
    Rational lead = num_.leading();
    r.num_ = den_.mul_scalar(Rational(1) / lead);
    r.den_ = num_.mul_scalar(Rational(1) / lead);
    return r;
}

bool RatFunc::operator<(const RatFunc& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0)
        throw PoleError("denominator " + den_.str() + " vanishes at s=" + to_string(x));
    return num_.eval(x) / d;
}

std::optional<RatFunc> RatFunc::sqrt_exact() const {
    if (is_zero()) return RatFunc();
    auto rn = num_.sqrt_exact();
    if (!rn) return std::nullopt;
    auto rd = den_.sqrt_exact();
    if (!rd) return std::nullopt;
    RatFunc r;
    r.num_ = *rn;
    r.den_ = *rd;  // monic since den_ is monic and its sqrt is chosen monic-positive
    return r;
}

RatFunc::SquareSplit RatFunc::square_split() const {
    if (is_zero()) throw Error("square_split of zero");
    auto sn = num_.square_split();
    auto sd = den_.square_split();
    // num/den = (sfn*rn^2)/(sfd*rd^2) = (sfn*sfd) * (rn/(rd*sfd))^2
    Poly delta = sn.squarefree * sd.squarefree;
    Rational f;
    Poly delta_prim = delta.primitive_part(&f);
    // delta = f * delta_prim; fold sqrt(|f|) into the root when f is a square
    RatFunc root(sn.square_root, sd.square_root * sd.squarefree);
    if (auto fr = rational_sqrt(f)) {
        return {delta_prim, root * RatFunc(*fr)};
    }
    return {delta, root};
}

std::string RatFunc::str() const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace tlq
