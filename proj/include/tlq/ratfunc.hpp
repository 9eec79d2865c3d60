#pragma once

#include <optional>
#include <string>

#include "tlq/poly.hpp"

namespace tlq {

/// Rational function in s over Q. Canonical form: numerator and denominator
/// coprime, denominator monic, zero represented as 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}
    explicit RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RatFunc(long c) : num_(c), den_(Rational(1)) {}

    static RatFunc sigma() { return RatFunc(Poly::sigma()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inv() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const;

    /// Exact evaluation; throws PoleError if the denominator vanishes at x.
    Rational eval(const Rational& x) const;

    /// Exact square root when one exists in Q(s).
    std::optional<RatFunc> sqrt_exact() const;

    /// Write *this = delta * h^2 with delta a squarefree polynomial
    /// (integer-primitive) and h in Q(s). Requires *this nonzero.
    struct SquareSplit;
    SquareSplit square_split() const;

    std::string str() const;

private:
    Poly num_, den_;
};

struct RatFunc::SquareSplit {
    Poly delta;
    RatFunc root;
};

}  // namespace tlq
