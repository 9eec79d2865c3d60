#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlq/rational.hpp"

namespace tlq {

/// Dense univariate polynomial over Q in the indeterminate written "s".
/// Invariant: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c);

    static Poly sigma();  // the generator s
    static Poly from_coeffs(std::vector<Rational> c);  // c[k] multiplies s^k

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int k) const;
    const Rational& leading() const;
    bool is_monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly mul_scalar(const Rational& k) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Total order for use as a map key (degree, then coefficients).
    bool operator<(const Poly& o) const;

    /// Euclidean division; the divisor must be nonzero.
    static void divrem(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
    /// Exact division; throws if the remainder is nonzero.
    static Poly divexact(const Poly& a, const Poly& b);

    Poly derivative() const;
    Poly monic() const;

    /// Monic gcd via a primitive pseudo-remainder sequence.
    static Poly gcd(const Poly& a, const Poly& b);

    Rational eval(const Rational& x) const;

    /// Exact square root if the polynomial is a perfect square over Q.
    std::optional<Poly> sqrt_exact() const;

    /// Decomposition p = sf * sq^2 with sf squarefree ("odd part" of the
    /// squarefree factorization, computed by Yun's algorithm).
    struct SquareSplit;
    SquareSplit square_split() const;

    bool is_squarefree() const;

    /// Rescale to integer coefficients with content 1; keeps the sign of the
    /// leading coefficient. Returns the removed rational factor.
    Poly primitive_part(Rational* factor = nullptr) const;

    /// Canonical text form, monomials in decreasing degree, e.g. "2*s^4-s+1/3".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct Poly::SquareSplit {
    Poly squarefree;
    Poly square_root;  // sq, so that p == squarefree * square_root^2
};

}  // namespace tlq
