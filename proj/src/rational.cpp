#include "tlq/rational.hpp"

#include "tlq/errors.hpp"

namespace tlq {

Rational rat(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw ParseError("malformed rational literal: '" + s + "'");
    if (r.get_den() == 0)
        throw DivisionByZeroError("rational literal with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    Integer num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return rat(rn, rd);
}

}  // namespace tlq
