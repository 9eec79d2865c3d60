#include "tlq/poly.hpp"

#include <algorithm>
#include <sstream>

#include "tlq/errors.hpp"

namespace tlq {

namespace {
const Rational kZero = 0;
}

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(long c) {
    if (c != 0) c_.push_back(Rational(c));
}

Poly Poly::sigma() {
    Poly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

bool Poly::is_monic() const { return !is_zero() && c_.back() == 1; }

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly::from_coeffs(std::move(c));
}

Poly Poly::mul_scalar(const Rational& k) const {
    if (k == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.c_) x *= k;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(Rational(1));
    Poly base(*this);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;) {
        int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    quo = Poly();
    rem = a;
    const int db = b.degree();
    const Rational& lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        int k = rem.degree() - db;
        Rational f = rem.leading() / lb;
        std::vector<Rational> qc(static_cast<size_t>(k) + 1, Rational(0));
        qc[k] = f;
        Poly t = Poly::from_coeffs(std::move(qc));
        quo += t;
        rem -= t * b;
    }
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    Poly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return from_coeffs(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return mul_scalar(Rational(1) / leading());
}

Poly Poly::primitive_part(Rational* factor) const {
    if (is_zero()) {
        if (factor) *factor = 0;
        return *this;
    }
    Integer den_lcm = 1;
    for (const auto& q : c_) {
        Integer d = q.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Integer content = 0;
    for (const auto& q : c_) {
        Rational scaled = q * Rational(den_lcm);
        Integer n = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    // content of the integer form; sign follows the leading coefficient
    Rational f = Rational(content) / Rational(den_lcm);
    if (sgn(leading()) < 0) f = -f;
    if (factor) *factor = f;
    return mul_scalar(Rational(1) / f);
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Primitive PRS over the integer forms to keep coefficients small.
    Poly f = a.primitive_part();
    Poly g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g
        int d = f.degree() - g.degree();
        Rational lg = g.leading();
        Rational scale = 1;
        for (int i = 0; i <= d; ++i) scale *= lg;
        Poly q, r;
        divrem(f.mul_scalar(scale), g, q, r);
        f = g;
        g = r.is_zero() ? Poly() : r.primitive_part();
    }
    return f.monic();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::optional<Poly> Poly::sqrt_exact() const {
    if (is_zero()) return Poly();
    if (degree() % 2 != 0) return std::nullopt;
    auto lead = rational_sqrt(leading());
    if (!lead) return std::nullopt;
    const int hd = degree() / 2;
    // Solve for the coefficients of r with r^2 == *this, top-down.
    std::vector<Rational> rc(static_cast<size_t>(hd) + 1, Rational(0));
    rc[hd] = *lead;
    for (int k = hd - 1; k >= 0; --k) {
        // coefficient of s^(hd+k) in r^2 must match
        Rational acc = coeff(hd + k);
        for (int i = k + 1, j = hd + k - (k + 1); i < j; ++i, --j)
            acc -= rc[i] * rc[j] * 2;
        int i = k + 1, j = hd + k - (k + 1);
        if (i == j) acc -= rc[i] * rc[i];
        rc[k] = acc / (rc[hd] * 2);
    }
    Poly r = from_coeffs(std::move(rc));
    if (r * r == *this) return r;
    return std::nullopt;
}

Poly::SquareSplit Poly::square_split() const {
    if (is_zero()) throw Error("square_split of the zero polynomial");
    if (is_constant()) {
        // c = sf * root^2 with sf squarefree integer times sign
        Rational c = c_[0];
        Integer num = c.get_num(), den = c.get_den();
        // c = num/den = (num*den) / den^2
        Integer nd = num * den;
        Integer sq = 1, sf = 1;
        // factor out squares by bounded trial division, then a final
        // perfect-square test on the residue
        Integer m = abs(nd);
        const long kTrialBound = 1 << 20;
        for (Integer p = 2; p * p <= m && p <= kTrialBound;) {
            if (m % (p * p) == 0) {
                sq *= p;
                m /= p * p;
            } else if (m % p == 0) {
                sf *= p;
                m /= p;
            } else {
                p += 1;
            }
        }
        if (m > 1 && mpz_perfect_square_p(m.get_mpz_t())) {
            Integer rm;
            mpz_sqrt(rm.get_mpz_t(), m.get_mpz_t());
            sq *= rm;
            m = 1;
        }
        sf *= m;
        if (sgn(nd) < 0) sf = -sf;
        Poly sfp{Rational(sf)};
        Poly rootp{rat(sq, den)};
        return {sfp, rootp};
    }
    // Yun's algorithm: p = prod a_k^k with a_k squarefree and coprime.
    Rational content;
    Poly p = primitive_part(&content);
    Poly dp = p.derivative();
    Poly g = gcd(p, dp);
    std::vector<Poly> factors;  // factors[k-1] = a_k
    if (g.is_constant()) {
        factors.push_back(p.monic());
    } else {
        Poly w = divexact(p, g).monic();
        Poly y = divexact(dp, g);
        while (true) {
            Poly z = y - w.derivative();
            if (z.is_zero()) {
                factors.push_back(w);
                break;
            }
            Poly ak = gcd(w, z);
            factors.push_back(ak);
            w = divexact(w, ak).monic();
            y = divexact(z, ak);
        }
    }
    Poly sf(Rational(1)), root(Rational(1));
    for (size_t k = 1; k <= factors.size(); ++k) {
        if (k % 2 == 1) sf *= factors[k - 1];
        root *= factors[k - 1].pow(static_cast<unsigned>(k / 2));
    }
    // Reattach the content: *this = content * sf * root^2 (content rational).
    auto csplit = Poly(content).square_split();
    sf = sf * csplit.squarefree;
    root = root * csplit.square_root;
    // Keep the squarefree part integer-primitive, fold the residue into root^2
    // only when it is a perfect square; otherwise fold into sf.
    Rational f;
    Poly sfp = sf.primitive_part(&f);
    if (auto fr = rational_sqrt(f)) {
        return {sfp, root.mul_scalar(*fr)};
    }
    return {sf, root};
}

bool Poly::is_squarefree() const {
    if (is_zero()) return false;
    if (is_constant()) return true;
    return gcd(*this, derivative()).is_constant();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (k == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << "s";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace tlq
