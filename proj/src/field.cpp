#include "tlq/field.hpp"

#include "tlq/errors.hpp"

namespace tlq {

Field Field::rationals() {
    auto cfg = std::make_shared<FieldConfig>();
    cfg->kind = FieldKind::rational;
    return Field(cfg);
}

Field Field::ratfunc_sigma() {
    auto cfg = std::make_shared<FieldConfig>();
    cfg->kind = FieldKind::ratfunc_sigma;
    return Field(cfg);
}

Field Field::quad_ext(const Poly& delta) {
    if (delta.is_zero()) throw InvalidInstanceError("quadratic extension with delta = 0");
    if (delta.is_constant()) {
        if (rational_sqrt(delta.coeff(0)))
            throw InvalidInstanceError("delta = " + delta.str() +
                                       " is a rational square; the extension would be degenerate");
    } else if (!delta.is_squarefree()) {
        throw InvalidInstanceError("delta = " + delta.str() + " is not squarefree");
    }
    auto cfg = std::make_shared<FieldConfig>();
    cfg->kind = FieldKind::quad_ext;
    cfg->delta = delta;
    return Field(cfg);
}

Field Field::complex_floats(unsigned bits) {
    if (bits < 24 || bits > 1u << 20)
        throw InvalidInstanceError("complex precision must be between 24 and 2^20 bits");
    auto cfg = std::make_shared<FieldConfig>();
    cfg->kind = FieldKind::complex_float;
    cfg->bits = static_cast<mpfr_prec_t>(bits);
    return Field(cfg);
}

Field Field::complex_floats(unsigned bits, const BigComplex& sigma) {
    Field f = complex_floats(bits);
    auto cfg = std::make_shared<FieldConfig>(*f.cfg_);
    cfg->sigma_value = sigma;
    return Field(cfg);
}

const Poly& Field::delta() const {
    if (kind() != FieldKind::quad_ext) throw Error("delta() on a non-extension field");
    return cfg_->delta;
}

const BigComplex& Field::sigma_value() const {
    if (!cfg_->sigma_value) throw Error("this complex field has no configured sigma value");
    return *cfg_->sigma_value;
}

bool Field::compatible(const Field& o) const {
    if (cfg_ == o.cfg_) return true;
    if (cfg_->kind != o.cfg_->kind) return false;
    switch (cfg_->kind) {
        case FieldKind::quad_ext:
            return cfg_->delta == o.cfg_->delta;
        case FieldKind::complex_float:
            return cfg_->bits == o.cfg_->bits;
        default:
            return true;
    }
}

std::string Field::describe() const {
    switch (kind()) {
        case FieldKind::rational:
            return "Q";
        case FieldKind::ratfunc_sigma:
            return "Q(s)";
        case FieldKind::quad_ext:
            return "Q(s)[th], th^2 = " + cfg_->delta.str();
        case FieldKind::complex_float:
            return "C(" + std::to_string(cfg_->bits) + " bits)";
    }
    return "?";
}

FieldElement Field::zero() const { return integer(0); }
FieldElement Field::one() const { return integer(1); }

FieldElement Field::integer(long v) const { return from_rational(Rational(v)); }

FieldElement Field::from_rational(const Rational& r) const {
    switch (kind()) {
        case FieldKind::rational:
            return FieldElement(*this, r);
        case FieldKind::ratfunc_sigma:
            return FieldElement(*this, RatFunc(r));
        case FieldKind::quad_ext:
            return FieldElement(*this, QuadExt{RatFunc(r), RatFunc()});
        case FieldKind::complex_float:
            return FieldElement(*this, BigComplex(r, cfg_->bits));
    }
    throw Error("unreachable");
}

FieldElement Field::from_ratfunc(const RatFunc& f) const {
    switch (kind()) {
        case FieldKind::ratfunc_sigma:
            return FieldElement(*this, f);
        case FieldKind::quad_ext:
            return FieldElement(*this, QuadExt{f, RatFunc()});
        default:
            throw Error("from_ratfunc requires an exact sigma-based field");
    }
}

FieldElement Field::from_complex(const BigComplex& z) const {
    if (kind() != FieldKind::complex_float)
        throw Error("from_complex on a non-complex field");
    return FieldElement(*this, z);
}

FieldElement Field::sigma() const {
    switch (kind()) {
        case FieldKind::ratfunc_sigma:
        case FieldKind::quad_ext:
            return from_ratfunc(RatFunc::sigma());
        case FieldKind::complex_float:
            return FieldElement(*this, sigma_value());
        default:
            throw FieldExtensionError("sigma does not exist in field " + describe());
    }
}

FieldElement Field::q() const { return sigma().pow(4); }
FieldElement Field::sqrt_q() const { return sigma().pow(2); }

FieldElement Field::theta() const {
    if (kind() != FieldKind::quad_ext)
        throw FieldExtensionError("theta requires a quadratic extension field, got " + describe());
    return FieldElement(*this, QuadExt{RatFunc(), RatFunc(Rational(1))});
}

Field::Field() : cfg_(Field::rationals().cfg_) {}

FieldElement::FieldElement() : f_(), v_(Rational(0)) {}

FieldElement::FieldElement(Field f, Payload v) : f_(std::move(f)), v_(std::move(v)) {}

bool FieldElement::is_zero() const {
    switch (kind()) {
        case FieldKind::rational:
            return as_rational() == 0;
        case FieldKind::ratfunc_sigma:
            return as_ratfunc().is_zero();
        case FieldKind::quad_ext:
            return as_quadext().a.is_zero() && as_quadext().b.is_zero();
        case FieldKind::complex_float:
            return as_complex().is_zero();
    }
    return false;
}

bool FieldElement::is_one() const { return *this == f_.one(); }

const Rational& FieldElement::as_rational() const {
    if (auto* p = std::get_if<Rational>(&v_)) return *p;
    throw Error("element is not in the rational backend");
}
const RatFunc& FieldElement::as_ratfunc() const {
    if (auto* p = std::get_if<RatFunc>(&v_)) return *p;
    throw Error("element is not in the rational-function backend");
}
const QuadExt& FieldElement::as_quadext() const {
    if (auto* p = std::get_if<QuadExt>(&v_)) return *p;
    throw Error("element is not in the quadratic-extension backend");
}
const BigComplex& FieldElement::as_complex() const {
    if (auto* p = std::get_if<BigComplex>(&v_)) return *p;
    throw Error("element is not in the complex backend");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field().compatible(b.field()))
        throw MixedFieldError("operands from different fields: " + a.field().describe() +
                              " vs " + b.field().describe());
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    switch (a.kind()) {
        case FieldKind::rational:
            return FieldElement(a.field(), a.as_rational() + b.as_rational());
        case FieldKind::ratfunc_sigma:
            return FieldElement(a.field(), a.as_ratfunc() + b.as_ratfunc());
        case FieldKind::quad_ext: {
            const auto &x = a.as_quadext(), &y = b.as_quadext();
            return FieldElement(a.field(), QuadExt{x.a + y.a, x.b + y.b});
        }
        case FieldKind::complex_float:
            return FieldElement(a.field(), a.as_complex() + b.as_complex());
    }
    throw Error("unreachable");
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement FieldElement::operator-() const {
    switch (kind()) {
        case FieldKind::rational:
            return FieldElement(f_, Rational(-as_rational()));
        case FieldKind::ratfunc_sigma:
            return FieldElement(f_, -as_ratfunc());
        case FieldKind::quad_ext: {
            const auto& x = as_quadext();
            return FieldElement(f_, QuadExt{-x.a, -x.b});
        }
        case FieldKind::complex_float:
            return FieldElement(f_, -as_complex());
    }
    throw Error("unreachable");
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    switch (a.kind()) {
        case FieldKind::rational:
            return FieldElement(a.field(), a.as_rational() * b.as_rational());
        case FieldKind::ratfunc_sigma:
            return FieldElement(a.field(), a.as_ratfunc() * b.as_ratfunc());
        case FieldKind::quad_ext: {
            const auto &x = a.as_quadext(), &y = b.as_quadext();
            if (x.b.is_zero() && y.b.is_zero())
                return FieldElement(a.field(), QuadExt{x.a * y.a, RatFunc()});
            RatFunc d(a.field().delta());
            return FieldElement(a.field(),
                                QuadExt{x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a});
        }
        case FieldKind::complex_float:
            return FieldElement(a.field(), a.as_complex() * b.as_complex());
    }
    throw Error("unreachable");
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in " + f_.describe());
    switch (kind()) {
        case FieldKind::rational:
            return FieldElement(f_, Rational(1 / as_rational()));
        case FieldKind::ratfunc_sigma:
            return FieldElement(f_, as_ratfunc().inv());
        case FieldKind::quad_ext: {
            const auto& x = as_quadext();
            RatFunc d(f_.delta());
            RatFunc n = x.a * x.a - x.b * x.b * d;
            if (n.is_zero())
                throw DivisionByZeroError("norm of nonzero element vanishes; delta is a square");
            return FieldElement(f_, QuadExt{x.a / n, -(x.b / n)});
        }
        case FieldKind::complex_float:
            return FieldElement(f_, as_complex().inv());
    }
    throw Error("unreachable");
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElement r = f_.one();
    FieldElement base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1ul) r = r * base;
        base = base * base;
        k >>= 1ul;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same(*this, o);
    switch (kind()) {
        case FieldKind::rational:
            return as_rational() == o.as_rational();
        case FieldKind::ratfunc_sigma:
            return as_ratfunc() == o.as_ratfunc();
        case FieldKind::quad_ext:
            return as_quadext().a == o.as_quadext().a && as_quadext().b == o.as_quadext().b;
        case FieldKind::complex_float:
            return as_complex() == o.as_complex();
    }
    return false;
}

bool FieldElement::less(const FieldElement& o) const {
    require_same(*this, o);
    switch (kind()) {
        case FieldKind::rational:
            return as_rational() < o.as_rational();
        case FieldKind::ratfunc_sigma:
            return as_ratfunc() < o.as_ratfunc();
        case FieldKind::quad_ext: {
            const auto &x = as_quadext(), &y = o.as_quadext();
            if (x.a != y.a) return x.a < y.a;
            return x.b < y.b;
        }
        case FieldKind::complex_float: {
            const auto &x = as_complex(), &y = o.as_complex();
            if (!(x.re() == y.re())) return x.re() < y.re();
            return x.im() < y.im();
        }
    }
    return false;
}

std::string FieldElement::str() const {
    switch (kind()) {
        case FieldKind::rational:
            return to_string(as_rational());
        case FieldKind::ratfunc_sigma:
            return as_ratfunc().str();
        case FieldKind::quad_ext: {
            const auto& x = as_quadext();
            if (x.b.is_zero()) return x.a.str();
            return "(" + x.a.str() + ")+(" + x.b.str() + ")*th";
        }
        case FieldKind::complex_float:
            return as_complex().str();
    }
    return "?";
}

std::optional<FieldElement> FieldElement::sqrt_in_field() const {
    switch (kind()) {
        case FieldKind::rational: {
            auto r = rational_sqrt(as_rational());
            if (!r) return std::nullopt;
            return FieldElement(f_, *r);
        }
        case FieldKind::ratfunc_sigma: {
            auto r = as_ratfunc().sqrt_exact();
            if (!r) return std::nullopt;
            return FieldElement(f_, *r);
        }
        case FieldKind::quad_ext: {
            const auto& x = as_quadext();
            if (x.b.is_zero()) {
                // sqrt in the base field, or b*th with (b*th)^2 = b^2*delta
                if (auto r = x.a.sqrt_exact())
                    return FieldElement(f_, QuadExt{*r, RatFunc()});
                RatFunc overd = x.a / RatFunc(f_.delta());
                if (auto r = overd.sqrt_exact())
                    return FieldElement(f_, QuadExt{RatFunc(), *r});
            }
            return std::nullopt;
        }
        case FieldKind::complex_float:
            return FieldElement(f_, as_complex().sqrt());
    }
    return std::nullopt;
}

namespace {
BigComplex eval_ratfunc_complex(const RatFunc& f, const BigComplex& s0) {
    auto horner = [&](const Poly& p) {
        BigComplex acc(Rational(0), s0.prec());
        for (int k = p.degree(); k >= 0; --k) acc = acc * s0 + BigComplex(p.coeff(k), s0.prec());
        return acc;
    };
    BigComplex den = horner(f.den());
    if (den.is_zero()) throw PoleError("denominator vanishes at the given sigma");
    return horner(f.num()) / den;
}
}  // namespace

FieldElement specialize(const FieldElement& x, const Rational& sigma0, unsigned bits) {
    switch (x.kind()) {
        case FieldKind::rational:
            return x;
        case FieldKind::ratfunc_sigma:
            return Field::rationals().from_rational(x.as_ratfunc().eval(sigma0));
        case FieldKind::quad_ext: {
            const auto& v = x.as_quadext();
            Rational a = v.a.eval(sigma0);
            if (v.b.is_zero()) return Field::rationals().from_rational(a);
            Rational b = v.b.eval(sigma0);
            Rational d = x.field().delta().eval(sigma0);
            if (b == 0) return Field::rationals().from_rational(a);
            if (auto r = rational_sqrt(d))
                return Field::rationals().from_rational(a + b * (*r));
            // principal numeric square root of delta(sigma0)
            Field cf = Field::complex_floats(bits);
            BigFloat da(abs(d), static_cast<mpfr_prec_t>(bits));
            BigFloat root = da.sqrt();
            BigFloat zero_f(Rational(0), static_cast<mpfr_prec_t>(bits));
            BigComplex th = sgn(d) >= 0 ? BigComplex(root, zero_f) : BigComplex(zero_f, root);
            BigComplex res = BigComplex(a, static_cast<mpfr_prec_t>(bits)) +
                             BigComplex(b, static_cast<mpfr_prec_t>(bits)) * th;
            return cf.from_complex(res);
        }
        case FieldKind::complex_float:
            return x;
    }
    throw Error("unreachable");
}

FieldElement specialize_complex(const FieldElement& x, const BigComplex& sigma0) {
    Field cf = Field::complex_floats(static_cast<unsigned>(sigma0.prec()), sigma0);
    switch (x.kind()) {
        case FieldKind::rational:
            return cf.from_complex(BigComplex(x.as_rational(), sigma0.prec()));
        case FieldKind::ratfunc_sigma:
            return cf.from_complex(eval_ratfunc_complex(x.as_ratfunc(), sigma0));
        case FieldKind::quad_ext: {
            const auto& v = x.as_quadext();
            BigComplex a = eval_ratfunc_complex(v.a, sigma0);
            if (v.b.is_zero()) return cf.from_complex(a);
            BigComplex b = eval_ratfunc_complex(v.b, sigma0);
            BigComplex d = eval_ratfunc_complex(RatFunc(x.field().delta()), sigma0);
            return cf.from_complex(a + b * d.sqrt());
        }
        case FieldKind::complex_float:
            return x;
    }
    throw Error("unreachable");
}

bool vanishes_at(const FieldElement& x, const Rational& sigma0) {
    switch (x.kind()) {
        case FieldKind::rational:
            return x.is_zero();
        case FieldKind::ratfunc_sigma:
            return x.as_ratfunc().eval(sigma0) == 0;
        case FieldKind::quad_ext: {
            const auto& v = x.as_quadext();
            Rational a = v.a.eval(sigma0);
            Rational b = v.b.is_zero() ? Rational(0) : v.b.eval(sigma0);
            if (b == 0) return a == 0;
            Rational d = x.field().delta().eval(sigma0);
            if (auto r = rational_sqrt(d)) return a + b * (*r) == 0;
            // th evaluates to an irrational (or imaginary) number, so the
            // rational components must vanish independently
            return a == 0 && b == 0;
        }
        case FieldKind::complex_float:
            throw GuardError("exact vanishing test needs an exact field");
    }
    throw Error("unreachable");
}

}  // namespace tlq
