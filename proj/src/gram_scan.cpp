#include <cmath>
#include <random>

#include "tlq/errors.hpp"
#include "tlq/gram.hpp"

namespace tlq {

namespace {

double unit_double(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

BigComplex bc(double re, double im, mpfr_prec_t prec) {
    return BigComplex(BigFloat(Rational(re), prec), BigFloat(Rational(im), prec));
}

double modulus(const BigComplex& z) {
    return z.abs().to_double();
}

}  // namespace

ScanResult gram_scan(const ScanOptions& opt) {
    if (opt.n == 2)
        throw InvalidInstanceError(
            "the n = 2 family is identically degenerate; scan requires n >= 3");
    if (opt.n < 3 || opt.n > 6) throw InvalidInstanceError("scan supports 3 <= n <= 6");
    if (opt.samples < 1) throw InvalidInstanceError("scan needs at least one sample");

    const int n = opt.n;
    const auto prec = static_cast<mpfr_prec_t>(opt.bits);
    std::mt19937_64 rng(opt.seed);

    BigComplex sigma = bc(opt.sigma_re, opt.sigma_im, prec);
    BigComplex ssq = sigma * sigma;
    BigComplex q = ssq * ssq;
    BigComplex one(Rational(1), prec);
    BigComplex half(Rational(1, 2), prec);
    Field cf = Field::complex_floats(opt.bits, sigma);

    ScanResult res;
    res.n = n;
    res.samples = opt.samples;
    res.seed = opt.seed;
    res.tol = opt.tol;

    bool first = true;
    for (int s = 0; s < opt.samples; ++s) {
        std::vector<BigComplex> z(static_cast<size_t>(n), BigComplex(prec));
        for (int i = 2; 2 * i <= n; ++i) {
            double re = 0, im = 0;
            do {
                re = -1.5 + 3.0 * unit_double(rng);
                im = -1.5 + 3.0 * unit_double(rng);
            } while (re * re + im * im < 0.01);
            z[i - 1] = bc(re, im, prec);
            z[n - i] = q / z[i - 1];
        }
        if (n % 2) {
            bool plus = (n == 3) ? (s % 2 != 0) : ((rng() & 1) != 0);
            z[n / 2] = plus ? ssq : -ssq;
        }
        BigComplex rem = one + q;
        for (int i = 2; i <= n - 1; ++i) rem = rem - z[i - 1];
        BigComplex root = (rem * rem - BigComplex(Rational(4), prec) * q).sqrt();
        bool other = (n == 3) ? ((s / 2) % 2 != 0) : ((rng() & 1) != 0);
        z[0] = (other ? rem - root : rem + root) * half;
        z[n - 1] = q / z[0];
        if (opt.plant_z_eq_q) {
            z[0] = q;
            z[n - 1] = one;
        }

        Matrix g(cf, size_t(n) * n, size_t(n) * n);
        auto add = [&](size_t r, size_t c, const BigComplex& v) {
            g.set(r, c, g.at(r, c) + cf.from_complex(v));
        };
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                size_t row = size_t(i - 1) * n + (j - 1);
                add(row, size_t(j - 1) * n + (i - 1), q);
                add(row, size_t(n - i) * n + (n - j), -z[size_t(n - i)]);
            }

        // Scale-free gap: |det| over the Hadamard bound (product of row
        // 2-norms). Exact zeros land at the working-precision floor, many
        // orders below any generic sample.
        double bound = 1.0;
        for (size_t r = 0; r < g.rows(); ++r) {
            double sq = 0;
            for (size_t col = 0; col < g.cols(); ++col) {
                double a = modulus(g.at(r, col).as_complex());
                sq += a * a;
            }
            bound *= std::sqrt(sq);
        }
        bound = std::max(bound, 1e-300);

        double ad = modulus(g.det().as_complex());
        double ratio = ad / bound;
        if (first || ad < res.min_absdet) res.min_absdet = ad;
        if (first || ad > res.max_absdet) res.max_absdet = ad;
        if (first || ratio < res.min_ratio) res.min_ratio = ratio;
        if (first || ratio > res.max_ratio) res.max_ratio = ratio;
        first = false;

        if (ratio < opt.tol) {
            ++res.degenerate_count;
            ScanFlag flag;
            flag.sample = s;
            auto near = [](const BigComplex& a, const BigComplex& b, double ref) {
                return modulus(a - b) < 1e-6 * std::max(1.0, ref);
            };
            if (modulus(q) < 1e-9 || modulus(q - one) < 1e-9)
                flag.factors.push_back({"q_special", 0, 0});
            for (int i = 1; i <= n; ++i)
                if (near(q, z[i - 1], std::max(modulus(q), modulus(z[i - 1]))))
                    flag.factors.push_back({"z_eq_q", i, 0});
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i + j == n + 1) continue;
                    BigComplex prod = z[size_t(n - i)] * z[size_t(j - 1)];
                    if (near(q * q, prod, std::max(modulus(q * q), modulus(prod))))
                        flag.factors.push_back({"pair_product", i, j});
                }
            res.flagged.push_back(std::move(flag));
        }
    }
    return res;
}

}  // namespace tlq
