#include "anewdsc/detail/ball_poly.hpp"

#include <algorithm>

namespace anewdsc::detail {

namespace {

// dst = floor(src * s * 2^e); returns true if rounding happened.
bool mul_floor(mpz_t dst, const mpz_t src, const mpz_t s, std::int64_t e) {
    mpz_mul(dst, src, s);
    if (e >= 0) {
        if (e > 0) mpz_mul_2exp(dst, dst, static_cast<mp_bitcnt_t>(e));
        return false;
    }
    const auto k = static_cast<mp_bitcnt_t>(-e);
    const bool inexact = mpz_sgn(dst) != 0 && mpz_scan1(dst, 0) < k;
    mpz_fdiv_q_2exp(dst, dst, k);
    return inexact;
}

// dst = ceil(src * s * 2^e) for src, s >= 0.
void mul_ceil(mpz_t dst, const mpz_t src, const mpz_t s, std::int64_t e) {
    mpz_mul(dst, src, s);
    if (e > 0)
        mpz_mul_2exp(dst, dst, static_cast<mp_bitcnt_t>(e));
    else if (e < 0)
        mpz_cdiv_q_2exp(dst, dst, static_cast<mp_bitcnt_t>(-e));
}

std::int64_t bitlen(const mpz_class& v) {
    return sgn(v) == 0 ? 0 : static_cast<std::int64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

} // namespace

mpz_class BallPoly::max_rad() const {
    mpz_class m = 0;
    for (const auto& r : rad)
        if (r > m) m = r;
    return m;
}

BallPoly load(const CoefficientOracle& p, std::int64_t frac) {
    const ApproxPolynomial a = p.approximate(Precision{std::max<std::int64_t>(1, frac)});
    const long base_err = p.exact() ? 0 : 1;
    BallPoly out;
    out.frac = frac;
    out.mid.resize(a.coeffs.size());
    out.rad.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        const Dyadic& c = a.coeffs[i];
        const std::int64_t k = c.exponent() + frac;
        long err = base_err;
        if (k >= 0) {
            mpz_mul_2exp(out.mid[i].get_mpz_t(), c.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(k));
        } else {
            mpz_fdiv_q_2exp(out.mid[i].get_mpz_t(), c.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
            err += 1;
        }
        out.rad[i] = err;
    }
    return out;
}

BallPoly derivative(const BallPoly& p) {
    BallPoly d;
    d.frac = p.frac;
    const std::size_t n = p.size();
    if (n <= 1) {
        d.mid.assign(1, 0);
        d.rad.assign(1, 0);
        return d;
    }
    d.mid.resize(n - 1);
    d.rad.resize(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        d.mid[i - 1] = p.mid[i] * static_cast<unsigned long>(i);
        d.rad[i - 1] = p.rad[i] * static_cast<unsigned long>(i);
    }
    return d;
}

void taylor_shift(BallPoly& p, const Dyadic& a) {
    if (a.is_zero() || p.size() < 2) return;
    if (a == Dyadic(1)) {
        taylor_shift_one(p);
        return;
    }
    const mpz_class& s = a.mantissa();
    const mpz_class abs_s = abs(s);
    const std::int64_t e = a.exponent();
    const std::size_t n = p.size() - 1;
    mpz_class t;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n; j-- > i;) {
            if (mul_floor(t.get_mpz_t(), p.mid[j + 1].get_mpz_t(), s.get_mpz_t(), e))
                mpz_add_ui(p.rad[j].get_mpz_t(), p.rad[j].get_mpz_t(), 1);
            mpz_add(p.mid[j].get_mpz_t(), p.mid[j].get_mpz_t(), t.get_mpz_t());
            if (sgn(p.rad[j + 1]) != 0) {
                mul_ceil(t.get_mpz_t(), p.rad[j + 1].get_mpz_t(), abs_s.get_mpz_t(), e);
                mpz_add(p.rad[j].get_mpz_t(), p.rad[j].get_mpz_t(), t.get_mpz_t());
            }
        }
    }
}

void taylor_shift_one(BallPoly& p) {
    if (p.size() < 2) return;
    const std::size_t n = p.size() - 1;
    const bool radii = std::any_of(p.rad.begin(), p.rad.end(), [](const mpz_class& r) { return sgn(r) != 0; });
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n; j-- > i;) {
            mpz_add(p.mid[j].get_mpz_t(), p.mid[j].get_mpz_t(), p.mid[j + 1].get_mpz_t());
            if (radii) mpz_add(p.rad[j].get_mpz_t(), p.rad[j].get_mpz_t(), p.rad[j + 1].get_mpz_t());
        }
    }
}

void scale(BallPoly& p, const Dyadic& w) {
    const std::size_t n = p.size();
    const std::int64_t frac = p.frac;
    mpz_class t, u;
    if (w.mantissa() == 1 || w.mantissa() == -1) {
        // w = +-2^e: shifts only
        for (std::size_t i = 1; i < n; ++i) {
            const std::int64_t sh = w.exponent() * static_cast<std::int64_t>(i);
            const mpz_class one = (w.sign() < 0 && (i % 2 == 1)) ? mpz_class(-1) : mpz_class(1);
            if (mul_floor(t.get_mpz_t(), p.mid[i].get_mpz_t(), one.get_mpz_t(), sh)) p.rad[i] += 1;
            p.mid[i] = t;
            if (sgn(p.rad[i]) != 0) {
                const mpz_class pos = 1;
                mul_ceil(t.get_mpz_t(), p.rad[i].get_mpz_t(), pos.get_mpz_t(), sh);
                p.rad[i] = t;
            }
        }
        return;
    }
    const mpz_class& s = w.mantissa();
    const mpz_class abs_s = abs(s);
    const std::int64_t e = w.exponent();
    // running enclosure of w^i at scale 2^-frac
    mpz_class pm = 1, pr = 0;
    pm <<= static_cast<mp_bitcnt_t>(frac);
    for (std::size_t i = 1; i < n; ++i) {
        const bool inexact = mul_floor(t.get_mpz_t(), pm.get_mpz_t(), s.get_mpz_t(), e);
        pm = t;
        if (sgn(pr) != 0) {
            mul_ceil(t.get_mpz_t(), pr.get_mpz_t(), abs_s.get_mpz_t(), e);
            pr = t;
        }
        if (inexact) pr += 1;

        // c_i * w^i, both enclosed
        mpz_class new_rad;
        if (sgn(pr) != 0 || sgn(p.rad[i]) != 0) {
            mpz_class apm = abs(pm);
            u = abs(p.mid[i]) * pr + p.rad[i] * (apm + pr);
            mpz_cdiv_q_2exp(new_rad.get_mpz_t(), u.get_mpz_t(), static_cast<mp_bitcnt_t>(frac));
        }
        if (mul_floor(t.get_mpz_t(), p.mid[i].get_mpz_t(), pm.get_mpz_t(), -frac)) new_rad += 1;
        p.mid[i] = t;
        p.rad[i] = new_rad;
    }
}

void reverse(BallPoly& p) {
    std::reverse(p.mid.begin(), p.mid.end());
    std::reverse(p.rad.begin(), p.rad.end());
}

namespace {

struct Scratch {
    mpz_class t, u;
};

// r = a * b for balls at scale 2^-F; r may alias a or b.
void ball_mul(Ball& r, const Ball& a, const Ball& b, std::int64_t F, Scratch& w) {
    const auto f = static_cast<mp_bitcnt_t>(F);
    // radius first, from the unmodified operands
    mpz_abs(w.t.get_mpz_t(), b.mid.get_mpz_t());
    mpz_add(w.t.get_mpz_t(), w.t.get_mpz_t(), b.rad.get_mpz_t());
    mpz_mul(w.u.get_mpz_t(), a.rad.get_mpz_t(), w.t.get_mpz_t());
    mpz_abs(w.t.get_mpz_t(), a.mid.get_mpz_t());
    mpz_addmul(w.u.get_mpz_t(), w.t.get_mpz_t(), b.rad.get_mpz_t());
    mpz_mul(w.t.get_mpz_t(), a.mid.get_mpz_t(), b.mid.get_mpz_t());
    mpz_fdiv_q_2exp(r.mid.get_mpz_t(), w.t.get_mpz_t(), f);
    mpz_cdiv_q_2exp(r.rad.get_mpz_t(), w.u.get_mpz_t(), f);
    mpz_add_ui(r.rad.get_mpz_t(), r.rad.get_mpz_t(), 1);
}

// Ball enclosure of x^g at scale 2^-F by square-and-multiply.
void ball_pow(Ball& r, Ball& base, const Dyadic& x, std::size_t g, std::int64_t F, Scratch& w) {
    const std::int64_t k = x.exponent() + F;
    if (k >= 0) {
        mpz_mul_2exp(base.mid.get_mpz_t(), x.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(k));
        base.rad = 0;
    } else {
        const auto kk = static_cast<mp_bitcnt_t>(-k);
        base.rad = mpz_scan1(x.mantissa().get_mpz_t(), 0) < kk ? 1 : 0;
        mpz_fdiv_q_2exp(base.mid.get_mpz_t(), x.mantissa().get_mpz_t(), kk);
    }
    r.mid = 1;
    r.mid <<= static_cast<mp_bitcnt_t>(F);
    r.rad = 0;
    for (;;) {
        if (g & 1) ball_mul(r, r, base, F, w);
        g >>= 1;
        if (g == 0) break;
        ball_mul(base, base, base, F, w);
    }
}

} // namespace

Ball horner(const BallPoly& p, const Dyadic& x) {
    Ball acc{p.mid.back(), p.rad.back()};
    const mpz_class& s = x.mantissa();
    const mpz_class abs_s = abs(s);
    const std::int64_t e = x.exponent();
    mpz_class t;
    Ball pw, base;
    Scratch scratch;
    std::size_t i = p.size() - 1;
    while (i > 0) {
        std::size_t j = i - 1;
        while (j > 0 && sgn(p.mid[j]) == 0 && sgn(p.rad[j]) == 0) --j;
        const std::size_t g = i - j;
        if (g >= 4) {
            // a long run of zero coefficients: one multiplication by an
            // enclosure of x^g, precise enough that its error stays near 1 ulp
            const auto gi = static_cast<std::int64_t>(g);
            const std::int64_t F =
                std::max(p.frac, bitlen(acc.mid) + bitlen(acc.rad)) + gi * log_m(x) + clog2(gi) + 8;
            ball_pow(pw, base, x, g, F, scratch);
            ball_mul(acc, acc, pw, F, scratch);
            mpz_add(acc.mid.get_mpz_t(), acc.mid.get_mpz_t(), p.mid[j].get_mpz_t());
            mpz_add(acc.rad.get_mpz_t(), acc.rad.get_mpz_t(), p.rad[j].get_mpz_t());
        } else {
            for (std::size_t k = i; k-- > j;) {
                const bool inexact = mul_floor(t.get_mpz_t(), acc.mid.get_mpz_t(), s.get_mpz_t(), e);
                mpz_add(acc.mid.get_mpz_t(), t.get_mpz_t(), p.mid[k].get_mpz_t());
                if (sgn(acc.rad) != 0) {
                    mul_ceil(t.get_mpz_t(), acc.rad.get_mpz_t(), abs_s.get_mpz_t(), e);
                    acc.rad = t;
                }
                if (inexact) acc.rad += 1;
                acc.rad += p.rad[k];
            }
        }
        i = j;
    }
    return acc;
}

std::int64_t log_m(const Dyadic& x) {
    if (x.is_zero()) return 0;
    return std::max<std::int64_t>(0, x.ceil_log2());
}

std::int64_t clog2(std::int64_t v) {
    std::int64_t k = 0;
    while ((std::int64_t{1} << k) < v) ++k;
    return k;
}

Dyadic to_quality(const mpz_class& mid, std::int64_t frac, std::int64_t L) {
    const std::int64_t k = frac - L - 1;
    mpz_class s;
    if (k > 0) {
        mpz_class h = 1;
        h <<= static_cast<mp_bitcnt_t>(k - 1);
        s = mid + h;
        mpz_fdiv_q_2exp(s.get_mpz_t(), s.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        s = mid;
        if (k < 0) s <<= static_cast<mp_bitcnt_t>(-k);
    }
    return Dyadic(s, -(L + 1));
}

bool fits_quality(const mpz_class& rad, std::int64_t frac, std::int64_t L) {
    return quality_deficit(rad, frac, L) == 0;
}

std::int64_t quality_deficit(const mpz_class& rad, std::int64_t frac, std::int64_t L) {
    if (sgn(rad) == 0) return 0;
    const std::int64_t k = frac - L - 1;
    const std::int64_t b = bitlen(rad);
    if (k < 0) return b - k;
    // rad <= 2^k  <=>  bitlen <= k, or rad == 2^k
    if (b <= k) return 0;
    if (b == k + 1 && mpz_scan1(rad.get_mpz_t(), 0) == static_cast<mp_bitcnt_t>(k)) return 0;
    return b - k;
}

} // namespace anewdsc::detail
