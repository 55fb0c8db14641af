#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "anewdsc/dyadic.hpp"
#include "anewdsc/interval.hpp"
#include "anewdsc/oracle.hpp"
#include "anewdsc/reference.hpp"

namespace support {

using anewdsc::Dyadic;
using anewdsc::Oracle;
using anewdsc::reference::ExactPoly;

inline mpq_class Q(const Dyadic& x) { return anewdsc::reference::to_rational(x); }

inline mpq_class pow2q(std::int64_t k) {
    mpq_class r(1);
    if (k >= 0) mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
    else mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    return r;
}

inline mpq_class qabs(const mpq_class& x) { return x < 0 ? mpq_class(-x) : x; }

inline std::vector<mpz_class> ints(std::initializer_list<long> c) {
    std::vector<mpz_class> v;
    for (long x : c) v.emplace_back(x);
    return v;
}

inline ExactPoly exact(std::initializer_list<long> c) { return ExactPoly::from_integers(ints(c)); }
inline Oracle int_oracle(std::initializer_list<long> c) { return anewdsc::from_integer_poly(ints(c)); }

/// The normalized oracle of an exact polynomial and the rescaled exact copy.
struct Normalized {
    Oracle oracle;
    ExactPoly exact;
};

inline Normalized normalized(const ExactPoly& p) {
    auto [o, t] = anewdsc::normalize_leading(anewdsc::reference::to_oracle(p));
    ExactPoly q = p;
    for (auto& c : q.coeffs) c *= pow2q(-t);
    return {o, q};
}

inline mpz_class random_int(std::mt19937_64& rng, int bits) {
    mpz_class r = 0;
    for (int i = 0; i < bits; i += 32) {
        r <<= 32;
        r += static_cast<unsigned long>(rng() & 0xffffffffu);
    }
    if (bits % 32 != 0) r >>= 32 - bits % 32;
    if (rng() & 1) r = -r;
    return r;
}

/// Random dyadic with a mantissa of up to `bits` bits and exponent in [emin, emax].
inline Dyadic random_dyadic(std::mt19937_64& rng, int bits, int emin, int emax) {
    std::uniform_int_distribution<int> e(emin, emax);
    return Dyadic(random_int(rng, bits), e(rng));
}

/// Random integer polynomial of degree n with nonzero leading coefficient.
inline ExactPoly random_poly(std::mt19937_64& rng, int n, int tau) {
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c) x = random_int(rng, tau);
    while (c.back() == 0) c.back() = random_int(rng, tau);
    return ExactPoly::from_integers(c);
}

/// Random square-free integer polynomial (degree may drop below n only if
/// the square-free part does; retried until it has degree >= 2).
inline ExactPoly random_square_free(std::mt19937_64& rng, int n, int tau) {
    for (;;) {
        ExactPoly p = anewdsc::reference::square_free_part(random_poly(rng, n, tau));
        if (p.degree() >= 2) return p;
    }
}

/// prod (x - r_i) scaled to integer coefficients.
inline ExactPoly from_roots(const std::vector<mpq_class>& roots) {
    ExactPoly p(std::vector<mpq_class>{1});
    for (const auto& r : roots) p = p * ExactPoly(std::vector<mpq_class>{-r, 1});
    return ExactPoly::from_integers(anewdsc::reference::primitive_integer(p));
}

/// Exact sign of P at both endpoints differs.
inline bool sign_change(const ExactPoly& p, const Dyadic& a, const Dyadic& b) {
    const mpq_class fa = anewdsc::reference::evaluate(p, Q(a));
    const mpq_class fb = anewdsc::reference::evaluate(p, Q(b));
    return sgn(fa) * sgn(fb) < 0;
}

/// k clustered roots at spacing 2^-(logN + 40) inside an interval of width
/// 2^logw, times `pairs` complex pairs (x^2 + (64 + j)^2).
struct ClusterInstance {
    anewdsc::Interval I;
    ExactPoly P;
};

inline ClusterInstance cluster_instance(std::mt19937_64& rng, int k, int pairs, std::int64_t logN, std::int64_t logw) {
    const Dyadic a(static_cast<long>(rng() % 1024) - 512, -10);
    const anewdsc::Interval I(a, a + Dyadic::pow2(logw));
    const Dyadic c = I.a + I.width() * Dyadic(static_cast<long>(1 + rng() % 1023), -10);
    std::vector<mpq_class> roots;
    for (int j = 0; j < k; ++j) roots.push_back(Q(c) + j * pow2q(-(logN + 40)));
    ExactPoly P = from_roots(roots);
    for (long j = 0; j < pairs; ++j)
        P = P * ExactPoly::from_integers({mpz_class((64 + j) * (64 + j)), 0, 1});
    return {I, P};
}

} // namespace support
