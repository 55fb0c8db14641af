#pragma once

// Fixed-point midpoint/radius polynomial arithmetic. All values share the
// scale 2^-frac: a coefficient stands for every real within rad ulps of mid.
// Every operation keeps that enclosure sound; rounding is charged to rad.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "anewdsc/dyadic.hpp"
#include "anewdsc/oracle.hpp"

namespace anewdsc::detail {

struct Ball {
    mpz_class mid;
    mpz_class rad;  // >= 0, in ulps of 2^-frac
};

struct BallPoly {
    std::int64_t frac = 0;
    std::vector<mpz_class> mid;
    std::vector<mpz_class> rad;

    std::size_t size() const { return mid.size(); }
    /// Largest radius over all coefficients.
    mpz_class max_rad() const;
};

/// Quality-frac approximation of the oracle's coefficients at scale 2^-frac.
BallPoly load(const CoefficientOracle& p, std::int64_t frac);

BallPoly derivative(const BallPoly& p);

/// p(x) -> p(x + a)
void taylor_shift(BallPoly& p, const Dyadic& a);
/// p(x) -> p(x + 1); exact on midpoints, radii shift along.
void taylor_shift_one(BallPoly& p);
/// p(x) -> p(w x)
void scale(BallPoly& p, const Dyadic& w);
/// p(x) -> x^n p(1/x)
void reverse(BallPoly& p);

Ball horner(const BallPoly& p, const Dyadic& x);

/// ceil(log2 M(x)) with M(x) = max(1, |x|).
std::int64_t log_m(const Dyadic& x);

/// ceil(log2 v) for v >= 1, 0 otherwise.
std::int64_t clog2(std::int64_t v);

/// Rounds a ball to the quality-L grid s*2^-(L+1). Requires rad <= 2^(frac-L-1)
/// ulps so that the total error is at most 2^-L.
Dyadic to_quality(const mpz_class& mid, std::int64_t frac, std::int64_t L);

/// True iff rad <= 2^(frac-L-1) ulps, i.e. the ball radius is <= 2^-(L+1).
bool fits_quality(const mpz_class& rad, std::int64_t frac, std::int64_t L);

/// Number of bits by which rad exceeds the 2^-(L+1) target (0 if it fits).
std::int64_t quality_deficit(const mpz_class& rad, std::int64_t frac, std::int64_t L);

} // namespace anewdsc::detail
