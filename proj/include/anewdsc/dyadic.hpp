#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace anewdsc {

/// Exact binary fraction mantissa * 2^exponent.
///
/// Values are kept canonical: the mantissa is odd, or it is zero and then
/// the exponent is zero too. Canonical form makes equality structural.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long v) : mantissa_(v) { canonicalize(); } // NOLINT: implicit from integers
    explicit Dyadic(const mpz_class& m, std::int64_t e = 0) : mantissa_(m), exponent_(e) { canonicalize(); }

    /// 2^k.
    static Dyadic pow2(std::int64_t k) { return Dyadic(mpz_class(1), k); }

    const mpz_class& mantissa() const { return mantissa_; }
    std::int64_t exponent() const { return exponent_; }

    int sign() const { return sgn(mantissa_); }
    bool is_zero() const { return mantissa_ == 0; }

    Dyadic operator-() const;
    Dyadic& operator+=(const Dyadic& o);
    Dyadic& operator-=(const Dyadic& o);
    Dyadic& operator*=(const Dyadic& o);

    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
    friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
    friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

    /// Exact multiplication by 2^k.
    Dyadic mul_pow2(std::int64_t k) const;
    Dyadic abs() const;

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
    }

    /// floor(log2 |x|) for x != 0.
    std::int64_t floor_log2() const;
    /// Smallest k with |x| <= 2^k, for x != 0.
    std::int64_t ceil_log2() const;

    /// Number of bits after the binary point (0 for integers).
    std::int64_t fractional_bits() const { return exponent_ < 0 ? -exponent_ : 0; }

    mpz_class floor() const;
    mpz_class ceil() const;

    /// x rounded to a multiple of 2^-bits, toward -inf / +inf / nearest.
    Dyadic round_down(std::int64_t bits) const;
    Dyadic round_up(std::int64_t bits) const;
    Dyadic round_nearest(std::int64_t bits) const;

    /// Fixed-point image: x * 2^bits rounded toward -inf (exact when x has at
    /// most `bits` fractional bits).
    mpz_class scaled_floor(std::int64_t bits) const;

    /// "m*2^e"
    std::string to_string() const;
    /// Decimal approximation with `digits` significant digits, truncated
    /// toward zero, e.g. "1.414213562e0". Error < 10^(E-digits+1).
    std::string to_decimal(int digits = 20) const;
    /// Parses the "m*2^e" form (or a bare integer).
    static Dyadic parse(const std::string& text);

private:
    void canonicalize();

    mpz_class mantissa_{0};
    std::int64_t exponent_ = 0;
};

Dyadic abs(const Dyadic& x);
Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

/// Approximation quality L: an absolute error bound of 2^-L.
struct Precision {
    std::int64_t bits = 1;
};

/// Rounds x to the quality-L grid s*2^-(L+1); the error is at most 2^-(L+2).
Dyadic round_to_quality(const Dyadic& x, Precision L);

/// Closed interval [lo, hi] of dyadics; used both for real-line intervals
/// and as a rigorous enclosure of a computed value.
struct DyadicInterval {
    Dyadic lo;
    Dyadic hi;

    DyadicInterval() = default;
    DyadicInterval(Dyadic v) : lo(v), hi(std::move(v)) {} // NOLINT
    DyadicInterval(Dyadic l, Dyadic h);

    Dyadic width() const { return hi - lo; }
    Dyadic midpoint() const { return (lo + hi).mul_pow2(-1); }
    bool contains(const Dyadic& x) const { return lo <= x && x <= hi; }
    bool contains(const DyadicInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool operator==(const DyadicInterval&) const = default;
};

/// Given an enclosure of width <= 2^-L of some real z, returns a quality-L
/// approximation of z on the s*2^-(L+1) grid.
Dyadic round_to_quality(const DyadicInterval& enclosure, Precision L);

enum class IntervalOp { add, sub, mul };

/// Outward-rounded interval arithmetic. `working_bits` bounds the number of
/// fractional bits of the result endpoints; nullopt means exact.
DyadicInterval interval_arith(const DyadicInterval& a, const DyadicInterval& b, IntervalOp op,
                              std::optional<std::int64_t> working_bits = std::nullopt);

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b);

/// Midpoint in decimal with an explicit radius, "1.41421e0 +/- 5e-1".
std::string to_decimal_with_radius(const DyadicInterval& x, int digits = 20);

} // namespace anewdsc
