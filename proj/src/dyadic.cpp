#include "anewdsc/dyadic.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

#include "anewdsc/error.hpp"

namespace anewdsc {

namespace {

mpz_class shifted(const mpz_class& m, std::int64_t k) {
    mpz_class r;
    if (k >= 0)
        mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    else
        mpz_fdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    return r;
}

std::int64_t bit_length(const mpz_class& m) {
    return m == 0 ? 0 : static_cast<std::int64_t>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

} // namespace

void Dyadic::canonicalize() {
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    const auto tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
        exponent_ += static_cast<std::int64_t>(tz);
    }
}

Dyadic Dyadic::operator-() const {
    Dyadic r = *this;
    r.mantissa_ = -r.mantissa_;
    return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (exponent_ == o.exponent_) {
        mantissa_ += o.mantissa_;
    } else if (exponent_ < o.exponent_) {
        mantissa_ += shifted(o.mantissa_, o.exponent_ - exponent_);
    } else {
        mantissa_ = shifted(mantissa_, exponent_ - o.exponent_) + o.mantissa_;
        exponent_ = o.exponent_;
    }
    canonicalize();
    return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
    mantissa_ *= o.mantissa_;
    exponent_ += o.exponent_;
    if (mantissa_ == 0) exponent_ = 0;
    // product of odd mantissas is odd: already canonical
    return *this;
}

Dyadic Dyadic::mul_pow2(std::int64_t k) const {
    Dyadic r = *this;
    if (!r.is_zero()) r.exponent_ += k;
    return r;
}

Dyadic Dyadic::abs() const {
    Dyadic r = *this;
    r.mantissa_ = ::abs(r.mantissa_);
    return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    // same nonzero sign: compare magnitudes via bit positions first
    const std::int64_t ta = bit_length(a.mantissa_) + a.exponent_;
    const std::int64_t tb = bit_length(b.mantissa_) + b.exponent_;
    if (ta != tb) return sa > 0 ? ta <=> tb : tb <=> ta;
    const std::int64_t e = std::min(a.exponent_, b.exponent_);
    const int c = cmp(shifted(a.mantissa_, a.exponent_ - e), shifted(b.mantissa_, b.exponent_ - e));
    return c <=> 0;
}

std::int64_t Dyadic::floor_log2() const {
    if (is_zero()) throw Error(ErrorKind::invalid_input, "floor_log2 of zero");
    return bit_length(mantissa_) - 1 + exponent_;
}

std::int64_t Dyadic::ceil_log2() const {
    // canonical mantissa is odd, so |x| is a power of two iff |m| == 1
    const std::int64_t f = floor_log2();
    return (mantissa_ == 1 || mantissa_ == -1) ? f : f + 1;
}

mpz_class Dyadic::floor() const { return shifted(mantissa_, exponent_); }

mpz_class Dyadic::ceil() const { return -(-*this).floor(); }

Dyadic Dyadic::round_down(std::int64_t bits) const {
    if (exponent_ >= -bits) return *this;
    return Dyadic(shifted(mantissa_, exponent_ + bits), -bits);
}

Dyadic Dyadic::round_up(std::int64_t bits) const { return -(-*this).round_down(bits); }

Dyadic Dyadic::round_nearest(std::int64_t bits) const {
    if (exponent_ >= -bits) return *this;
    return (*this + pow2(-bits - 1)).round_down(bits);
}

mpz_class Dyadic::scaled_floor(std::int64_t bits) const { return shifted(mantissa_, exponent_ + bits); }

std::string Dyadic::to_string() const { return mantissa_.get_str() + "*2^" + std::to_string(exponent_); }

std::string Dyadic::to_decimal(int digits) const {
    if (digits < 1) digits = 1;
    if (is_zero()) return "0";
    const mpz_class m = ::abs(mantissa_);
    // decimal exponent estimate of |x|, corrected below
    const std::int64_t lg = bit_length(m) - 1 + exponent_;
    std::int64_t E = (lg * 30103) / 100000 - (lg < 0 ? 1 : 0);
    mpz_class q;
    for (int attempt = 0; attempt < 4; ++attempt) {
        // q = floor(|x| * 10^(digits-1-E))
        const std::int64_t k = digits - 1 - E;
        mpz_class num = m, den = 1;
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::llabs(k)));
        if (k >= 0) num *= p10; else den *= p10;
        if (exponent_ >= 0) num <<= static_cast<mp_bitcnt_t>(exponent_);
        else den <<= static_cast<mp_bitcnt_t>(-exponent_);
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        const auto len = static_cast<int>(q.get_str().size());
        if (q != 0 && len == digits) break;
        E += (q == 0 ? -1 : len - digits);
    }
    std::string s = q.get_str();
    std::string out = sign() < 0 ? "-" : "";
    out += s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(E);
    return out;
}

Dyadic Dyadic::parse(const std::string& text) {
    const auto star = text.find("*2^");
    try {
        if (star == std::string::npos) return Dyadic(mpz_class(text));
        return Dyadic(mpz_class(text.substr(0, star)), std::stoll(text.substr(star + 3)));
    } catch (const std::exception&) {
        throw Error(ErrorKind::invalid_input, "malformed dyadic '" + text + "'");
    }
}

Dyadic abs(const Dyadic& x) { return x.abs(); }
Dyadic min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

Dyadic round_to_quality(const Dyadic& x, Precision L) {
    if (L.bits < 1) throw Error(ErrorKind::invalid_input, "quality must be >= 1");
    return x.round_nearest(L.bits + 1);
}

DyadicInterval::DyadicInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw Error(ErrorKind::invalid_input, "interval with lo > hi");
}

Dyadic round_to_quality(const DyadicInterval& enclosure, Precision L) {
    if (enclosure.width() > Dyadic::pow2(-L.bits))
        throw Error(ErrorKind::invalid_input, "enclosure too wide for the requested quality");
    return round_to_quality(enclosure.midpoint(), L);
}

DyadicInterval interval_arith(const DyadicInterval& a, const DyadicInterval& b, IntervalOp op,
                              std::optional<std::int64_t> working_bits) {
    Dyadic lo, hi;
    switch (op) {
    case IntervalOp::add:
        lo = a.lo + b.lo;
        hi = a.hi + b.hi;
        break;
    case IntervalOp::sub:
        lo = a.lo - b.hi;
        hi = a.hi - b.lo;
        break;
    case IntervalOp::mul: {
        std::array<Dyadic, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        lo = *std::min_element(p.begin(), p.end());
        hi = *std::max_element(p.begin(), p.end());
        break;
    }
    }
    if (working_bits) {
        lo = lo.round_down(*working_bits);
        hi = hi.round_up(*working_bits);
    }
    return {std::move(lo), std::move(hi)};
}

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
    return interval_arith(a, b, IntervalOp::add);
}
DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
    return interval_arith(a, b, IntervalOp::sub);
}
DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
    return interval_arith(a, b, IntervalOp::mul);
}

std::string to_decimal_with_radius(const DyadicInterval& x, int digits) {
    const Dyadic r = x.width().mul_pow2(-1);
    std::string radius = "0";
    if (!r.is_zero()) {
        // one-digit upper bound: truncated leading digit plus one
        const std::string t = r.to_decimal(1);
        const int d = t[0] - '0' + 1;
        const std::int64_t e = std::stoll(t.substr(t.find('e') + 1));
        radius = d == 10 ? "1e" + std::to_string(e + 1) : std::to_string(d) + "e" + std::to_string(e);
    }
    return x.midpoint().to_decimal(digits) + " +/- " + radius;
}

} // namespace anewdsc
