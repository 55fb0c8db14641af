#include "anewdsc/oracle.hpp"

#include <algorithm>
#include <string>

#include "anewdsc/error.hpp"

namespace anewdsc {

namespace {

void check_shape(std::size_t size, bool leading_zero, bool all_zero) {
    if (all_zero) throw Error(ErrorKind::invalid_input, "zero polynomial");
    if (size < 3) throw Error(ErrorKind::invalid_input, "degree must be at least 2");
    if (leading_zero) throw Error(ErrorKind::invalid_input, "leading coefficient is zero");
}

class ExactOracle final : public CoefficientOracle {
public:
    ExactOracle(std::vector<Dyadic> c, std::optional<std::int64_t> tau)
        : CoefficientOracle(static_cast<int>(c.size()) - 1, tau), coeffs_(std::move(c)) {}

    ApproxPolynomial approximate(Precision L) const override { return {coeffs_, L}; }
    bool exact() const override { return true; }

private:
    std::vector<Dyadic> coeffs_;
};

class RationalOracle final : public CoefficientOracle {
public:
    explicit RationalOracle(std::vector<mpq_class> c, std::optional<std::int64_t> tau)
        : CoefficientOracle(static_cast<int>(c.size()) - 1, tau), coeffs_(std::move(c)) {}

    ApproxPolynomial approximate(Precision L) const override {
        ApproxPolynomial out{{}, L};
        out.coeffs.reserve(coeffs_.size());
        const auto guard = static_cast<mp_bitcnt_t>(L.bits + 2);
        for (const auto& q : coeffs_) {
            // floor(p * 2^(L+2) / q): error < 2^-(L+2), then round onto the
            // quality grid (another 2^-(L+2))
            mpz_class num = q.get_num(), s;
            num <<= guard;
            mpz_fdiv_q(s.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
            out.coeffs.push_back(round_to_quality(Dyadic(s, -static_cast<std::int64_t>(guard)), L));
        }
        return out;
    }

private:
    std::vector<mpq_class> coeffs_;
};

class ScaledOracle final : public CoefficientOracle {
public:
    ScaledOracle(Oracle inner, std::int64_t shift)
        : CoefficientOracle(inner->degree(), shifted_tau(*inner, shift)), inner_(std::move(inner)), shift_(shift) {}

    ApproxPolynomial approximate(Precision L) const override {
        // error 2^-Q * 2^shift <= 2^-L
        const Precision q{std::max<std::int64_t>(1, L.bits + shift_)};
        ApproxPolynomial a = inner_->approximate(q);
        for (auto& c : a.coeffs) c = c.mul_pow2(shift_);
        a.quality = L;
        return a;
    }
    bool exact() const override { return inner_->exact(); }

private:
    static std::optional<std::int64_t> shifted_tau(const CoefficientOracle& o, std::int64_t shift) {
        if (!o.tau_hint()) return std::nullopt;
        return std::max<std::int64_t>(0, *o.tau_hint() + shift);
    }

    Oracle inner_;
    std::int64_t shift_;
};

std::int64_t ceil_log2_abs(const mpz_class& v) { return Dyadic(v).ceil_log2(); }

} // namespace

Oracle from_integer_poly(const std::vector<mpz_class>& coeffs) {
    const bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const mpz_class& c) { return c == 0; });
    check_shape(coeffs.size(), !coeffs.empty() && coeffs.back() == 0, all_zero);
    std::vector<Dyadic> d;
    d.reserve(coeffs.size());
    mpz_class mx = 0;
    for (const auto& c : coeffs) {
        d.emplace_back(c);
        if (abs(c) > mx) mx = abs(c);
    }
    return std::make_shared<ExactOracle>(std::move(d), ceil_log2_abs(mx));
}

Oracle from_dyadic_poly(const std::vector<Dyadic>& coeffs) {
    const bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Dyadic& c) { return c.is_zero(); });
    check_shape(coeffs.size(), !coeffs.empty() && coeffs.back().is_zero(), all_zero);
    Dyadic mx;
    for (const auto& c : coeffs) mx = max(mx, abs(c));
    return std::make_shared<ExactOracle>(coeffs, mx.ceil_log2());
}

Oracle from_rational_poly(const std::vector<mpz_class>& numerators, const std::vector<mpz_class>& denominators) {
    if (numerators.size() != denominators.size())
        throw Error(ErrorKind::invalid_input, "numerator and denominator counts differ");
    std::vector<mpq_class> q;
    q.reserve(numerators.size());
    for (std::size_t i = 0; i < numerators.size(); ++i) {
        if (denominators[i] == 0) throw Error(ErrorKind::invalid_input, "zero denominator in coefficient " + std::to_string(i));
        mpq_class v(numerators[i], denominators[i]);
        v.canonicalize();
        q.push_back(v);
    }
    return from_rational_poly(q);
}

Oracle from_rational_poly(const std::vector<mpq_class>& coeffs) {
    const bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const mpq_class& c) { return c == 0; });
    check_shape(coeffs.size(), !coeffs.empty() && coeffs.back() == 0, all_zero);

    const bool dyadic = std::all_of(coeffs.begin(), coeffs.end(), [](const mpq_class& c) {
        return mpz_popcount(c.get_den_mpz_t()) == 1;
    });
    if (dyadic) {
        std::vector<Dyadic> d;
        for (const auto& c : coeffs) {
            const auto k = static_cast<std::int64_t>(mpz_sizeinbase(c.get_den_mpz_t(), 2)) - 1;
            d.emplace_back(c.get_num(), -k);
        }
        return from_dyadic_poly(d);
    }

    // ceil(log2 max|c|) from the integer ceiling of the largest magnitude
    mpq_class mx = 0;
    for (const auto& c : coeffs) mx = std::max(mx, mpq_class(abs(c)));
    mpz_class upper;
    mpz_cdiv_q(upper.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    std::optional<std::int64_t> tau;
    if (upper >= 1) tau = ceil_log2_abs(upper);
    return std::make_shared<RationalOracle>(coeffs, tau);
}

Oracle scale_oracle(Oracle inner, std::int64_t shift) {
    if (shift == 0) return inner;
    return std::make_shared<ScaledOracle>(std::move(inner), shift);
}

std::pair<Oracle, std::int64_t> normalize_leading(const Oracle& oracle, std::int64_t precision_cap) {
    const auto n = static_cast<std::size_t>(oracle->degree());
    for (std::int64_t L = 1;; L *= 2) {
        if (L > precision_cap)
            throw Error(ErrorKind::precision_cap, "cannot certify a nonzero leading coefficient within the precision cap");
        const Dyadic c = abs(oracle->approximate(Precision{L}).coeffs[n]);
        const Dyadic tol = oracle->exact() ? Dyadic() : Dyadic::pow2(-L);
        if (c.is_zero() || c < Dyadic::pow2(2 - L)) continue;
        // |c - |P_n|| <= |c|/4, so hi/lo <= 5/3 < 2 and t = ceil(log2 hi)
        // gives 2^t >= hi and 2^t/4 < hi/2 <= lo
        const Dyadic hi = c + tol;
        const std::int64_t t = hi.ceil_log2();
        return {scale_oracle(oracle, -t), t};
    }
}

} // namespace anewdsc
