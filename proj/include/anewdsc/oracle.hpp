#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "anewdsc/dyadic.hpp"

namespace anewdsc {

/// Coefficients c_0..c_n, each within 2^-quality of the true coefficient.
struct ApproxPolynomial {
    std::vector<Dyadic> coeffs;
    Precision quality;
};

/// Source of arbitrarily good dyadic approximations of a fixed real
/// polynomial of degree >= 2. Implementations are immutable.
class CoefficientOracle {
public:
    virtual ~CoefficientOracle() = default;

    int degree() const { return degree_; }
    std::optional<std::int64_t> tau_hint() const { return tau_hint_; }

    /// Quality-L approximations of all n+1 coefficients, lowest degree first.
    virtual ApproxPolynomial approximate(Precision L) const = 0;

    /// True if approximate() returns the exact coefficients at every L.
    virtual bool exact() const { return false; }

protected:
    CoefficientOracle(int degree, std::optional<std::int64_t> tau) : degree_(degree), tau_hint_(tau) {}

private:
    int degree_;
    std::optional<std::int64_t> tau_hint_;
};

using Oracle = std::shared_ptr<const CoefficientOracle>;

/// Integer coefficients, lowest degree first. Throws invalid_input for the
/// zero polynomial, degree < 2, or a zero leading coefficient.
Oracle from_integer_poly(const std::vector<mpz_class>& coeffs);

/// Exact dyadic coefficients, lowest degree first.
Oracle from_dyadic_poly(const std::vector<Dyadic>& coeffs);

/// Coefficients numerators[i]/denominators[i]. Falls back to an exact oracle
/// when every denominator is a power of two.
Oracle from_rational_poly(const std::vector<mpz_class>& numerators, const std::vector<mpz_class>& denominators);
Oracle from_rational_poly(const std::vector<mpq_class>& coeffs);

/// The oracle for 2^shift * P. Scaling is an exponent shift, so exactness
/// is preserved.
Oracle scale_oracle(Oracle inner, std::int64_t shift);

/// Finds t with 2^t/4 <= |P_n| <= 2^t and returns the oracle of 2^-t * P
/// together with t. The leading coefficient is estimated with doubling
/// precision; exceeding `precision_cap` bits throws precision_cap.
std::pair<Oracle, std::int64_t> normalize_leading(const Oracle& oracle, std::int64_t precision_cap = 1 << 20);

} // namespace anewdsc
