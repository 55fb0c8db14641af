#pragma once

// Exact rational arithmetic used only to check the solver: Sturm counting,
// exact P_I, Bernstein coefficients and square-free parts. Deliberately naive.

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "anewdsc/dyadic.hpp"
#include "anewdsc/interval.hpp"
#include "anewdsc/oracle.hpp"

namespace anewdsc::reference {

/// Coefficients lowest degree first. Normalized so the last entry is nonzero
/// (the zero polynomial is the empty vector).
struct ExactPoly {
    std::vector<mpq_class> coeffs;

    ExactPoly() = default;
    explicit ExactPoly(std::vector<mpq_class> c);
    static ExactPoly from_integers(const std::vector<mpz_class>& c);
    static ExactPoly from_dyadics(const std::vector<Dyadic>& c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    const mpq_class& leading() const { return coeffs.back(); }
    bool operator==(const ExactPoly&) const = default;
};

mpq_class to_rational(const Dyadic& x);

/// The exact coefficients of an exact oracle.
ExactPoly from_oracle(const CoefficientOracle& p);

/// Oracle with the same coefficients (exact if all denominators are powers of 2).
Oracle to_oracle(const ExactPoly& p);

mpq_class evaluate(const ExactPoly& p, const mpq_class& x);
ExactPoly derivative(const ExactPoly& p);
ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
/// Quotient and remainder of polynomial division; b must be nonzero.
std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& a, const ExactPoly& b);
/// Monic gcd.
ExactPoly gcd(ExactPoly a, ExactPoly b);

/// p / gcd(p, p'), scaled to a primitive integer polynomial with positive
/// leading coefficient.
ExactPoly square_free_part(const ExactPoly& p);

/// Integer coefficients of the primitive integer multiple of p with positive
/// leading coefficient.
std::vector<mpz_class> primitive_integer(const ExactPoly& p);

/// Number of distinct real roots in the open interval (a, b). Throws
/// invalid_input if p(a) = 0 or p(b) = 0. p need not be square-free.
int sturm_count(const ExactPoly& p, const mpq_class& a, const mpq_class& b);
/// Number of distinct real roots of p.
int real_root_count(const ExactPoly& p);

/// (x+1)^n p((ax+b)/(x+1)), with n = deg p.
ExactPoly exact_transform(const ExactPoly& p, const mpq_class& a, const mpq_class& b);
ExactPoly exact_transform(const ExactPoly& p, const Interval& I);

int sign_variations(const std::vector<mpq_class>& seq);
/// var(P, I) computed from the exact transform.
int exact_var(const ExactPoly& p, const Interval& I);

/// Bernstein coefficients of p on [0, 1] (degree deg p).
std::vector<mpq_class> bernstein_unit(const ExactPoly& p);
/// de Casteljau subdivision at parameter t: coefficients on [0, t] and [t, 1]
/// of the rescaled pieces.
std::pair<std::vector<mpq_class>, std::vector<mpq_class>> de_casteljau_split(const std::vector<mpq_class>& b,
                                                                          const mpq_class& t);

mpz_class binomial(unsigned long n, unsigned long k);

} // namespace anewdsc::reference
