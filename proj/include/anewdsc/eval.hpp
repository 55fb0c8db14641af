#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "anewdsc/context.hpp"
#include "anewdsc/dyadic.hpp"
#include "anewdsc/oracle.hpp"

namespace anewdsc {

/// Quality-L approximation of P(x0): |P(x0) - result| <= 2^-L.
Dyadic eval_approx(Context& ctx, const Dyadic& x0, Precision L);
Dyadic eval_approx(const Oracle& p, const Dyadic& x0, Precision L);

/// Quality-L approximation of P'(x0).
Dyadic eval_derivative_approx(Context& ctx, const Dyadic& x0, Precision L);

/// Quality-L approximations of P at every point, sharing one coefficient load.
std::vector<Dyadic> eval_approx_many(Context& ctx, std::span<const Dyadic> xs, Precision L, bool derivative = false);

/// Integer t with 2^(t-1) <= |P(x0)| <= 2^(t+1), found by doubling the
/// evaluation quality until |y~| >= 2^(2-L). Throws precision_cap
/// ("magnitude undecided at cap") if P(x0) is zero or too small to certify.
Magnitude magnitude(Context& ctx, const Dyadic& x0);
Magnitude magnitude(const Oracle& p, const Dyadic& x0, std::optional<std::int64_t> precision_cap = std::nullopt);

/// Integer t with |t - log2 y| <= 1/2 for y > 0.
std::int64_t nearest_log2(const Dyadic& y);

/// The 2*ceil(n/2)+1 points m + (i - ceil(n/2)) * eps.
struct Multipoint {
    Dyadic center;
    Dyadic spacing;
    std::vector<Dyadic> points;
};

Multipoint make_multipoint(const Dyadic& m, const Dyadic& eps, int n);

struct AdmissiblePoint {
    std::size_t index = 0;
    Dyadic x;
    /// 2^(t-1) <= |P(x)| <= max_i |P(x_i)| <= 2^(t+1)
    std::int64_t t = 0;
    int sign = 0;
};

/// A point x* of X with |P(x*)| >= max_i |P(x_i)| / 4. Ties go to the lowest
/// index. Throws precision_cap if no point can be certified (P vanishes on X).
AdmissiblePoint admissible_point(Context& ctx, std::span<const Dyadic> xs);

} // namespace anewdsc
