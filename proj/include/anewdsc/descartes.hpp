#pragma once

#include <optional>
#include <span>
#include <vector>

#include "anewdsc/context.hpp"
#include "anewdsc/dyadic.hpp"
#include "anewdsc/eval.hpp"
#include "anewdsc/interval.hpp"

namespace anewdsc {

/// Sign changes after deleting zeros.
int sign_variations(std::span<const Dyadic> seq);
int sign_variations(std::span<const int> signs);

/// Quality-L approximation of P_I = (x+1)^n P((ax+b)/(x+1)).
struct TransformedPoly {
    std::vector<Dyadic> coeffs;
    Precision quality;

    int variations() const { return sign_variations(coeffs); }
    /// True iff every |coeff| > 2^-quality.
    bool all_above_quality() const;
};

TransformedPoly transform_approx(Context& ctx, const Interval& I, Precision L);
TransformedPoly transform_approx(const Oracle& p, const Interval& I, Precision L);

/// True certifies that I holds no real root. Requires P(a), P(b) != 0.
bool zero_test(Context& ctx, const Interval& I);
bool zero_test(const Oracle& p, const Interval& I);

struct OneTestOutcome {
    /// Set iff I' isolates the unique root of P in I.
    std::optional<Interval> isolating;
    /// Admissible split point near m(I); reused by the linear step.
    AdmissiblePoint split;
};

OneTestOutcome one_test(Context& ctx, const Interval& I);
std::optional<Interval> one_test(const Oracle& p, const Interval& I);

/// Throws degenerate_interval if I is narrower than 2^-exponent_bound.
void check_degenerate(const Context& ctx, const Interval& I);

} // namespace anewdsc
