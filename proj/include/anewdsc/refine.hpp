#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "anewdsc/context.hpp"
#include "anewdsc/interval.hpp"

namespace anewdsc {

/// First and last point of the multipoint m[eps]: m -+ ceil(n/2) eps.
std::pair<Dyadic, Dyadic> two_point_grid(const Dyadic& m, const Dyadic& eps, int n);

/// Sign of P(x) * P(y) (never 0). Requires P(x), P(y) != 0; otherwise the
/// magnitude estimate runs into the precision cap.
int sign_test(Context& ctx, const Dyadic& x, const Dyadic& y);

/// Shrinks each isolating interval (var(P, I) = 1) to width < 2^-kappa.
/// Intervals already that narrow are returned unchanged.
std::vector<Interval> refine(Context& ctx, const std::vector<Interval>& intervals, std::int64_t kappa);

} // namespace anewdsc
