#pragma once

#include <cstdint>
#include <vector>

#include "anewdsc/context.hpp"
#include "anewdsc/interval.hpp"

namespace anewdsc {

/// 2^Gamma bounds every root modulus plus one; Gamma = 2^gamma.
struct RootBound {
    std::int64_t gamma = 1;
    std::int64_t Gamma() const { return std::int64_t{1} << gamma; }
};

struct IsolationResult {
    std::vector<Interval> intervals;  // sorted, pairwise disjoint, one root each
    RunStats stats;
};

/// Cauchy-style bound from quality-8 coefficient enclosures of a normalized P.
RootBound root_bound(Context& ctx);

/// The 2*gamma+2 starting intervals between admissible points near
/// -2^(2^gamma), ..., -2, 0, 2, ..., 2^(2^gamma).
std::vector<Interval> initialize(Context& ctx, const RootBound& B);

/// Isolates all real roots of the square-free, normalized polynomial in ctx.
IsolationResult isolate(Context& ctx);

/// Normalizes the leading coefficient, then isolates.
IsolationResult isolate(const Oracle& p, const Config& cfg = {}, Observer* obs = nullptr);

} // namespace anewdsc
