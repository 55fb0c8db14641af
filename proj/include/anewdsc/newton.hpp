#pragma once

#include <cstdint>
#include <optional>

#include "anewdsc/context.hpp"
#include "anewdsc/interval.hpp"

namespace anewdsc {

/// Work item (I, N_I) with N_I = 2^(2^level), level >= 1.
struct ActiveInterval {
    Interval I;
    int level = 1;

    /// log2 N_I
    std::int64_t log2_N() const { return std::int64_t{1} << level; }
};

/// How the tests pick points and certify flanks. `isolate` uses full
/// multipoints and 0-Tests; `refine` (intervals known to hold exactly one
/// root) uses two-point grids and endpoint sign tests.
enum class TestMode { isolate, refine };

/// Newton-Test. On success returns I' inside I holding every root of P in I,
/// with w(I)/(8N) <= w(I') <= w(I)/N.
std::optional<Interval> newton_test(Context& ctx, const ActiveInterval& A, TestMode mode = TestMode::isolate);

/// Boundary-Test. On success returns (a, m_l*) or (m_r*, b), holding every
/// root of P in I.
std::optional<Interval> boundary_test(Context& ctx, const ActiveInterval& A, TestMode mode = TestMode::isolate);

} // namespace anewdsc
