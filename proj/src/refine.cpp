#include "anewdsc/refine.hpp"

#include <algorithm>
#include <array>

#include "anewdsc/detail/ball_poly.hpp"
#include "anewdsc/error.hpp"
#include "anewdsc/eval.hpp"
#include "anewdsc/newton.hpp"

namespace anewdsc {

std::pair<Dyadic, Dyadic> two_point_grid(const Dyadic& m, const Dyadic& eps, int n) {
    if (eps.sign() <= 0) throw Error(ErrorKind::invalid_input, "grid spacing must be positive");
    const Dyadic off = Dyadic(static_cast<long>((n + 1) / 2)) * eps;
    return {m - off, m + off};
}

int sign_test(Context& ctx, const Dyadic& x, const Dyadic& y) {
    return magnitude(ctx, x).sign * magnitude(ctx, y).sign;
}

std::vector<Interval> refine(Context& ctx, const std::vector<Interval>& intervals, std::int64_t kappa) {
    if (kappa < 1) throw Error(ErrorKind::invalid_input, "kappa must be positive");
    const int n = ctx.degree();
    const Dyadic target = Dyadic::pow2(-kappa);
    RunStats& stats = ctx.stats();
    std::vector<Interval> out;
    out.reserve(intervals.size());

    for (const Interval& start : intervals) {
        if (start.width() < target) {
            out.push_back(start);
            continue;
        }
        std::vector<ActiveInterval> work{{start, 1}};
        std::uint64_t iterations = 0;
        std::optional<Interval> done;
        while (!work.empty()) {
            const ActiveInterval act = work.back();
            work.pop_back();
            if (++iterations > ctx.config().iteration_cap)
                throw Error(ErrorKind::iteration_cap, "refinement exceeded the iteration cap at " + act.I.to_string());
            ++stats.tree_size;
            stats.max_level = std::max(stats.max_level, act.level);
            const Interval& I = act.I;

            std::optional<Interval> next;
            StepKind kind = StepKind::linear;
            if (!ctx.config().bisection_only) {
                if ((next = boundary_test(ctx, act, TestMode::refine))) {
                    kind = StepKind::boundary;
                    ++stats.boundary_successes;
                } else if ((next = newton_test(ctx, act, TestMode::refine))) {
                    kind = StepKind::newton;
                    ++stats.newton_successes;
                }
            }
            int level;
            if (next) {
                ++stats.quadratic_steps;
                level = act.level + 1;
            } else {
                const Dyadic eps = I.width().mul_pow2(-(2 + detail::clog2(n)));
                const auto [m1, m2] = two_point_grid(I.midpoint(), eps, n);
                const std::array<Dyadic, 2> xs{m1, m2};
                const Dyadic ms = admissible_point(ctx, xs).x;
                next = sign_test(ctx, I.a, ms) < 0 ? Interval(I.a, ms) : Interval(ms, I.b);
                ++stats.linear_steps;
                level = std::max(1, act.level - 1);
            }
            if (ctx.observer()) ctx.observer()->on_step(I, act.level, *next, level, kind);
            if (next->width() < target) {
                done = *next;
                break;
            }
            work.push_back({*next, level});
        }
        out.push_back(*done);
    }
    return out;
}

} // namespace anewdsc
