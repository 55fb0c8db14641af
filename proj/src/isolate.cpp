#include "anewdsc/isolate.hpp"

#include <algorithm>

#include "anewdsc/descartes.hpp"
#include "anewdsc/detail/ball_poly.hpp"
#include "anewdsc/error.hpp"
#include "anewdsc/eval.hpp"
#include "anewdsc/newton.hpp"

namespace anewdsc {

RootBound root_bound(Context& ctx) {
    const ApproxPolynomial q = ctx.poly().approximate(Precision{8});
    const int n = ctx.degree();
    Dyadic max_u = 0;
    for (int i = 0; i < n; ++i) max_u = max(max_u, abs(q.coeffs[i]) + Dyadic::pow2(-8));
    // |z| < 1 + max_i |P_i| / |P_n| with |P_n| >= 1/4
    const Dyadic bound = Dyadic(1) + max_u.mul_pow2(2);
    const std::int64_t gamma_tilde = std::max<std::int64_t>(2, bound.ceil_log2() + 1);
    return RootBound{detail::clog2(gamma_tilde)};
}

std::vector<Interval> initialize(Context& ctx, const RootBound& B) {
    const int n = ctx.degree();
    const std::int64_t g = B.gamma;
    std::vector<Dyadic> base;
    for (std::int64_t k = 0; k <= g; ++k) base.push_back(-Dyadic::pow2(std::int64_t{1} << (g - k)));
    base.emplace_back(0);
    for (std::int64_t k = g + 2; k <= 2 * g + 2; ++k) base.push_back(Dyadic::pow2(std::int64_t{1} << (k - g - 2)));

    const Dyadic eps = Dyadic::pow2(-detail::clog2(std::int64_t{n} * n));
    std::vector<Dyadic> pts;
    pts.reserve(base.size());
    for (const auto& s : base) pts.push_back(admissible_point(ctx, make_multipoint(s, eps, n).points).x);

    std::vector<Interval> out;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) out.emplace_back(pts[k], pts[k + 1]);
    return out;
}

namespace {

void record_step(Context& ctx, const ActiveInterval& parent, const Interval& child, int child_level, StepKind kind) {
    const int expected = kind == StepKind::linear ? std::max(1, parent.level - 1) : parent.level + 1;
    if (child_level != expected) throw std::logic_error("level bookkeeping broken at " + parent.I.to_string());
    if (ctx.observer()) ctx.observer()->on_step(parent.I, parent.level, child, child_level, kind);
}

} // namespace

IsolationResult isolate(Context& ctx) {
    const RootBound B = root_bound(ctx);
    std::vector<Interval> start;
    if (ctx.config().single_initial_interval) {
        const Dyadic r = Dyadic::pow2(B.Gamma());
        start.emplace_back(-r, r);
    } else {
        start = initialize(ctx, B);
    }

    RunStats& stats = ctx.stats();
    std::vector<ActiveInterval> work;
    for (auto it = start.rbegin(); it != start.rend(); ++it) work.push_back({*it, 1});

    IsolationResult result;
    std::uint64_t iterations = 0;
    while (!work.empty()) {
        const ActiveInterval act = work.back();
        work.pop_back();
        if (++iterations > ctx.config().iteration_cap)
            throw Error(ErrorKind::iteration_cap,
                        "iteration cap reached at " + act.I.to_string() + " (is the input square-free?)");
        ++stats.tree_size;
        stats.max_level = std::max(stats.max_level, act.level);
        check_degenerate(ctx, act.I);

        if (zero_test(ctx, act.I)) {
            ++stats.zero_test_successes;
            continue;
        }
        const OneTestOutcome one = one_test(ctx, act.I);
        if (one.isolating) {
            ++stats.one_test_successes;
            result.intervals.push_back(*one.isolating);
            continue;
        }
        if (!ctx.config().bisection_only) {
            std::optional<Interval> next;
            StepKind kind = StepKind::boundary;
            if ((next = boundary_test(ctx, act))) {
                ++stats.boundary_successes;
            } else if ((next = newton_test(ctx, act))) {
                kind = StepKind::newton;
                ++stats.newton_successes;
            }
            if (next) {
                ++stats.quadratic_steps;
                record_step(ctx, act, *next, act.level + 1, kind);
                work.push_back({*next, act.level + 1});
                continue;
            }
        }
        const Dyadic& ms = one.split.x;
        const int level = std::max(1, act.level - 1);
        const Interval left(act.I.a, ms), right(ms, act.I.b);
        ++stats.linear_steps;
        record_step(ctx, act, left, level, StepKind::linear);
        record_step(ctx, act, right, level, StepKind::linear);
        work.push_back({right, level});
        work.push_back({left, level});
    }
    std::sort(result.intervals.begin(), result.intervals.end(),
              [](const Interval& x, const Interval& y) { return x.a < y.a; });
    result.stats = stats;
    return result;
}

IsolationResult isolate(const Oracle& p, const Config& cfg, Observer* obs) {
    Context ctx(normalize_leading(p, cfg.precision_cap).first, cfg, obs);
    return isolate(ctx);
}

} // namespace anewdsc
