#include "anewdsc/eval.hpp"

#include <algorithm>

#include "anewdsc/error.hpp"

namespace anewdsc {

std::vector<Dyadic> eval_approx_many(Context& ctx, std::span<const Dyadic> xs, Precision L, bool derivative) {
    if (L.bits < 1) throw Error(ErrorKind::invalid_input, "quality must be at least 1");
    const std::int64_t n = ctx.degree();
    std::int64_t lm = 0;
    for (const auto& x : xs) lm = std::max(lm, detail::log_m(x));
    // Horner error stays below 3(n+1) M(x)^n ulps (times n for P')
    std::int64_t W = L.bits + 1 + n * lm + detail::clog2(3 * (n + 1)) + (derivative ? detail::clog2(n) : 0);
    ctx.note_precision(L.bits);

    std::vector<detail::Ball> balls(xs.size());
    for (;;) {
        const detail::BallPoly& p = ctx.coefficients(W, derivative);
        std::int64_t deficit = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            balls[i] = detail::horner(p, xs[i]);
            deficit = std::max(deficit, detail::quality_deficit(balls[i].rad, W, L.bits));
        }
        if (deficit == 0) break;
        W += deficit + 2;
    }
    std::vector<Dyadic> out;
    out.reserve(xs.size());
    for (const auto& b : balls) out.push_back(detail::to_quality(b.mid, W, L.bits));
    return out;
}

Dyadic eval_approx(Context& ctx, const Dyadic& x0, Precision L) {
    return eval_approx_many(ctx, std::span<const Dyadic>(&x0, 1), L, false).front();
}

Dyadic eval_approx(const Oracle& p, const Dyadic& x0, Precision L) {
    Context ctx(p);
    return eval_approx(ctx, x0, L);
}

Dyadic eval_derivative_approx(Context& ctx, const Dyadic& x0, Precision L) {
    return eval_approx_many(ctx, std::span<const Dyadic>(&x0, 1), L, true).front();
}

std::int64_t nearest_log2(const Dyadic& y) {
    const Dyadic v = abs(y);
    const std::int64_t k = v.floor_log2();
    // log2 v < k + 1/2  <=>  v^2 < 2^(2k+1)
    return (v * v < Dyadic::pow2(2 * k + 1)) ? k : k + 1;
}

Magnitude magnitude(Context& ctx, const Dyadic& x0) {
    if (auto m = ctx.cached_magnitude(x0)) return *m;
    const std::int64_t cap = ctx.config().precision_cap;
    for (std::int64_t L = 1;; L *= 2) {
        if (L > cap) throw Error(ErrorKind::precision_cap, "magnitude undecided at cap: P(" + x0.to_string() + ")");
        const Dyadic y = eval_approx(ctx, x0, Precision{L});
        if (abs(y) >= Dyadic::pow2(2 - L)) {
            const Magnitude m{nearest_log2(y), y.sign()};
            ctx.remember_magnitude(x0, m);
            return m;
        }
    }
}

Magnitude magnitude(const Oracle& p, const Dyadic& x0, std::optional<std::int64_t> precision_cap) {
    Config cfg;
    if (precision_cap) cfg.precision_cap = *precision_cap;
    Context ctx(p, cfg);
    return magnitude(ctx, x0);
}

Multipoint make_multipoint(const Dyadic& m, const Dyadic& eps, int n) {
    if (eps.sign() <= 0) throw Error(ErrorKind::invalid_input, "multipoint spacing must be positive");
    const long half = (n + 1) / 2;
    Multipoint mp{m, eps, {}};
    mp.points.reserve(static_cast<std::size_t>(2 * half + 1));
    for (long i = -half; i <= half; ++i) mp.points.push_back(m + Dyadic(i) * eps);
    return mp;
}

AdmissiblePoint admissible_point(Context& ctx, std::span<const Dyadic> xs) {
    if (xs.empty()) throw Error(ErrorKind::invalid_input, "admissible point needs a nonempty point set");
    const std::int64_t cap = ctx.config().precision_cap;
    for (std::int64_t L = 1;; L *= 2) {
        if (L > cap) throw Error(ErrorKind::precision_cap, "no admissible point certified near " + xs.front().to_string());
        const std::vector<Dyadic> ys = eval_approx_many(ctx, xs, Precision{L});
        std::size_t best = 0;
        for (std::size_t i = 1; i < ys.size(); ++i)
            if (abs(ys[i]) > abs(ys[best])) best = i;
        if (abs(ys[best]) >= Dyadic::pow2(2 - L)) {
            AdmissiblePoint r{best, xs[best], nearest_log2(ys[best]), ys[best].sign()};
            // t also sandwiches |P(x*)| itself
            ctx.remember_magnitude(r.x, Magnitude{r.t, r.sign});
            return r;
        }
    }
}

} // namespace anewdsc
