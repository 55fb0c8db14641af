#include "anewdsc/descartes.hpp"

#include <algorithm>

#include "anewdsc/detail/ball_poly.hpp"
#include "anewdsc/error.hpp"

namespace anewdsc {

int sign_variations(std::span<const int> signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int sign_variations(std::span<const Dyadic> seq) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& c : seq) signs.push_back(c.sign());
    return sign_variations(signs);
}

bool TransformedPoly::all_above_quality() const {
    const Dyadic bound = Dyadic::pow2(-quality.bits);
    return std::all_of(coeffs.begin(), coeffs.end(), [&](const Dyadic& c) { return abs(c) > bound; });
}

void check_degenerate(const Context& ctx, const Interval& I) {
    const std::int64_t bound = ctx.config().exponent_bound;
    if (I.width().floor_log2() < -bound || I.a.fractional_bits() > bound || I.b.fractional_bits() > bound)
        throw Error(ErrorKind::degenerate_interval,
                    "interval narrower than 2^-" + std::to_string(bound) + " (is the input square-free?): " +
                        I.to_string());
}

TransformedPoly transform_approx(Context& ctx, const Interval& I, Precision L) {
    if (L.bits < 1) throw Error(ErrorKind::invalid_input, "quality must be at least 1");
    check_degenerate(ctx, I);
    const std::int64_t n = ctx.degree();
    const Dyadic w = I.width();
    ctx.note_precision(L.bits);

    // a priori guess; the radius check below corrects it if it is too small
    std::int64_t W = L.bits + 2 + n * (detail::log_m(I.a) + detail::log_m(w) + 2) + detail::clog2(n + 1);
    for (;;) {
        detail::BallPoly p = detail::load(ctx.poly(), W);
        detail::taylor_shift(p, I.a);
        detail::scale(p, w);
        detail::reverse(p);
        detail::taylor_shift_one(p);
        const std::int64_t deficit = detail::quality_deficit(p.max_rad(), W, L.bits);
        if (deficit == 0) {
            TransformedPoly out;
            out.quality = L;
            out.coeffs.reserve(p.size());
            for (const auto& m : p.mid) out.coeffs.push_back(detail::to_quality(m, W, L.bits));
            if (ctx.observer()) ctx.observer()->on_transform(I, L, out.coeffs);
            return out;
        }
        W += deficit + 16;
    }
}

TransformedPoly transform_approx(const Oracle& p, const Interval& I, Precision L) {
    Context ctx(p);
    return transform_approx(ctx, I, L);
}

namespace {

std::int64_t clamp_one(std::int64_t x) { return std::max<std::int64_t>(1, x); }

} // namespace

bool zero_test(Context& ctx, const Interval& I) {
    const std::int64_t n = ctx.degree();
    const Magnitude ma = magnitude(ctx, I.a);
    const Magnitude mb = magnitude(ctx, I.b);
    const Precision L{clamp_one(-std::min(ma.t - 1, mb.t - 1)) + 2 * (n + 1) + 1};
    const Dyadic m = I.midpoint();
    bool ok = true;
    for (const Interval& half : {Interval(I.a, m), Interval(m, I.b)}) {
        const TransformedPoly T = transform_approx(ctx, half, L);
        if (T.variations() != 0 || !T.all_above_quality()) {
            ok = false;
            break;
        }
    }
    if (ctx.observer()) ctx.observer()->on_zero_test(I, ok);
    return ok;
}

bool zero_test(const Oracle& p, const Interval& I) {
    Context ctx(p);
    return zero_test(ctx, I);
}

OneTestOutcome one_test(Context& ctx, const Interval& I) {
    const int n = ctx.degree();
    const Magnitude ma = magnitude(ctx, I.a);
    const Magnitude mb = magnitude(ctx, I.b);
    const Dyadic eps = I.width().mul_pow2(-(detail::clog2(n) + 2));
    const Multipoint mp = make_multipoint(I.midpoint(), eps, n);
    OneTestOutcome out{std::nullopt, admissible_point(ctx, mp.points)};
    const Dyadic& ms = out.split.x;
    const Precision L{clamp_one(-std::min({ma.t - 1, mb.t - 1, out.split.t - 1})) + 4 * std::int64_t{n} + 2};

    const Interval left(I.a, ms), right(ms, I.b);
    const TransformedPoly Tl = transform_approx(ctx, left, L);
    if (Tl.all_above_quality()) {
        const TransformedPoly Tr = transform_approx(ctx, right, L);
        if (Tr.all_above_quality()) {
            const int vl = Tl.variations(), vr = Tr.variations();
            if (vl == 1 && vr == 0) out.isolating = left;
            else if (vl == 0 && vr == 1) out.isolating = right;
        }
    }
    if (ctx.observer()) ctx.observer()->on_one_test(I, out.isolating);
    return out;
}

std::optional<Interval> one_test(const Oracle& p, const Interval& I) {
    Context ctx(p);
    return one_test(ctx, I).isolating;
}

} // namespace anewdsc
