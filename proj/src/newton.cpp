#include "anewdsc/newton.hpp"

#include <array>
#include <utility>

#include "anewdsc/descartes.hpp"
#include "anewdsc/detail/ball_poly.hpp"
#include "anewdsc/error.hpp"
#include "anewdsc/eval.hpp"
#include "anewdsc/refine.hpp"

namespace anewdsc {

namespace {

// floor(x / y) for y != 0
mpz_class floor_div(const Dyadic& x, const Dyadic& y) {
    mpz_class num = x.mantissa(), den = y.mantissa();
    const std::int64_t d = x.exponent() - y.exponent();
    if (d >= 0)
        num <<= static_cast<mp_bitcnt_t>(d);
    else
        den <<= static_cast<mp_bitcnt_t>(-d);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Dyadic pick_point(Context& ctx, const Dyadic& center, const Dyadic& spacing, TestMode mode) {
    if (mode == TestMode::refine) {
        const auto [x1, x2] = two_point_grid(center, spacing, ctx.degree());
        const std::array<Dyadic, 2> xs{x1, x2};
        return admissible_point(ctx, xs).x;
    }
    return admissible_point(ctx, make_multipoint(center, spacing, ctx.degree()).points).x;
}

// True iff the open interval (x, y) is certified root-free; empty is trivially free.
bool flank_free(Context& ctx, const Dyadic& x, const Dyadic& y, TestMode mode) {
    if (x == y) return true;
    if (mode == TestMode::refine) return sign_test(ctx, x, y) > 0;
    return zero_test(ctx, Interval(x, y));
}

struct Values {
    Dyadic A1, A2, D1, D2;
};

Values evaluate_pair(Context& ctx, const Dyadic& x1, const Dyadic& x2, std::int64_t L) {
    if (L > ctx.config().precision_cap)
        throw Error(ErrorKind::precision_cap, "Newton-Test exceeded the precision cap at " + x1.to_string() + ", " +
                                                  x2.to_string());
    const std::array<Dyadic, 2> xs{x1, x2};
    auto p = eval_approx_many(ctx, xs, Precision{L}, false);
    auto d = eval_approx_many(ctx, xs, Precision{L}, true);
    return {p[0], p[1], d[0], d[1]};
}

// (|A| - 2^-L) > w (|A'| + 2^-L): |v| certainly exceeds w
bool exceeds_width(const Dyadic& A, const Dyadic& D, const Dyadic& w, std::int64_t L) {
    const Dyadic e = Dyadic::pow2(-L);
    return abs(A) - e > w * (abs(D) + e);
}

// delta < w / (32 n) and delta < w / (2^14 N), delta = (|A|+|A'|) / (2^(L-2) A'^2)
bool delta_small(const Dyadic& A, const Dyadic& D, const Dyadic& w, int n, std::int64_t log2N, std::int64_t L) {
    const Dyadic lhs = abs(A) + abs(D);
    const Dyadic rhs = (w * D * D).mul_pow2(L - 2);
    return lhs * Dyadic(32L * n) < rhs && lhs.mul_pow2(14 + log2N) < rhs;
}

} // namespace

std::optional<Interval> newton_test(Context& ctx, const ActiveInterval& act, TestMode mode) {
    const Interval& I = act.I;
    const int n = ctx.degree();
    const std::int64_t e = act.log2_N();
    const Dyadic w = I.width();
    const std::int64_t log_eps = 5 + detail::clog2(n);

    std::array<Dyadic, 3> xi;
    for (int j = 0; j < 3; ++j)
        xi[j] = pick_point(ctx, I.a + (w * Dyadic(j + 1)).mul_pow2(-2), w.mul_pow2(-log_eps), mode);

    static constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [j1, j2] : pairs) {
        const Dyadic& x1 = xi[j1];
        const Dyadic& x2 = xi[j2];

        // discard if some |v_j| > w, proceed once all values are well away from 0
        std::int64_t L1 = 2;
        bool discard = false;
        for (;; L1 *= 2) {
            const Values v = evaluate_pair(ctx, x1, x2, L1);
            if (exceeds_width(v.A1, v.D1, w, L1) || exceeds_width(v.A2, v.D2, w, L1)) {
                discard = true;
                break;
            }
            const Dyadic t = Dyadic::pow2(1 - L1);
            if (abs(v.A1) > t && abs(v.A2) > t && abs(v.D1) > t && abs(v.D2) > t) break;
        }
        if (discard) continue;

        // refine until both Newton corrections are known to within delta
        std::int64_t L = 2 * L1;
        Values v;
        for (;; L *= 2) {
            v = evaluate_pair(ctx, x1, x2, L);
            if (delta_small(v.A1, v.D1, w, n, e, L) && delta_small(v.A2, v.D2, w, n, e, L)) break;
        }
        if (ctx.observer())
            ctx.observer()->on_newton_candidate(I, NewtonCandidate{j1 + 1, j2 + 1, x1, x2, v.A1, v.A2, v.D1, v.D2, L});

        // |v1~ - v2~| + delta1 + delta2 >= w/n, all over the common denominator 2^(L-2) D1^2 D2^2
        const Dyadic D1sq = v.D1 * v.D1, D2sq = v.D2 * v.D2;
        const Dyadic Q = v.A1 * v.D2 - v.A2 * v.D1;
        const Dyadic sum = (abs(Q) * abs(v.D1 * v.D2)).mul_pow2(L - 2) + (abs(v.A1) + abs(v.D1)) * D2sq +
                           (abs(v.A2) + abs(v.D2)) * D1sq;
        if (sum * Dyadic(n) < (w * D1sq * D2sq).mul_pow2(L - 2)) continue;
        if (Q.is_zero()) continue;

        // lambda~ - a = ((x1 - a) Q + (x2 - x1) A1 D2) / Q
        const Dyadic num = (x1 - I.a) * Q + (x2 - x1) * v.A1 * v.D2;
        const Dyadic den = Q;
        // lambda~ in [a, b]  <=>  0 <= num/den <= w
        const bool inside = den.sign() > 0 ? (num.sign() >= 0 && num <= w * den) : (num.sign() <= 0 && num >= w * den);
        if (!inside) continue;
        const mpz_class ell = floor_div(num.mul_pow2(e + 2), w * den);
        mpz_class fourN = 1;
        fourN <<= static_cast<mp_bitcnt_t>(e + 2);
        const Dyadic u = w.mul_pow2(-(e + 2));
        const mpz_class lo_k = ell - 1 > 0 ? mpz_class(ell - 1) : mpz_class(0);
        const mpz_class hi_k = ell + 2 < fourN ? mpz_class(ell + 2) : fourN;
        const Dyadic ac = I.a + Dyadic(lo_k) * u;
        const Dyadic bc = I.a + Dyadic(hi_k) * u;
        const Dyadic spacing = w.mul_pow2(-(log_eps + e));
        const Dyadic as = ac == I.a ? I.a : pick_point(ctx, ac, spacing, mode);
        const Dyadic bs = bc == I.b ? I.b : pick_point(ctx, bc, spacing, mode);
        if (!(as < bs)) continue;

        // accept the candidate window
        if (flank_free(ctx, I.a, as, mode) && flank_free(ctx, bs, I.b, mode)) return Interval(as, bs);
    }
    return std::nullopt;
}

std::optional<Interval> boundary_test(Context& ctx, const ActiveInterval& act, TestMode mode) {
    const Interval& I = act.I;
    const int n = ctx.degree();
    const std::int64_t e = act.log2_N();
    const Dyadic w = I.width();
    const Dyadic half_step = w.mul_pow2(-(e + 1));
    const Dyadic spacing = w.mul_pow2(-(2 + detail::clog2(n) + e));

    const Dyadic ml = pick_point(ctx, I.a + half_step, spacing, mode);
    const Dyadic mr = pick_point(ctx, I.b - half_step, spacing, mode);
    if (flank_free(ctx, ml, I.b, mode)) return Interval(I.a, ml);
    if (flank_free(ctx, I.a, mr, mode)) return Interval(mr, I.b);
    return std::nullopt;
}

} // namespace anewdsc
