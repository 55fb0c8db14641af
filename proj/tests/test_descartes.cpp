#include <doctest.h>

#include <algorithm>
#include <random>

#include "anewdsc/descartes.hpp"
#include "anewdsc/error.hpp"
#include "support.hpp"

using namespace anewdsc;
using reference::exact_transform;
using reference::exact_var;
using support::pow2q;
using support::Q;
using support::qabs;

namespace {

// Sorted random dyadics a < b on a coarse grid so that the two endpoints
// avoid exact roots of integer polynomials with overwhelming probability.
Interval random_interval(std::mt19937_64& rng, int lo_exp) {
    for (;;) {
        Dyadic a = support::random_dyadic(rng, 12, lo_exp, 0);
        Dyadic b = support::random_dyadic(rng, 12, lo_exp, 0);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        return Interval(a, b);
    }
}

// Interval of width 2^-k (k in [-1, 6]) with left endpoint in [-2, 2].
Interval small_interval(std::mt19937_64& rng) {
    const Dyadic a(static_cast<long>(rng() % 513) - 256, -7);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 8) - 1;
    return Interval(a, a + Dyadic::pow2(-k));
}

bool endpoints_nonzero(const reference::ExactPoly& P, const Interval& I) {
    return reference::evaluate(P, Q(I.a)) != 0 && reference::evaluate(P, Q(I.b)) != 0;
}

} // namespace

TEST_CASE("sign variations") {
    const std::vector<int> gaps{-1, 0, 0, 2, 0, -1};
    CHECK(sign_variations(std::span<const int>(gaps)) == 2);
    const std::vector<int> same{1, 1, 1};
    CHECK(sign_variations(std::span<const int>(same)) == 0);
    const std::vector<Dyadic> alt{1, -1, 1, -1};
    CHECK(sign_variations(std::span<const Dyadic>(alt)) == 3);
    CHECK(sign_variations(std::span<const Dyadic>()) == 0);
}

TEST_CASE("transform examples") {
    const Oracle p = support::int_oracle({-2, 0, 1});
    const auto t = transform_approx(p, Interval(1, 2), Precision{20});
    REQUIRE(t.coeffs.size() == 3);
    CHECK(qabs(Q(t.coeffs[0]) - 2) <= pow2q(-20));
    CHECK(qabs(Q(t.coeffs[1])) <= pow2q(-20));
    CHECK(qabs(Q(t.coeffs[2]) + 1) <= pow2q(-20));
    CHECK(t.variations() == 1);

    // x(x + 8) on (a, b): (ax + b)((a + 8)x + b + 8)
    const Oracle q = support::int_oracle({0, 8, 1});
    const Interval I(Dyadic(3, -2), Dyadic(5, -1));
    const auto u = transform_approx(q, I, Precision{30});
    const mpq_class a = Q(I.a), b = Q(I.b);
    CHECK(qabs(Q(u.coeffs[0]) - b * (b + 8)) <= pow2q(-30));
    CHECK(qabs(Q(u.coeffs[1]) - (a * (b + 8) + b * (a + 8))) <= pow2q(-30));
    CHECK(qabs(Q(u.coeffs[2]) - a * (a + 8)) <= pow2q(-30));
}

TEST_CASE("transform error against the exact transform") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(rng() % 20);
        const auto P = support::random_poly(rng, n, 1 + static_cast<int>(rng() % 40));
        const Interval I = random_interval(rng, -20);
        const std::int64_t L = 1 + static_cast<std::int64_t>(rng() % 150);
        const auto t = transform_approx(reference::to_oracle(P), I, Precision{L});
        const auto E = exact_transform(P, I);
        REQUIRE(t.coeffs.size() == E.coeffs.size());
        for (std::size_t k = 0; k < E.coeffs.size(); ++k) CHECK(qabs(Q(t.coeffs[k]) - E.coeffs[k]) <= pow2q(-L));
    }
}

TEST_CASE("zero_test examples") {
    const Oracle p = support::int_oracle({-2, 0, 1});
    CHECK(zero_test(p, Interval(0, 1)));
    CHECK_FALSE(zero_test(p, Interval(1, 2)));
    CHECK(zero_test(p, Interval(3, 4)));
}

TEST_CASE("one_test examples") {
    const auto P = support::exact({-2, 0, 1});
    const Oracle p = reference::to_oracle(P);
    const auto r = one_test(p, Interval(1, 2));
    REQUIRE(r);
    CHECK(Interval(1, 2).encloses(*r));
    CHECK(r->width() >= Dyadic(1, -2));
    CHECK(r->width() <= Dyadic(3, -2));
    CHECK(support::sign_change(P, r->a, r->b));
    CHECK_FALSE(one_test(p, Interval(-2, 2)));
    CHECK_FALSE(one_test(p, Interval(3, 4)));
}

TEST_CASE("subadditivity of sign variations") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        const auto P = support::random_poly(rng, 2 + static_cast<int>(rng() % 12), 16);
        const Interval I = random_interval(rng, -6);
        // two disjoint subintervals
        std::vector<Dyadic> pts{I.a, I.b};
        for (int k = 0; k < 2; ++k) pts.push_back(I.a + I.width() * Dyadic(static_cast<long>(1 + rng() % 63), -6));
        std::sort(pts.begin(), pts.end());
        if (pts[1] == pts[0] || pts[2] == pts[1] || pts[3] == pts[2]) continue;
        const Interval I1(pts[0], pts[1]), I2(pts[2], pts[3]);
        CHECK(exact_var(P, I1) + exact_var(P, I2) <= exact_var(P, I));
    }
}

TEST_CASE("transform coefficients are scaled reversed Bernstein coefficients") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const auto P = support::random_poly(rng, n, 10);
        mpq_class t(static_cast<long>(1 + rng() % 15), 16);
        t.canonicalize();
        const auto bern = reference::de_casteljau_split(reference::bernstein_unit(P), t).first;
        const auto E = exact_transform(P, mpq_class(0), t);
        for (int k = 0; k <= n; ++k) {
            const mpq_class expect = bern[n - k] * mpq_class(reference::binomial(n, k));
            const mpq_class got = k < static_cast<int>(E.coeffs.size()) ? E.coeffs[k] : mpq_class(0);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("0-Test and 1-Test agree with exact sign variations") {
    std::mt19937_64 rng(34);
    int var0 = 0, var1 = 0;
    for (int i = 0; i < 400; ++i) {
        const auto P = support::random_square_free(rng, 2 + static_cast<int>(rng() % 10), 12);
        const Oracle p = normalize_leading(reference::to_oracle(P)).first;
        const Interval I = small_interval(rng);
        if (!endpoints_nonzero(P, I)) continue;
        const int v = exact_var(P, I);
        const int roots = reference::sturm_count(P, Q(I.a), Q(I.b));

        const bool z = zero_test(p, I);
        if (roots > 0) CHECK_FALSE(z);
        if (v == 0) {
            CHECK(z);
            ++var0;
        }
        if (!z) CHECK(v > 0);

        const auto o = one_test(p, I);
        if (v == 1) {
            CHECK(o);
            ++var1;
        }
        // success certifies one root in I even when var(P, I) > 1
        if (o) {
            CHECK(I.encloses(*o));
            CHECK(exact_var(P, *o) == 1);
            CHECK(reference::sturm_count(P, Q(o->a), Q(o->b)) == 1);
            CHECK(roots == 1);
            CHECK(o->width() * Dyadic(4) >= I.width());
            CHECK(o->width() * Dyadic(4) <= I.width() * Dyadic(3));
        }
    }
    CHECK(var0 > 10);
    CHECK(var1 > 10);
}

TEST_CASE("degenerate intervals are rejected") {
    Config cfg;
    cfg.exponent_bound = 40;
    Context ctx(support::int_oracle({-2, 0, 1}), cfg);
    try {
        transform_approx(ctx, Interval(Dyadic(1), Dyadic(1) + Dyadic(1, -50)), Precision{4});
        FAIL("expected degenerate_interval");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::degenerate_interval);
    }
    CHECK_NOTHROW(check_degenerate(ctx, Interval(Dyadic(1), Dyadic(1) + Dyadic(1, -30))));
}
