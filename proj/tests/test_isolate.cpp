#include <doctest.h>

#include <random>

#include "anewdsc/cli.hpp"
#include "anewdsc/error.hpp"
#include "anewdsc/isolate.hpp"
#include "support.hpp"

using namespace anewdsc;
using reference::ExactPoly;
using support::pow2q;
using support::Q;
using support::qabs;

namespace {

bool disjoint_sorted(const std::vector<Interval>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1].b <= v[i].a)) return false;
    return true;
}

// Exact check: right count, a sign change and one root per interval.
void check_isolation(const ExactPoly& P, const std::vector<Interval>& out) {
    CHECK(static_cast<int>(out.size()) == reference::real_root_count(P));
    CHECK(disjoint_sorted(out));
    for (const auto& I : out) {
        CHECK(support::sign_change(P, I.a, I.b));
        CHECK(reference::sturm_count(P, Q(I.a), Q(I.b)) == 1);
    }
}

mpq_class M(const mpq_class& x) { return qabs(x) > 1 ? qabs(x) : mpq_class(1); }

struct LevelObserver : Observer {
    int steps = 0, good = 0, shrink = 0;
    void on_step(const Interval& parent, int pl, const Interval& child, int cl, StepKind kind) override {
        ++steps;
        const bool ok = kind == StepKind::linear ? cl == std::max(1, pl - 1) : cl == pl + 1;
        good += ok && parent.encloses(child);
        if (kind == StepKind::linear)
            shrink += child.width() * Dyadic(4) <= parent.width() * Dyadic(3) &&
                      child.width() * Dyadic(4) >= parent.width();
        else
            ++shrink;
    }
};

} // namespace

TEST_CASE("root bound examples") {
    Context a(support::int_oracle({-2, 0, 1}));
    const RootBound b = root_bound(a);
    CHECK(b.gamma == 3);
    CHECK(b.Gamma() == 8);

    const auto w4 = support::normalized(cli::generate("wilkinson", cli::GeneratorParams{.k = 4}));
    Context c(w4.oracle);
    CHECK(pow2q(root_bound(c).Gamma()) >= 5);
}

TEST_CASE("root bound holds on random polynomials") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 40; ++i) {
        const auto norm = support::normalized(support::random_square_free(rng, 2 + static_cast<int>(rng() % 20), 40));
        Context ctx(norm.oracle);
        const RootBound B = root_bound(ctx);
        CHECK(B.gamma >= 1);
        // every real root lies strictly inside (-2^Gamma + 1, 2^Gamma - 1)
        const mpq_class r = pow2q(B.Gamma()) - 1;
        CHECK(reference::sturm_count(norm.exact, -r, r) == reference::real_root_count(norm.exact));
    }
}

TEST_CASE("initialization examples") {
    Context ctx(support::int_oracle({-2, 0, 1}));
    const auto six = initialize(ctx, RootBound{2});
    REQUIRE(six.size() == 6);
    const long base2[] = {-16, -4, -2, 0, 2, 4, 16};
    // n = 2: grid spacing 2^-2, half-width 1/4
    for (std::size_t k = 0; k < 7; ++k) {
        const Dyadic s = k < 6 ? six[k].a : six[5].b;
        CHECK(qabs(Q(s) - base2[k]) <= mpq_class(1, 4));
    }
    for (std::size_t k = 1; k < six.size(); ++k) CHECK(six[k - 1].b == six[k].a);

    const auto four = initialize(ctx, RootBound{1});
    REQUIRE(four.size() == 4);
    CHECK(qabs(Q(four.front().a) + 4) <= mpq_class(1, 4));
    CHECK(qabs(Q(four.back().b) - 4) <= mpq_class(1, 4));
}

TEST_CASE("initialization conditions on random polynomials") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 30; ++i) {
        const int n = 2 + static_cast<int>(rng() % 30);
        const auto norm = support::normalized(support::random_square_free(rng, n, 32));
        const int deg = norm.exact.degree();
        Context ctx(norm.oracle);
        const auto B = root_bound(ctx);
        const auto parts = initialize(ctx, B);
        CHECK(static_cast<std::int64_t>(parts.size()) == 2 * B.gamma + 2);
        // |P(s*)| > 2^(-8 n log n); rounding log n down only makes this stricter
        const std::int64_t floor_log_n = static_cast<std::int64_t>(mpz_sizeinbase(mpz_class(deg).get_mpz_t(), 2)) - 1;
        const mpq_class floor_bound = pow2q(-8 * deg * floor_log_n);
        for (const auto& I : parts) {
            CHECK(qabs(reference::evaluate(norm.exact, Q(I.a))) > floor_bound);
            CHECK(qabs(reference::evaluate(norm.exact, Q(I.b))) > floor_bound);
            // max log M <= 2 (1 + min log M), i.e. M_max <= 4 M_min^2
            const mpq_class lo = Q(I.a), hi = Q(I.b);
            const mpq_class far = std::max(M(lo), M(hi));
            const mpq_class near = (lo < 0 && hi > 0) ? mpq_class(1) : std::min(M(lo), M(hi));
            CHECK(far <= 4 * near * near);
        }
        int covered = 0;
        for (const auto& I : parts) covered += reference::sturm_count(norm.exact, Q(I.a), Q(I.b));
        CHECK(covered == reference::real_root_count(norm.exact));
    }
}

TEST_CASE("isolate examples") {
    const ExactPoly P = support::exact({-2, 0, 1});
    const auto r = isolate(reference::to_oracle(P));
    REQUIRE(r.intervals.size() == 2);
    check_isolation(P, r.intervals);
    CHECK(Q(r.intervals[0].b) < 0);
    CHECK(Q(r.intervals[1].a) > 0);

    CHECK(isolate(support::int_oracle({1, 0, 1})).intervals.empty());

    const ExactPoly mig = cli::generate("mignotte", cli::GeneratorParams{.n = 16, .a = 16});
    CHECK(mig == ExactPoly::from_integers({-2, 64, -512, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    check_isolation(mig, isolate(reference::to_oracle(mig)).intervals);
}

TEST_CASE("Mignotte cluster intervals lie inside the root window") {
    const ExactPoly mig = cli::generate("mignotte", cli::GeneratorParams{.n = 16, .a = 16});
    const mpq_class h = pow2q(-36);  // a^-(n+2)/2
    const mpq_class lo = mpq_class(1, 16) - h, hi = mpq_class(1, 16) + h;
    REQUIRE(reference::sturm_count(mig, lo, hi) == 2);

    const auto m = isolate(reference::to_oracle(mig));
    int holding = 0, inside = 0;
    for (const auto& I : m.intervals) {
        const mpq_class a = Q(I.a) > lo ? Q(I.a) : lo, b = Q(I.b) < hi ? Q(I.b) : hi;
        holding += a < b && reference::sturm_count(mig, a, b) == 1;
        inside += Q(I.a) >= lo && Q(I.b) <= hi;
    }
    CHECK(holding == 2);
    CHECK(inside == 2);
}

TEST_CASE("isolation is exact on random polynomials") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 40; ++i) {
        const int n = 2 + static_cast<int>(rng() % 30);
        const auto P = support::random_square_free(rng, n, 1 + static_cast<int>(rng() % 64));
        LevelObserver obs;
        const auto r = isolate(reference::to_oracle(P), Config{}, &obs);
        check_isolation(P, r.intervals);
        for (const auto& I : r.intervals) CHECK(reference::exact_var(P, I) == 1);
        CHECK(obs.good == obs.steps);
        CHECK(obs.shrink == obs.steps);
        CHECK(r.stats.tree_size >= r.stats.quadratic_steps + r.stats.linear_steps);
        CHECK(r.stats.quadratic_steps == r.stats.boundary_successes + r.stats.newton_successes);
    }
}

TEST_CASE("modes agree") {
    std::mt19937_64 rng(54);
    for (int i = 0; i < 10; ++i) {
        const auto P = support::random_square_free(rng, 3 + static_cast<int>(rng() % 15), 20);
        Config bis;
        bis.bisection_only = true;
        Config single;
        single.single_initial_interval = true;
        const auto a = isolate(reference::to_oracle(P), bis);
        const auto b = isolate(reference::to_oracle(P), single);
        check_isolation(P, a.intervals);
        check_isolation(P, b.intervals);
        CHECK(a.stats.quadratic_steps == 0);
    }
}

TEST_CASE("Wilkinson and Chebyshev-like families") {
    for (int k = 2; k <= 12; k += 2) {
        const ExactPoly P = cli::generate("wilkinson", cli::GeneratorParams{.k = k});
        check_isolation(P, isolate(reference::to_oracle(P)).intervals);
    }
    const ExactPoly T = cli::generate("chebyshev-like", cli::GeneratorParams{.n = 20});
    const auto r = isolate(reference::to_oracle(T));
    CHECK(r.intervals.size() == 20);
    check_isolation(T, r.intervals);
}

TEST_CASE("non-square-free input hits a cap") {
    // (x - 1)^2 (x + 3)
    const ExactPoly P = support::exact({3, -5, 1, 1});
    Config cfg;
    cfg.iteration_cap = 2000;
    cfg.exponent_bound = 200;
    try {
        isolate(reference::to_oracle(P), cfg);
        FAIL("expected a cap error");
    } catch (const Error& e) {
        CHECK(e.kind() != ErrorKind::invalid_input);
        CHECK(std::string(e.what()).find("(") != std::string::npos);
    }
}
