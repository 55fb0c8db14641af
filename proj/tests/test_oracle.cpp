#include <doctest.h>

#include <random>

#include "anewdsc/error.hpp"
#include "anewdsc/oracle.hpp"
#include "support.hpp"

using namespace anewdsc;
using support::pow2q;
using support::Q;
using support::qabs;

namespace {

int nonzero_count(const ApproxPolynomial& a) {
    int k = 0;
    for (const auto& c : a.coeffs) k += !c.is_zero();
    return k;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::iteration_cap;
}

} // namespace

TEST_CASE("integer constructor") {
    const Oracle p = support::int_oracle({-2, 0, 1});
    CHECK(p->degree() == 2);
    REQUIRE(p->tau_hint());
    CHECK(*p->tau_hint() == 1);
    CHECK(p->exact());
    const auto a = p->approximate(Precision{5});
    CHECK(a.coeffs == std::vector<Dyadic>{-2, 0, 1});

    // x^16 - 2(16x - 1)^2, expanded independently
    std::vector<mpz_class> m(17, 0);
    m[16] = 1;
    m[2] = -2 * 16 * 16;
    m[1] = 2 * 2 * 16;
    m[0] = -2;
    const Oracle mig = from_integer_poly(m);
    CHECK(mig->degree() == 16);
    CHECK(nonzero_count(mig->approximate(Precision{3})) == 4);
    CHECK(mig->approximate(Precision{3}).coeffs[2] == Dyadic(-512));
}

TEST_CASE("shape errors") {
    CHECK(kind_of([] { support::int_oracle({1, 1}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { support::int_oracle({0, 0, 0}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { support::int_oracle({1, 2, 0}); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { from_rational_poly(support::ints({1, 0, 1}), support::ints({1, 0, 1})); }) ==
          ErrorKind::invalid_input);
    CHECK(kind_of([] { from_rational_poly(support::ints({1, 0, 0}), support::ints({1, 1, 1})); }) ==
          ErrorKind::invalid_input);
}

TEST_CASE("rational constructor") {
    const Oracle p = from_rational_poly(support::ints({1, 0, 1}), support::ints({1, 1, 3}));
    CHECK_FALSE(p->exact());
    for (std::int64_t L : {1, 4, 17, 100}) {
        const auto a = p->approximate(Precision{L});
        CHECK(qabs(Q(a.coeffs[2]) - mpq_class(1, 3)) <= pow2q(-L));
        CHECK(a.coeffs[2].exponent() >= -(L + 1));
        CHECK(Q(a.coeffs[0]) == 1);
    }

    const Oracle ints = from_rational_poly(support::ints({-2, 0, 1}), support::ints({1, 1, 1}));
    CHECK(ints->exact());
    CHECK(ints->approximate(Precision{9}).coeffs == support::int_oracle({-2, 0, 1})->approximate(Precision{9}).coeffs);
}

TEST_CASE("normalize_leading examples") {
    CHECK(normalize_leading(support::int_oracle({-2, 0, 1})).second == 0);
    CHECK(normalize_leading(support::int_oracle({-2, 0, 5})).second == 3);
    const auto [o, t] = normalize_leading(from_rational_poly(support::ints({1, 0, 1}), support::ints({1, 1, 3})));
    CHECK(t == -1);
    const auto c = o->approximate(Precision{30}).coeffs[2];
    CHECK(qabs(Q(c) - mpq_class(2, 3)) <= pow2q(-30));
}

TEST_CASE("scaling is an exponent shift") {
    const Oracle p = scale_oracle(support::int_oracle({3, -1, 5}), -3);
    CHECK(p->exact());
    CHECK(p->approximate(Precision{2}).coeffs == std::vector<Dyadic>{Dyadic(3, -3), Dyadic(-1, -3), Dyadic(5, -3)});
}

TEST_CASE("approximations are consistent across precisions") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        std::vector<mpz_class> num(n + 1), den(n + 1);
        for (int i = 0; i <= n; ++i) {
            num[i] = support::random_int(rng, 40);
            den[i] = support::random_int(rng, 20);
            if (den[i] == 0) den[i] = 7;
        }
        if (num[n] == 0) num[n] = 1;
        const Oracle p = from_rational_poly(num, den);
        const auto [normed, t] = normalize_leading(p);
        for (int k = 0; k < 5; ++k) {
            const std::int64_t L1 = 1 + static_cast<std::int64_t>(rng() % 80);
            const std::int64_t L2 = L1 + 1 + static_cast<std::int64_t>(rng() % 80);
            const auto a = p->approximate(Precision{L1}), b = p->approximate(Precision{L2});
            for (int i = 0; i <= n; ++i) {
                mpq_class truth(num[i], den[i]);
                truth.canonicalize();
                CHECK(qabs(Q(a.coeffs[i]) - truth) <= pow2q(-L1));
                CHECK(qabs(Q(a.coeffs[i]) - Q(b.coeffs[i])) <= pow2q(-L1) + pow2q(-L2));
            }
            const Dyadic lead = normed->approximate(Precision{L1}).coeffs[n];
            CHECK(qabs(Q(lead)) >= mpq_class(1, 4) - pow2q(-L1));
            CHECK(qabs(Q(lead)) <= 1 + pow2q(-L1));
        }
        mpq_class lead_exact(num[n], den[n]);
        lead_exact.canonicalize();
        const mpq_class scaled = qabs(lead_exact) * pow2q(-t);
        CHECK(scaled >= mpq_class(1, 4));
        CHECK(scaled <= 1);
    }
}
