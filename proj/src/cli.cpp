#include "anewdsc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include "anewdsc/error.hpp"

namespace anewdsc::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::invalid_input, what); }

mpz_class parse_integer(const json& j, const std::string& where) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) bad(where + ": not an integer: " + j.dump());
        return z;
    }
    bad(where + ": expected an integer, got " + j.dump());
}

mpq_class parse_coefficient(const json& j, const std::string& where) {
    if (j.is_number_float()) bad(where + ": floating-point coefficients are not accepted (use [num, den])");
    if (j.is_number_integer() || j.is_number_unsigned()) return mpq_class(parse_integer(j, where));
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0) bad(where + ": not a rational: " + j.dump());
        if (q.get_den() == 0) bad(where + ": zero denominator");
        q.canonicalize();
        return q;
    }
    if (j.is_array()) {
        if (j.size() != 2) bad(where + ": rational pairs need exactly [num, den]");
        const mpz_class num = parse_integer(j[0], where), den = parse_integer(j[1], where);
        if (den == 0) bad(where + ": zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    if (j.is_object()) {
        if (!j.contains("m") || !j.contains("e")) bad(where + ": dyadic coefficients need \"m\" and \"e\"");
        if (!j["e"].is_number_integer()) bad(where + ": dyadic exponent must be an integer");
        return reference::to_rational(Dyadic(parse_integer(j["m"], where), j["e"].get<std::int64_t>()));
    }
    bad(where + ": unsupported coefficient " + j.dump());
}

} // namespace

Polynomial parse_polynomial(const json& j, bool square_free) {
    if (!j.is_object()) bad("polynomial must be a JSON object");
    std::vector<mpq_class> coeffs;
    if (j.contains("coeffs")) {
        const json& c = j["coeffs"];
        if (!c.is_array()) bad("\"coeffs\" must be an array");
        for (std::size_t i = 0; i < c.size(); ++i) coeffs.push_back(parse_coefficient(c[i], "coeffs[" + std::to_string(i) + "]"));
        if (coeffs.empty()) bad("\"coeffs\" is empty");
    } else if (j.contains("terms")) {
        if (!j.contains("degree") || !j["degree"].is_number_integer()) bad("sparse form needs an integer \"degree\"");
        const long long deg = j["degree"].get<long long>();
        if (deg < 0 || deg > 1'000'000) bad("degree out of range");
        coeffs.assign(static_cast<std::size_t>(deg) + 1, 0);
        const json& t = j["terms"];
        if (!t.is_array()) bad("\"terms\" must be an array");
        for (std::size_t i = 0; i < t.size(); ++i) {
            const std::string where = "terms[" + std::to_string(i) + "]";
            if (!t[i].is_array() || t[i].size() != 2 || !t[i][0].is_number_integer()) bad(where + ": expected [exp, coeff]");
            const long long e = t[i][0].get<long long>();
            if (e < 0 || e > deg) bad(where + ": exponent outside 0.." + std::to_string(deg));
            coeffs[static_cast<std::size_t>(e)] += parse_coefficient(t[i][1], where);
        }
    } else {
        bad("polynomial needs \"coeffs\" or \"degree\" + \"terms\"");
    }
    bool all_zero = true;
    for (const auto& c : coeffs) all_zero = all_zero && sgn(c) == 0;
    if (all_zero) bad("zero polynomial");
    if (sgn(coeffs.back()) == 0) bad("leading coefficient is zero");
    if (coeffs.size() < 3) bad("degree must be at least 2");

    Polynomial p;
    p.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
    p.exact = reference::ExactPoly(std::move(coeffs));
    if (square_free) {
        p.exact = reference::square_free_part(p.exact);
        if (p.exact.degree() < 2) bad("square-free part has degree < 2");
    }
    p.oracle = normalize_leading(reference::to_oracle(p.exact)).first;
    return p;
}

std::vector<Polynomial> parse_input(const json& j, bool square_free) {
    std::vector<Polynomial> out;
    if (j.is_object() && j.contains("polynomials")) {
        const json& list = j["polynomials"];
        if (!list.is_array()) bad("\"polynomials\" must be an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            try {
                out.push_back(parse_polynomial(list[i], square_free));
            } catch (const Error& e) {
                bad("polynomials[" + std::to_string(i) + "]: " + e.what());
            }
            if (out.back().name.empty()) out.back().name = "#" + std::to_string(i);
        }
    } else {
        out.push_back(parse_polynomial(j, square_free));
    }
    return out;
}

std::vector<Polynomial> parse_input_file(const std::string& path, bool square_free) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        bad(path + ": malformed JSON: " + e.what());
    }
    return parse_input(j, square_free);
}

json render_polynomial(const reference::ExactPoly& p) {
    json c = json::array();
    for (const auto& q : p.coeffs) {
        if (q.get_den() == 1)
            c.push_back(q.get_num().get_str());
        else
            c.push_back(json::array({q.get_num().get_str(), q.get_den().get_str()}));
    }
    return json{{"coeffs", c}};
}

json render_dyadic(const Dyadic& x) { return json{{"m", x.mantissa().get_str()}, {"e", x.exponent()}}; }

json render_interval(const Interval& I) {
    return json{{"lo", render_dyadic(I.a)},
                {"hi", render_dyadic(I.b)},
                {"decimal_hint", to_decimal_with_radius(DyadicInterval(I.a, I.b), 20)}};
}

json render_stats(const RunStats& s, double wall_seconds) {
    return json{{"tree_size", s.tree_size},
                {"quadratic_steps", s.quadratic_steps},
                {"linear_steps", s.linear_steps},
                {"boundary_successes", s.boundary_successes},
                {"newton_successes", s.newton_successes},
                {"zero_test_successes", s.zero_test_successes},
                {"one_test_successes", s.one_test_successes},
                {"max_level", s.max_level},
                {"max_precision_bits", s.max_precision_bits},
                {"wall_time", wall_seconds}};
}

namespace {

reference::ExactPoly from_z(std::vector<mpz_class> c) { return reference::ExactPoly::from_integers(c); }

mpz_class random_int(std::mt19937_64& rng, int bits) {
    // uniform in (-2^bits, 2^bits)
    mpz_class v = 0;
    for (int done = 0; done < bits; done += 64) {
        const int take = std::min(64, bits - done);
        std::uint64_t w = rng();
        if (take < 64) w &= (std::uint64_t{1} << take) - 1;
        v <<= take;
        v += mpz_class(std::to_string(w));
    }
    return (rng() & 1) ? mpz_class(-v) : v;
}

mpz_class random_nonzero(std::mt19937_64& rng, int bits) {
    for (;;) {
        mpz_class v = random_int(rng, bits);
        if (v != 0) return v;
    }
}

} // namespace

reference::ExactPoly generate(const std::string& family, const GeneratorParams& g) {
    if (family == "mignotte") {
        if (g.n < 3 || g.a < 2) bad("mignotte needs n >= 3 and a >= 2");
        std::vector<mpz_class> c(static_cast<std::size_t>(g.n) + 1);
        const mpz_class a = g.a;
        c[g.n] = 1;
        c[2] = -2 * a * a;
        c[1] = 4 * a;
        c[0] = -2;
        return from_z(c);
    }
    if (family == "wilkinson") {
        if (g.k < 2) bad("wilkinson needs k >= 2");
        std::vector<mpz_class> c{1};
        for (int i = 1; i <= g.k; ++i) {
            std::vector<mpz_class> next(c.size() + 1);
            for (std::size_t j = 0; j < c.size(); ++j) {
                next[j + 1] += c[j];
                next[j] -= c[j] * i;
            }
            c = std::move(next);
        }
        return from_z(c);
    }
    if (family == "random-dense") {
        if (g.n < 2 || g.tau < 1) bad("random-dense needs n >= 2 and tau >= 1");
        std::mt19937_64 rng(g.seed);
        std::vector<mpz_class> c(static_cast<std::size_t>(g.n) + 1);
        for (int i = 0; i < g.n; ++i) c[i] = random_int(rng, g.tau);
        c[g.n] = random_nonzero(rng, g.tau);
        return from_z(c);
    }
    if (family == "random-sparse") {
        if (g.n < 2 || g.tau < 1 || g.terms < 2) bad("random-sparse needs n >= 2, tau >= 1, terms >= 2");
        std::mt19937_64 rng(g.seed);
        std::vector<mpz_class> c(static_cast<std::size_t>(g.n) + 1);
        c[g.n] = random_nonzero(rng, g.tau);
        c[0] = random_nonzero(rng, g.tau);
        std::uniform_int_distribution<int> pos(1, g.n - 1);
        const int extra = std::min(g.terms - 2, g.n - 1);
        for (int placed = 0; placed < extra;) {
            const int e = pos(rng);
            if (c[e] != 0) continue;
            c[e] = random_nonzero(rng, g.tau);
            ++placed;
        }
        return from_z(c);
    }
    if (family == "chebyshev-like") {
        if (g.n < 2) bad("chebyshev-like needs n >= 2");
        std::vector<mpz_class> t0{1}, t1{0, 1};
        for (int k = 2; k <= g.n; ++k) {
            std::vector<mpz_class> t2(t1.size() + 1);
            for (std::size_t j = 0; j < t1.size(); ++j) t2[j + 1] += 2 * t1[j];
            for (std::size_t j = 0; j < t0.size(); ++j) t2[j] -= t0[j];
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        return from_z(t1);
    }
    bad("unknown generator family: " + family);
}

Verdict verify_isolation(const reference::ExactPoly& p, const std::vector<Interval>& intervals) {
    Context ctx(normalize_leading(reference::to_oracle(p)).first);
    const RootBound B = root_bound(ctx);
    mpq_class R = 1;
    mpq_mul_2exp(R.get_mpq_t(), R.get_mpq_t(), static_cast<mp_bitcnt_t>(B.Gamma()));
    const int expected = reference::sturm_count(p, -R, R);
    if (static_cast<int>(intervals.size()) != expected)
        return {false, "expected " + std::to_string(expected) + " roots, got " + std::to_string(intervals.size())};
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const Interval& I = intervals[i];
        const int sa = sgn(reference::evaluate(p, reference::to_rational(I.a)));
        const int sb = sgn(reference::evaluate(p, reference::to_rational(I.b)));
        if (sa * sb >= 0) return {false, "no sign change across " + I.to_string()};
        if (i + 1 < intervals.size() && intervals[i + 1].a < I.b)
            return {false, "overlap between " + I.to_string() + " and " + intervals[i + 1].to_string()};
    }
    return {true, std::to_string(expected) + " roots"};
}

Config config_from_env(Config base) {
    auto read = [](const char* name) -> std::optional<long long> {
        const char* v = std::getenv(name);
        if (!v || !*v) return std::nullopt;
        char* end = nullptr;
        const long long x = std::strtoll(v, &end, 10);
        if (*end != '\0' || x <= 0) bad(std::string(name) + " must be a positive integer");
        return x;
    };
    if (auto v = read("ANEWDSC_PRECISION_CAP")) base.precision_cap = *v;
    if (auto v = read("ANEWDSC_ITERATION_CAP")) base.iteration_cap = static_cast<std::uint64_t>(*v);
    return base;
}

} // namespace anewdsc::cli
