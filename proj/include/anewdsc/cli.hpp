#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "anewdsc/context.hpp"
#include "anewdsc/interval.hpp"
#include "anewdsc/isolate.hpp"
#include "anewdsc/oracle.hpp"
#include "anewdsc/reference.hpp"

namespace anewdsc::cli {

using nlohmann::json;

/// A parsed polynomial: the exact coefficients (kept for verification) and
/// the normalized oracle the solver works on.
struct Polynomial {
    std::string name;
    reference::ExactPoly exact;
    Oracle oracle;
};

/// Accepts the dense form {"coeffs": [...]} (lowest degree first) and the
/// sparse form {"degree": n, "terms": [[exp, coeff], ...]}. A coefficient is
/// an integer, a decimal integer string, a "p/q" string, a [num, den] pair or
/// a dyadic {"m": mantissa, "e": exponent}. Throws invalid_input with a
/// specific message for malformed input, degree < 2 or a zero leading term.
Polynomial parse_polynomial(const json& j, bool square_free = false);

/// A single polynomial, or a corpus {"polynomials": [...]}.
std::vector<Polynomial> parse_input(const json& j, bool square_free = false);
std::vector<Polynomial> parse_input_file(const std::string& path, bool square_free = false);

/// Dense form with exact coefficients; parse_polynomial inverts it.
json render_polynomial(const reference::ExactPoly& p);

json render_dyadic(const Dyadic& x);
json render_interval(const Interval& I);
json render_stats(const RunStats& s, double wall_seconds);

struct GeneratorParams {
    int n = 16;
    std::int64_t a = 16;
    int k = 4;
    int tau = 16;
    int terms = 4;
    std::uint64_t seed = 1;
};

/// Families: mignotte (x^n - 2(ax-1)^2), wilkinson (prod_{i=1..k} (x-i)),
/// random-dense, random-sparse, chebyshev-like (T_n, n real roots in (-1,1)).
reference::ExactPoly generate(const std::string& family, const GeneratorParams& params);

/// Exact check of an isolation result: count against the Sturm count over
/// (-2^Gamma, 2^Gamma), a sign change across every interval, disjointness.
struct Verdict {
    bool pass = false;
    std::string detail;
};

Verdict verify_isolation(const reference::ExactPoly& p, const std::vector<Interval>& intervals);

/// Config defaults overridden by ANEWDSC_PRECISION_CAP / ANEWDSC_ITERATION_CAP.
Config config_from_env(Config base = {});

} // namespace anewdsc::cli
