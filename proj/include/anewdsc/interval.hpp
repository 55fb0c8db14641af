#pragma once

#include <string>

#include "anewdsc/dyadic.hpp"

namespace anewdsc {

/// Open interval (a, b) with dyadic endpoints, a < b.
struct Interval {
    Dyadic a;
    Dyadic b;

    Interval() : a(0), b(1) {}
    Interval(Dyadic lo, Dyadic hi);

    Dyadic midpoint() const { return (a + b).mul_pow2(-1); }
    Dyadic width() const { return b - a; }
    bool contains(const Dyadic& x) const { return a < x && x < b; }
    /// Closure containment: [o.a, o.b] within [a, b].
    bool encloses(const Interval& o) const { return a <= o.a && o.b <= b; }

    std::string to_string() const { return "(" + a.to_string() + ", " + b.to_string() + ")"; }
    bool operator==(const Interval&) const = default;
};

} // namespace anewdsc
