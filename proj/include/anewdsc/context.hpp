#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "anewdsc/detail/ball_poly.hpp"
#include "anewdsc/dyadic.hpp"
#include "anewdsc/interval.hpp"
#include "anewdsc/oracle.hpp"

namespace anewdsc {

struct Config {
    /// Upper bound on any working precision, in bits.
    std::int64_t precision_cap = std::int64_t{1} << 20;
    /// Upper bound on processed intervals per isolate/refine call.
    std::uint64_t iteration_cap = 1'000'000;
    /// Only linear steps: no Boundary-Test or Newton-Test.
    bool bisection_only = false;
    /// Start from (-2^Gamma, 2^Gamma) instead of the split initialization.
    bool single_initial_interval = false;
    /// Intervals narrower than 2^-exponent_bound are treated as degenerate.
    std::int64_t exponent_bound = std::int64_t{1} << 20;
};

struct RunStats {
    std::uint64_t tree_size = 0;
    std::uint64_t quadratic_steps = 0;
    std::uint64_t linear_steps = 0;
    std::uint64_t boundary_successes = 0;
    std::uint64_t newton_successes = 0;
    std::uint64_t zero_test_successes = 0;
    std::uint64_t one_test_successes = 0;
    int max_level = 1;
    std::int64_t max_precision_bits = 0;
};

enum class StepKind { boundary, newton, linear };

/// Data the Newton-Test derived for one admitted pair (j1, j2).
struct NewtonCandidate {
    int j1 = 0, j2 = 0;
    Dyadic xi1, xi2;        // admissible points xi*_j
    Dyadic A1, A2, D1, D2;  // quality-L approximations of P and P' at xi*_j
    std::int64_t L = 0;
};

/// Instrumentation hooks; every default is a no-op. Used by tests and the
/// acceptance suite to cross-check decisions against exact arithmetic.
class Observer {
public:
    virtual ~Observer() = default;
    virtual void on_zero_test(const Interval&, bool) {}
    virtual void on_one_test(const Interval&, const std::optional<Interval>&) {}
    virtual void on_transform(const Interval&, Precision, const std::vector<Dyadic>&) {}
    virtual void on_newton_candidate(const Interval&, const NewtonCandidate&) {}
    virtual void on_step(const Interval& /*parent*/, int /*parent_level*/, const Interval& /*child*/,
                         int /*child_level*/, StepKind) {}
};

/// Result of a magnitude estimate: 2^(t-1) <= |P(x)| <= 2^(t+1), and the
/// sign of P(x).
struct Magnitude {
    std::int64_t t = 0;
    int sign = 0;
};

/// Per-run solver state: the polynomial, configuration, statistics and
/// memoized point magnitudes. Single owner; not shared between threads.
class Context {
public:
    explicit Context(Oracle p, Config cfg = {}, Observer* obs = nullptr)
        : poly_(std::move(p)), config_(cfg), observer_(obs) {}

    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    const CoefficientOracle& poly() const { return *poly_; }
    const Oracle& oracle() const { return poly_; }
    int degree() const { return poly_->degree(); }
    const Config& config() const { return config_; }
    RunStats& stats() { return stats_; }
    const RunStats& stats() const { return stats_; }
    Observer* observer() const { return observer_; }

    void note_precision(std::int64_t bits) {
        if (bits > stats_.max_precision_bits) stats_.max_precision_bits = bits;
    }

    std::optional<Magnitude> cached_magnitude(const Dyadic& x) const {
        auto it = magnitudes_.find(x);
        if (it == magnitudes_.end()) return std::nullopt;
        return it->second;
    }
    void remember_magnitude(const Dyadic& x, Magnitude m) { magnitudes_.emplace(x, m); }

    /// Fixed-point coefficients of P (or P') at scale 2^-frac; the most
    /// recent load of each is kept.
    const detail::BallPoly& coefficients(std::int64_t frac, bool derivative = false);

private:
    Oracle poly_;
    Config config_;
    RunStats stats_;
    Observer* observer_;
    std::map<Dyadic, Magnitude> magnitudes_;
    detail::BallPoly coeffs_[2];
    bool loaded_[2] = {false, false};
};

} // namespace anewdsc
