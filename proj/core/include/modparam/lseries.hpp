#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <modparam/formal_group.hpp>

namespace modparam {

/// Largest prime accepted by reduce_curve / count_points.
inline constexpr std::int64_t max_counting_prime = 1'000'000;

// (y/2)^2 = x^3 + A x + B over F_p, with A = -g2/4 and B = -g3/4 reduced mod p.
struct ReducedCurve {
    std::int64_t p;
    std::int64_t A;
    std::int64_t B;
};

struct SkipReason {
    std::string reason;
};

struct HondaEntry {
    std::int64_t p = 0;
    std::int64_t trace = 0;            // p + 1 - #E(F_p); meaningful when !skipped
    Rational a_formal;                 // a(p) from the formal logarithm
    bool congruent = false;
    bool exact = false;                // a(p) == trace as rationals
    std::optional<std::string> skipped_reason;
};

struct HondaReport {
    Curve curve;
    int pmax;
    std::vector<HondaEntry> entries; // sorted by p, one per prime <= pmax

    /// True when no checked entry is non-congruent.
    bool all_congruent() const;
    std::size_t checked_count() const;
};

struct EtaSample {
    int s;
    double partial_sum;
    double reference; // (1 - 2^(1-s)) zeta(s); ln 2 at s = 1
    double abs_error;
};

struct ClassicalReport {
    int reversion_order;
    bool coefficients_match; // a(n) == (-1)^(n-1) for 1 <= n <= reversion_order
    std::vector<Rational> an;
    std::vector<Rational> bernoulli; // B_0 .. B_(reversion_order - 1)
    long nmax;
    std::vector<EtaSample> samples;
};

/// a(n) = n [T^n] f_L for 1 <= n <= nmax (index 0 holds 0). OrderError if
/// nmax exceeds the order of f_L.
std::vector<Rational> extract_an(const FormalLog &fl, int nmax);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// DomainError for p < 5, non-prime p, or p above max_counting_prime.
std::variant<ReducedCurve, SkipReason> reduce_curve(const Curve &curve, std::int64_t p);

/// #E(F_p) including the point at infinity, by enumeration over x with a
/// table of squares.
std::int64_t count_points(const ReducedCurve &rc);

/// Checks a(p) == p + 1 - #E(F_p) (mod p) for every prime p <= pmax.
/// OrderError when f_L is shorter than pmax.
HondaReport honda_check(const Curve &curve, int pmax, const FormalLog &fl);

/// The e^T - 1 degeneration: revert the truncated exponential, confirm the
/// coefficients of log(1 + T), and compare partial sums of
/// sum (-1)^(n-1) / n^s against (1 - 2^(1-s)) zeta(s).
ClassicalReport classical_demo(int reversion_order, long nmax, const std::vector<int> &s_values);

/// e^T - 1 truncated at the given order.
UniSeries exp_minus_one(int order);

} // namespace modparam
