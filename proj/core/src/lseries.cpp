#include <modparam/lseries.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <modparam/error.hpp>

namespace modparam {

bool HondaReport::all_congruent() const
{
    return std::all_of(entries.begin(), entries.end(),
                       [](const HondaEntry &e) { return e.skipped_reason.has_value() || e.congruent; });
}

std::size_t HondaReport::checked_count() const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const HondaEntry &e) { return !e.skipped_reason; }));
}

std::vector<Rational> extract_an(const FormalLog &fl, int nmax)
{
    if (nmax > fl.order()) {
        throw OrderError("extract_an: nmax = " + std::to_string(nmax) + " exceeds the formal logarithm order "
                         + std::to_string(fl.order()));
    }
    std::vector<Rational> an(static_cast<std::size_t>(std::max(nmax, 0)) + 1);
    for (int n = 1; n <= nmax; ++n) {
        an[static_cast<std::size_t>(n)] = Rational(n) * fl.series[n];
    }
    return an;
}

bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n)
{
    std::vector<std::int64_t> out;
    if (n < 2) {
        return out;
    }
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) {
            continue;
        }
        out.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return out;
}

std::variant<ReducedCurve, SkipReason> reduce_curve(const Curve &curve, std::int64_t p)
{
    if (p < 5) {
        throw DomainError("reduce_curve: unsupported prime " + std::to_string(p)
                          + " (the model y^2 = 4x^3 - g2 x - g3 is only reduced at p >= 5)");
    }
    if (p > max_counting_prime || !is_prime(p)) {
        throw DomainError("reduce_curve: " + std::to_string(p) + " is not a prime in [5, "
                          + std::to_string(max_counting_prime) + "]");
    }
    const std::int64_t A = mod_prime(-curve.g2() / Rational(4), p);
    const std::int64_t B = mod_prime(-curve.g3() / Rational(4), p);
    if (A < 0 || B < 0) {
        return SkipReason{"denominator divisible by p"};
    }
    // 4A^3 + 27B^2 = -(g2^3 - 27 g3^2) / 16.
    const std::int64_t disc = (4 * (A * A % p) % p * A + 27 * (B * B % p)) % p;
    if (disc == 0) {
        return SkipReason{"bad reduction"};
    }
    return ReducedCurve{p, A, B};
}

std::int64_t count_points(const ReducedCurve &rc)
{
    const std::int64_t p = rc.p;
    std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (std::int64_t y = 1; y < p; ++y) {
        chi[static_cast<std::size_t>(y * y % p)] = 1;
    }
    std::int64_t count = 1; // point at infinity
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t rhs = ((x * x % p) * x % p + rc.A * x % p + rc.B) % p;
        count += 1 + chi[static_cast<std::size_t>(rhs)];
    }
    return count;
}

HondaReport honda_check(const Curve &curve, int pmax, const FormalLog &fl)
{
    if (fl.order() < pmax) {
        throw OrderError("honda_check: formal logarithm order " + std::to_string(fl.order()) + " below pmax "
                         + std::to_string(pmax));
    }
    HondaReport report{curve, pmax, {}};
    for (const std::int64_t p : primes_up_to(pmax)) {
        HondaEntry e;
        e.p = p;
        e.a_formal = fl.a(static_cast<int>(p));
        if (p < 5) {
            e.skipped_reason = "unsupported prime";
            report.entries.push_back(std::move(e));
            continue;
        }
        const auto reduced = reduce_curve(curve, p);
        if (const auto *skip = std::get_if<SkipReason>(&reduced)) {
            e.skipped_reason = skip->reason;
            report.entries.push_back(std::move(e));
            continue;
        }
        const auto &rc = std::get<ReducedCurve>(reduced);
        e.trace = p + 1 - count_points(rc);
        const std::int64_t a_mod = mod_prime(e.a_formal, p);
        if (a_mod < 0) {
            e.skipped_reason = "a(p) not p-integral";
            report.entries.push_back(std::move(e));
            continue;
        }
        const std::int64_t trace_mod = ((e.trace % p) + p) % p;
        e.congruent = a_mod == trace_mod;
        e.exact = e.a_formal == Rational(static_cast<long>(e.trace));
        report.entries.push_back(std::move(e));
    }
    return report;
}

UniSeries exp_minus_one(int order)
{
    UniSeries f(order);
    Rational fact(1);
    for (int k = 1; k <= order; ++k) {
        fact *= Rational(k);
        f[k] = Rational(1) / fact;
    }
    return f;
}

ClassicalReport classical_demo(int reversion_order, long nmax, const std::vector<int> &s_values)
{
    if (reversion_order < 2 || nmax < 1) {
        throw DomainError("classical_demo: need reversion_order >= 2 and nmax >= 1");
    }
    ClassicalReport report;
    report.reversion_order = reversion_order;
    report.nmax = nmax;

    const UniSeries f = exp_minus_one(reversion_order);
    const FormalLog fl = formal_logarithm_of(f);
    report.an = extract_an(fl, reversion_order);
    report.coefficients_match = true;
    for (int n = 1; n <= reversion_order; ++n) {
        if (report.an[static_cast<std::size_t>(n)] != Rational(n % 2 == 1 ? 1 : -1)) {
            report.coefficients_match = false;
        }
    }
    report.bernoulli = universal_bernoulli(f, reversion_order - 1);

    for (const int s : s_values) {
        if (s < 1) {
            throw DomainError("classical_demo: s must be a positive integer");
        }
        // Summed from the tail so the small terms are not swallowed.
        long double sum = 0.0L;
        for (long n = nmax; n >= 1; --n) {
            const long double term = 1.0L / std::pow(static_cast<long double>(n), s);
            sum += (n % 2 == 1) ? term : -term;
        }
        const double reference = s == 1 ? std::numbers::ln2
                                        : (1.0 - std::pow(2.0, 1 - s)) * std::riemann_zeta(static_cast<double>(s));
        const auto partial = static_cast<double>(sum);
        report.samples.push_back(EtaSample{s, partial, reference, std::abs(partial - reference)});
    }
    return report;
}

} // namespace modparam
