// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <modparam/formal_group.hpp>
#include <modparam/lseries.hpp>
#include <modparam/numeric_eval.hpp>
#include <modparam/weierstrass.hpp>

#include "test_support.hpp"

using namespace modparam;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool condition, const std::string &what)
    {
        if (!condition) {
            ok = false;
            notes.push_back("violated: " + what);
        }
    }
    void note(const std::string &text) { notes.push_back(text); }
};

int failures = 0;

void criterion(int id, const std::string &title, double limit_seconds, const std::function<void(Outcome &)> &body)
{
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception &e) {
        out.ok = false;
        out.notes.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0.0 && seconds >= limit_seconds) {
        out.ok = false;
        out.notes.push_back("runtime limit " + std::to_string(limit_seconds) + " s exceeded");
    }
    if (!out.ok) {
        ++failures;
    }
    std::printf("[%s] criterion %d: %s (%.3f s)\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), seconds);
    for (const auto &n : out.notes) {
        std::printf("       %s\n", n.c_str());
    }
    std::fflush(stdout);
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string curve_name(const Curve &c)
{
    return "(g2, g3) = (" + c.g2().str() + ", " + c.g3().str() + ")";
}

/// |g2|, |g3| <= 20 with small denominators, nonsingular.
std::vector<Curve> random_curves(unsigned seed, int count)
{
    std::mt19937 rng(seed);
    std::vector<Curve> out;
    while (static_cast<int>(out.size()) < count) {
        const Rational g2 = test::random_rational(rng, 20, 5);
        const Rational g3 = test::random_rational(rng, 20, 5);
        if (abs(g2) > Rational(20) || abs(g3) > Rational(20)) {
            continue;
        }
        if (!(g2 * g2 * g2 - Rational(27) * g3 * g3).is_zero()) {
            out.emplace_back(g2, g3);
        }
    }
    return out;
}

} // namespace

int main()
{
    const std::vector<Curve> curves20 = random_curves(2024, 20);

    criterion(1, "g2 = g3 = 0 gives f_E = f_L = T and F = t1 + t2 at order 30", 1.0, [](Outcome &o) {
        const int n = 30;
        const Curve c = Curve::additive();
        const FormalExp fe = formal_exponential(c, n);
        const FormalLog fl = formal_logarithm(fe);
        o.require(fe.series == UniSeries::identity(n), "f_E = T");
        o.require(fl.series == UniSeries::identity(n), "f_L = T");
        const BiSeries sum = BiSeries::variable(n, 0) + BiSeries::variable(n, 1);
        o.require(group_law_exp_log(fe, fl, n).F == sum, "exp-log law = t1 + t2");
        o.require(group_law_bb(c, n).F == sum, "closed-form law = t1 + t2");
    });

    criterion(2, "e^T - 1 gives the classical B_0..B_12", 1.0, [](Outcome &o) {
        const std::vector<Rational> expected{Rational(1),     Rational(-1, 2), Rational(1, 6),      Rational(0),
                                             Rational(-1, 30), Rational(0),    Rational(1, 42),     Rational(0),
                                             Rational(-1, 30), Rational(0),    Rational(5, 66),     Rational(0),
                                             Rational(-691, 2730)};
        const std::vector<Rational> b = universal_bernoulli(exp_minus_one(13), 12);
        o.require(b == expected, "B_k table");
    });

    criterion(3, "(wp')^2 = 4 wp^3 - g2 wp - g3 through z^40 on 20 random curves", 10.0, [&](Outcome &o) {
        const int order = 40;
        for (const Curve &c : curves20) {
            const WpExpansion wp = wp_coefficients(c, order);
            const LaurentSeries p = wp_laurent(wp);
            const LaurentSeries dp = wp_prime_laurent(wp);
            const LaurentSeries constant(0, UniSeries::monomial(2 * order, 0, c.g3()));
            const LaurentSeries diff = dp * dp - (Rational(4) * (p * p * p) - c.g2() * p - constant);
            bool ok = diff.precision() >= order;
            for (int k = diff.valuation(); ok && k <= order; ++k) {
                ok = diff.coefficient(k).is_zero();
            }
            o.require(ok, curve_name(c));
        }
    });

    criterion(4, "f_E(f_L(T)) = f_L(f_E(T)) = T at order 40 on the same curves", 0.0, [&](Outcome &o) {
        const int order = 40;
        for (const Curve &c : curves20) {
            const FormalExp fe = formal_exponential(c, order);
            const FormalLog fl = formal_logarithm(fe);
            const UniSeries id = UniSeries::identity(order);
            o.require(compose(fe.series, fl.series) == id && compose(fl.series, fe.series) == id, curve_name(c));
        }
    });

    criterion(5, "closed-form law = exp-log law to degree 10, axioms hold, 10 random curves", 60.0, [](Outcome &o) {
        const int degree = 10;
        for (const Curve &c : random_curves(5, 10)) {
            const FormalExp fe = formal_exponential(c, degree);
            const FormalLog fl = formal_logarithm(fe);
            const GroupLaw el = group_law_exp_log(fe, fl, degree);
            const GroupLaw bb = group_law_bb(c, degree);
            o.require(el.F == bb.F, "laws agree for " + curve_name(c));
            o.require(verify_axioms(bb).all(), "axioms (closed form) for " + curve_name(c));
            o.require(verify_axioms(el).all(), "axioms (exp-log) for " + curve_name(c));
        }
    });

    criterion(6, "wp(f_L(t)) = t / s(t) and wp'(f_L(t)) = -2 / s(t) through t^30", 0.0, [](Outcome &o) {
        const int order = 30;
        for (const Curve &c : random_curves(6, 5)) {
            const FormalLog fl = formal_logarithm(formal_exponential(c, order + 4));
            const UniSeries s = s_expansion(c, order + 6).s;
            const LaurentSeries inv_s = inverse(LaurentSeries(0, s));
            const LaurentSeries x = LaurentSeries(1, UniSeries::monomial(order + 6, 0)) * inv_s;
            const LaurentSeries y = Rational(-2) * inv_s;
            const LaurentSeries wp_pull = compose(wp_laurent(c, order / 2 + 2), fl.series);
            const LaurentSeries dwp_pull = compose(wp_prime_laurent(c, order / 2 + 3), fl.series);
            bool ok = std::min({wp_pull.precision(), x.precision(), dwp_pull.precision(), y.precision()}) >= order;
            for (int k = -3; ok && k <= order; ++k) {
                ok = wp_pull.coefficient(k) == x.coefficient(k) && dwp_pull.coefficient(k) == y.coefficient(k);
            }
            o.require(ok, curve_name(c));
        }
    });

    criterion(7, "a(p) = p + 1 - #E(F_p) mod p: g2 = 4, g3 = 0 to 97; 10 integer curves to 50", 30.0,
              [](Outcome &o) {
                  const Curve c(Rational(4), Rational(0));
                  const FormalLog fl = formal_logarithm(formal_exponential(c, 97));
                  const HondaReport rep = honda_check(c, 97, fl);
                  o.require(rep.all_congruent(), "all good primes congruent");
                  std::size_t good = 0;
                  for (const auto &e : rep.entries) {
                      if (e.p >= 5 && !e.skipped_reason) {
                          ++good;
                      }
                      if (e.p == 5) {
                          o.require(e.a_formal == Rational(-2) && e.trace == -2, "a(5) = -2, trace -2");
                      }
                      if (e.p == 7) {
                          o.require(e.a_formal == Rational(0) && e.trace == 0, "a(7) = 0, trace 0");
                      }
                  }
                  // Primes 5..97 are 23 in number; only p = 2 divides the discriminant 4096.
                  o.require(good == 23, "23 good primes checked");
                  std::mt19937 rng(7);
                  for (int i = 0; i < 10; ++i) {
                      const Curve r = test::random_integer_curve(rng);
                      const HondaReport rr = honda_check(r, 50, formal_logarithm(formal_exponential(r, 50)));
                      o.require(rr.all_congruent() && rr.checked_count() > 0, curve_name(r));
                  }
              });

    criterion(8, "B^_4 = -6 BH_4 and B^_6 = -15 BH_6 on 10 random curves", 0.0, [](Outcome &o) {
        for (const Curve &c : random_curves(8, 10)) {
            const std::vector<Rational> b = universal_bernoulli(formal_exponential(c, 7), 6);
            o.require(b[4] == Rational(-6) * bernoulli_hurwitz(c, 4), "B^_4 for " + curve_name(c));
            o.require(b[6] == Rational(-15) * bernoulli_hurwitz(c, 6), "B^_6 for " + curve_name(c));
        }
    });

    criterion(9, "double precision: |beta^2 - 4 alpha^3 + g2 alpha + g3| < 1e-9 at z = i, 0.3 + 0.9i; "
                 "derivative check < 1e-6 with O(h^2)",
              1.0, [](Outcome &o) {
                  const Curve c(Rational(4), Rational(0));
                  const FormalLog fl = formal_logarithm(formal_exponential(c, 50));
                  const Parametrization<double> map(c, fl, 50, 20);
                  const Parametrization<quad> map_quad(c, fl, 50, 20);
                  const std::vector<std::pair<std::string, std::string>> zs{{"0", "1"}, {"0.3", "0.9"}};
                  for (const auto &[re, im] : zs) {
                      const ParamResult<double> p = map.point({std::stod(re), std::stod(im)});
                      o.require(p.residual < 1e-9, "residual at z = " + re + " + " + im + "i is " + sci(p.residual)
                                                       + " (|alpha| = " + sci(std::abs(p.alpha)) + ")");
                      o.note("info: scaled residual at z = " + re + " + " + im + "i: " + sci(p.scaled_residual));
                      const ParamResult<quad> pq
                          = map_quad.point(Complex<quad>(from_decimal<quad>(re), from_decimal<quad>(im)));
                      o.note("info: 113-bit residual at z = " + re + " + " + im
                             + "i: " + sci(static_cast<double>(pq.residual)));
                  }
                  const std::complex<double> z(0.0, 1.0);
                  const DerivativeReport<double> d1 = map.derivative_check(z, 1e-4);
                  const DerivativeReport<double> d2 = map.derivative_check(z, 5e-5);
                  const double ratio = d1.relative_deviation / d2.relative_deviation;
                  o.require(d1.relative_deviation < 1e-6,
                            "derivative relative deviation " + sci(d1.relative_deviation));
                  o.require(ratio > 3.5 && ratio < 4.5, "O(h^2): deviation ratio for h -> h/2 is " + sci(ratio));
                  o.note("info: derivative relative deviation " + sci(d1.relative_deviation) + ", ratio "
                         + sci(ratio));
              });

    criterion(10, "eta partial sums: ln 2 within 1e-6 (10^6 terms), pi^2/12 within 1e-4 (10^4 terms)", 5.0,
              [](Outcome &o) {
                  const ClassicalReport one = classical_demo(8, 1'000'000, {1});
                  const ClassicalReport two = classical_demo(8, 10'000, {2});
                  o.require(one.coefficients_match, "log(1 + T) coefficients");
                  const double e1 = std::abs(one.samples.at(0).partial_sum - std::numbers::ln2);
                  const double e2
                      = std::abs(two.samples.at(0).partial_sum - std::numbers::pi * std::numbers::pi / 12.0);
                  o.require(e1 < 1e-6, "s = 1 error " + sci(e1));
                  o.require(e2 < 1e-4, "s = 2 error " + sci(e2));
              });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
