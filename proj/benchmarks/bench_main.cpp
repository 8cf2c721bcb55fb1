#include <benchmark/benchmark.h>

#include <complex>

#include <modparam/formal_group.hpp>
#include <modparam/lseries.hpp>
#include <modparam/numeric_eval.hpp>
#include <modparam/weierstrass.hpp>

using namespace modparam;

namespace {

const Curve &curve()
{
    static const Curve c(Rational(-3, 2), Rational(5, 3));
    return c;
}

UniSeries sample_series(int order)
{
    UniSeries f(order);
    for (int k = 1; k <= order; ++k) {
        f[k] = Rational(k % 7 - 3, k % 5 + 1);
    }
    f[1] = Rational(1);
    return f;
}

void BM_SeriesMultiply(benchmark::State &state)
{
    const UniSeries f = sample_series(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * f);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(20)->Arg(40)->Arg(80);

void BM_SeriesReverse(benchmark::State &state)
{
    const UniSeries f = sample_series(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reverse(f));
    }
}
BENCHMARK(BM_SeriesReverse)->Arg(20)->Arg(40);

void BM_WpCoefficients(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(wp_coefficients(curve(), static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_WpCoefficients)->Arg(20)->Arg(40);

void BM_FormalLogarithm(benchmark::State &state)
{
    const Curve c(Rational(4), Rational(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(formal_logarithm(formal_exponential(c, static_cast<int>(state.range(0)))));
    }
}
BENCHMARK(BM_FormalLogarithm)->Arg(50)->Arg(97);

void BM_GroupLawExpLog(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const FormalExp fe = formal_exponential(curve(), n);
    const FormalLog fl = formal_logarithm(fe);
    for (auto _ : state) {
        benchmark::DoNotOptimize(group_law_exp_log(fe, fl, n));
    }
}
BENCHMARK(BM_GroupLawExpLog)->Arg(8)->Arg(12);

void BM_GroupLawClosedForm(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(group_law_bb(curve(), static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_GroupLawClosedForm)->Arg(8)->Arg(12);

void BM_VerifyAxioms(benchmark::State &state)
{
    const GroupLaw law = group_law_bb(curve(), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_axioms(law));
    }
}
BENCHMARK(BM_VerifyAxioms)->Arg(8)->Arg(12);

void BM_CountPoints(benchmark::State &state)
{
    const ReducedCurve rc{state.range(0), 3, 7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_points(rc));
    }
}
BENCHMARK(BM_CountPoints)->Arg(97)->Arg(10007)->Arg(999983);

void BM_HondaCheck(benchmark::State &state)
{
    const Curve c(Rational(4), Rational(0));
    const int pmax = static_cast<int>(state.range(0));
    const FormalLog fl = formal_logarithm(formal_exponential(c, pmax));
    for (auto _ : state) {
        benchmark::DoNotOptimize(honda_check(c, pmax, fl));
    }
}
BENCHMARK(BM_HondaCheck)->Arg(50)->Arg(97);

template <class Real>
void BM_ParamPoint(benchmark::State &state)
{
    const Curve c(Rational(4), Rational(0));
    const FormalLog fl = formal_logarithm(formal_exponential(c, 50));
    const Parametrization<Real> map(c, fl, 50, 20);
    const Complex<Real> z(from_decimal<Real>("0.3"), from_decimal<Real>("0.9"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(map.point(z));
    }
}
BENCHMARK(BM_ParamPoint<double>);
BENCHMARK(BM_ParamPoint<long double>);
BENCHMARK(BM_ParamPoint<quad>);

} // namespace

BENCHMARK_MAIN();
