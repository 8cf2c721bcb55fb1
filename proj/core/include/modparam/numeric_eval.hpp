#pragma once

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <modparam/formal_group.hpp>
#include <modparam/weierstrass.hpp>

namespace modparam {

using quad = boost::multiprecision::cpp_bin_float_quad;

template <class Real>
struct NumericTraits {
    using complex = std::complex<Real>;
};

template <>
struct NumericTraits<quad> {
    using complex = boost::multiprecision::cpp_complex_quad;
};

template <class Real>
using Complex = typename NumericTraits<Real>::complex;

/// Binary digits carried by the backend (53, 64 or 113).
template <class Real>
constexpr int precision_bits()
{
    return std::numeric_limits<Real>::digits;
}

/// Nearest backend value to an exact rational.
template <class Real>
Real to_real(const Rational &r);
/// Parses a finite decimal ("0.3", "-1e-4") directly into the backend.
template <class Real>
Real from_decimal(const std::string &text);
/// Shortest round-trippable decimal for the backend.
template <class Real>
std::string to_decimal(const Real &x);

/// Last retained wp term must stay below this fraction of the partial sum.
inline constexpr double wp_reliability_tolerance = 1e-12;

template <class Real>
struct WpValue {
    Complex<Real> wp;
    Complex<Real> wp_prime;
};

// Truncated Laurent evaluation of wp and wp' from an exact expansion. The
// coefficients are rounded to the backend once, at construction.
template <class Real>
class WpEvaluator {
public:
    explicit WpEvaluator(const WpExpansion &wp);

    /// Throws PoleError at w = 0 and OutOfRadius when the last retained term
    /// exceeds wp_reliability_tolerance relative to the partial sum.
    WpValue<Real> operator()(const Complex<Real> &w) const;

    /// Radius where the last nonzero retained term reaches the tolerance
    /// relative to the leading 1/w^2 (infinite for the pure pole).
    Real reliability_radius() const;

private:
    std::vector<Real> c_; // c_[k], k = 0..N
    int last_nonzero_ = 0;
};

template <class Real>
struct QSeriesValue {
    Complex<Real> F;
    Real truncation_estimate;
};

// F(z) = sum_{n <= nmax} a(n)/n q^n and the cusp form f(z) = sum a(n) q^n,
// q = exp(2 pi i z).
template <class Real>
class QSeries {
public:
    /// OrderError if nmax exceeds the order of f_L.
    QSeries(const FormalLog &fl, int nmax);

    /// HalfPlaneError if Im z <= 0.
    Complex<Real> nome(const Complex<Real> &z) const;
    /// F at z; the estimate is the magnitude of the last nonzero retained
    /// term, a heuristic rather than a bound.
    QSeriesValue<Real> F(const Complex<Real> &z) const;
    Complex<Real> cusp_form(const Complex<Real> &z) const;

    int nmax() const { return static_cast<int>(a_.size()) - 1; }

private:
    std::vector<Real> a_;      // a(n)
    std::vector<Real> a_by_n_; // a(n)/n
};

template <class Real>
struct ParamResult {
    Complex<Real> z;
    Complex<Real> q;
    Complex<Real> F;
    Complex<Real> alpha;
    Complex<Real> beta;
    Real residual;          // |beta^2 - 4 alpha^3 + g2 alpha + g3|
    Real scaled_residual;   // residual / (|beta|^2 + 4|alpha|^3 + |g2 alpha| + |g3|)
    Real truncation_estimate;
};

template <class Real>
struct DerivativeReport {
    Complex<Real> finite_difference; // (alpha(z+h) - alpha(z-h)) / 2h
    Complex<Real> chain_rule;        // beta(z) * 2 pi i f(z)
    Real relative_deviation;
};

// Goldfeld's map z -> (wp(F(z)), wp'(F(z))) with all exact data converted
// up front; evaluation is then cheap and repeatable.
template <class Real>
class Parametrization {
public:
    Parametrization(const Curve &curve, const FormalLog &fl, int nmax, int N);

    QSeriesValue<Real> eval_F(const Complex<Real> &z) const { return q_.F(z); }
    WpValue<Real> eval_wp(const Complex<Real> &w) const { return wp_(w); }
    ParamResult<Real> point(const Complex<Real> &z) const;
    DerivativeReport<Real> derivative_check(const Complex<Real> &z, const Real &h) const;

    const QSeries<Real> &q_series() const { return q_; }
    const WpEvaluator<Real> &wp() const { return wp_; }

private:
    Real g2_;
    Real g3_;
    QSeries<Real> q_;
    WpEvaluator<Real> wp_;
};

/// One-shot wrappers over Parametrization.
template <class Real>
QSeriesValue<Real> eval_F(const FormalLog &fl, const Complex<Real> &z, int nmax)
{
    return QSeries<Real>(fl, nmax).F(z);
}

template <class Real>
WpValue<Real> eval_wp(const Curve &curve, const Complex<Real> &w, int N)
{
    return WpEvaluator<Real>(wp_coefficients(curve, N))(w);
}

template <class Real>
ParamResult<Real> param_point(const Curve &curve, const FormalLog &fl, const Complex<Real> &z, int nmax, int N)
{
    return Parametrization<Real>(curve, fl, nmax, N).point(z);
}

template <class Real>
DerivativeReport<Real> derivative_check(const Curve &curve, const FormalLog &fl, const Complex<Real> &z,
                                        const Real &h, int nmax, int N)
{
    return Parametrization<Real>(curve, fl, nmax, N).derivative_check(z, h);
}

extern template class WpEvaluator<double>;
extern template class WpEvaluator<long double>;
extern template class WpEvaluator<quad>;
extern template class QSeries<double>;
extern template class QSeries<long double>;
extern template class QSeries<quad>;
extern template class Parametrization<double>;
extern template class Parametrization<long double>;
extern template class Parametrization<quad>;

} // namespace modparam
