#include <modparam/numeric_eval.hpp>

#include <cstdlib>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include <modparam/error.hpp>

namespace modparam {

namespace {

template <class Real>
Real parse_real(const std::string &text)
{
    if constexpr (std::is_same_v<Real, double>) {
        return std::strtod(text.c_str(), nullptr);
    } else if constexpr (std::is_same_v<Real, long double>) {
        return std::strtold(text.c_str(), nullptr);
    } else {
        return Real(text);
    }
}

template <class Real>
Complex<Real> i_times(const Real &x)
{
    return Complex<Real>(Real(0), x);
}

} // namespace

template <class Real>
Real to_real(const Rational &r)
{
    if constexpr (std::is_same_v<Real, double>) {
        return r.to_double();
    } else {
        // 256 bits comfortably exceeds every backend; the decimal string is
        // then rounded once by the backend parser.
        mpf_class f(r.mpq(), 256);
        mp_exp_t exp = 0;
        std::string digits = f.get_str(exp, 10, 45);
        if (digits.empty()) {
            return Real(0);
        }
        const bool negative = digits.front() == '-';
        if (negative) {
            digits.erase(0, 1);
        }
        std::string text = (negative ? "-0." : "0.") + digits + "e" + std::to_string(exp);
        return parse_real<Real>(text);
    }
}

template <class Real>
Real from_decimal(const std::string &text)
{
    return parse_real<Real>(text);
}

template <class Real>
std::string to_decimal(const Real &x)
{
    std::ostringstream os;
    os.precision(std::numeric_limits<Real>::max_digits10);
    os << x;
    return os.str();
}

// ---------------------------------------------------------------------------

template <class Real>
WpEvaluator<Real>::WpEvaluator(const WpExpansion &wp)
{
    c_.reserve(static_cast<std::size_t>(wp.order) + 1);
    for (int k = 0; k <= wp.order; ++k) {
        c_.push_back(to_real<Real>(wp.coefficient(k)));
        if (!wp.coefficient(k).is_zero()) {
            last_nonzero_ = k;
        }
    }
}

template <class Real>
WpValue<Real> WpEvaluator<Real>::operator()(const Complex<Real> &w) const
{
    using std::abs;
    if (abs(w) == Real(0)) {
        throw PoleError("wp evaluated at its pole w = 0");
    }
    const Complex<Real> w2 = w * w;
    const int n = static_cast<int>(c_.size()) - 1;
    // S(u) = sum_{k>=2} c_k u^(k-1), wp = 1/w^2 + S(w^2), wp' = -2/w^3 + 2 w S'(w^2).
    Complex<Real> s(Real(0), Real(0));
    Complex<Real> ds(Real(0), Real(0));
    for (int k = n; k >= 2; --k) {
        s = s * w2 + c_[static_cast<std::size_t>(k)];
        ds = ds * w2 + c_[static_cast<std::size_t>(k)] * Real(k - 1);
    }
    s = s * w2;
    const Complex<Real> inv_w2 = Real(1) / w2;
    WpValue<Real> out{inv_w2 + s, Real(-2) * inv_w2 / w + Real(2) * w * ds};

    if (last_nonzero_ >= 2) {
        Real tail = abs(c_[static_cast<std::size_t>(last_nonzero_)]);
        const Real r2 = abs(w2);
        for (int k = 1; k < last_nonzero_; ++k) {
            tail *= r2;
        }
        if (!(tail <= Real(wp_reliability_tolerance) * abs(out.wp))) {
            std::ostringstream msg;
            msg << "wp series unreliable at |w| = " << to_decimal<Real>(abs(w)) << " (radius "
                << to_decimal<Real>(reliability_radius()) << ")";
            throw OutOfRadius(msg.str());
        }
    }
    return out;
}

template <class Real>
Real WpEvaluator<Real>::reliability_radius() const
{
    using std::abs;
    using std::pow;
    if (last_nonzero_ < 2) {
        return std::numeric_limits<Real>::infinity();
    }
    // |c_k| r^(2k-2) = tol / r^2.
    const Real ck = abs(c_[static_cast<std::size_t>(last_nonzero_)]);
    return Real(pow(Real(wp_reliability_tolerance) / ck, Real(1) / Real(2 * last_nonzero_)));
}

// ---------------------------------------------------------------------------

template <class Real>
QSeries<Real>::QSeries(const FormalLog &fl, int nmax)
{
    if (nmax > fl.order() || nmax < 1) {
        throw OrderError("q-series: nmax = " + std::to_string(nmax) + " outside [1, " + std::to_string(fl.order())
                         + "]");
    }
    a_.assign(static_cast<std::size_t>(nmax) + 1, Real(0));
    a_by_n_.assign(static_cast<std::size_t>(nmax) + 1, Real(0));
    for (int n = 1; n <= nmax; ++n) {
        a_[static_cast<std::size_t>(n)] = to_real<Real>(fl.a(n));
        a_by_n_[static_cast<std::size_t>(n)] = to_real<Real>(fl.series[n]);
    }
}

template <class Real>
Complex<Real> QSeries<Real>::nome(const Complex<Real> &z) const
{
    using std::exp;
    using std::imag;
    if (!(imag(z) > Real(0))) {
        throw HalfPlaneError("z must lie in the upper half-plane (Im z > 0)");
    }
    const Real two_pi = Real(2) * boost::math::constants::pi<Real>();
    return exp(i_times(two_pi) * z);
}

namespace {

template <class Real>
Complex<Real> horner_q(const std::vector<Real> &b, const Complex<Real> &q)
{
    Complex<Real> acc(Real(0), Real(0));
    for (std::size_t n = b.size() - 1; n >= 1; --n) {
        acc = (acc + b[n]) * q;
    }
    return acc;
}

} // namespace

template <class Real>
QSeriesValue<Real> QSeries<Real>::F(const Complex<Real> &z) const
{
    using std::abs;
    const Complex<Real> q = nome(z);
    QSeriesValue<Real> out{horner_q<Real>(a_by_n_, q), Real(0)};
    for (int n = nmax(); n >= 1; --n) {
        if (a_by_n_[static_cast<std::size_t>(n)] != Real(0)) {
            Real qn = Real(1);
            const Real aq = abs(q);
            for (int k = 0; k < n; ++k) {
                qn *= aq;
            }
            out.truncation_estimate = abs(a_by_n_[static_cast<std::size_t>(n)]) * qn;
            break;
        }
    }
    return out;
}

template <class Real>
Complex<Real> QSeries<Real>::cusp_form(const Complex<Real> &z) const
{
    return horner_q<Real>(a_, nome(z));
}

// ---------------------------------------------------------------------------

template <class Real>
Parametrization<Real>::Parametrization(const Curve &curve, const FormalLog &fl, int nmax, int N)
    : g2_(to_real<Real>(curve.g2())), g3_(to_real<Real>(curve.g3())), q_(fl, nmax), wp_(wp_coefficients(curve, N))
{
}

template <class Real>
ParamResult<Real> Parametrization<Real>::point(const Complex<Real> &z) const
{
    using std::abs;
    ParamResult<Real> r;
    r.z = z;
    r.q = q_.nome(z);
    const QSeriesValue<Real> fv = q_.F(z);
    r.F = fv.F;
    r.truncation_estimate = fv.truncation_estimate;
    const WpValue<Real> wv = wp_(r.F);
    r.alpha = wv.wp;
    r.beta = wv.wp_prime;
    const Complex<Real> a3 = r.alpha * r.alpha * r.alpha;
    const Complex<Real> lhs = r.beta * r.beta - Real(4) * a3 + g2_ * r.alpha + g3_;
    r.residual = abs(lhs);
    const Real scale = abs(r.beta) * abs(r.beta) + Real(4) * abs(a3) + abs(g2_) * abs(r.alpha) + abs(g3_);
    r.scaled_residual = r.residual / scale;
    return r;
}

template <class Real>
DerivativeReport<Real> Parametrization<Real>::derivative_check(const Complex<Real> &z, const Real &h) const
{
    using std::abs;
    const Complex<Real> dz(h, Real(0));
    const Complex<Real> plus = point(z + dz).alpha;
    const Complex<Real> minus = point(z - dz).alpha;
    DerivativeReport<Real> r;
    r.finite_difference = (plus - minus) / (Real(2) * h);
    const Real two_pi = Real(2) * boost::math::constants::pi<Real>();
    // F'(z) = 2 pi i f(z); alpha' = wp'(F) F'.
    r.chain_rule = point(z).beta * i_times(two_pi) * q_.cusp_form(z);
    r.relative_deviation = abs(r.finite_difference - r.chain_rule) / abs(r.chain_rule);
    return r;
}

#define MODPARAM_INSTANTIATE(R)                                                                                        \
    template R to_real<R>(const Rational &);                                                                           \
    template R from_decimal<R>(const std::string &);                                                                   \
    template std::string to_decimal<R>(const R &);                                                                     \
    template class WpEvaluator<R>;                                                                                     \
    template class QSeries<R>;                                                                                         \
    template class Parametrization<R>;

MODPARAM_INSTANTIATE(double)
MODPARAM_INSTANTIATE(long double)
MODPARAM_INSTANTIATE(quad)

#undef MODPARAM_INSTANTIATE

} // namespace modparam
