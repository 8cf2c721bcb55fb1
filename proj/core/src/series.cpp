#include <modparam/series.hpp>

#include <algorithm>
#include <string>

#include <modparam/error.hpp>

namespace modparam {

namespace {

void require_same_order(int a, int b, const char *op)
{
    if (a != b) {
        throw OrderMismatch(std::string(op) + ": orders " + std::to_string(a) + " and " + std::to_string(b)
                            + " differ");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// UniSeries

UniSeries::UniSeries(int order) : c_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}

UniSeries::UniSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    if (c_.empty()) {
        c_.resize(1);
    }
}

UniSeries UniSeries::monomial(int order, int k, const Rational &c)
{
    UniSeries r(order);
    if (k >= 0 && k <= order) {
        r[k] = c;
    }
    return r;
}

bool UniSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational &x) { return x.is_zero(); });
}

int UniSeries::valuation() const
{
    for (int k = 0; k <= order(); ++k) {
        if (!(*this)[k].is_zero()) {
            return k;
        }
    }
    return order() + 1;
}

UniSeries UniSeries::truncated(int order) const
{
    UniSeries r(order);
    const int n = std::min(order, this->order());
    for (int k = 0; k <= n; ++k) {
        r[k] = (*this)[k];
    }
    return r;
}

UniSeries UniSeries::shifted_up(int k) const
{
    UniSeries r(order());
    for (int i = 0; i + k <= order(); ++i) {
        r[i + k] = (*this)[i];
    }
    return r;
}

UniSeries UniSeries::shifted_down(int k) const
{
    if (k > order() + 1 || valuation() < k) {
        throw DomainError("shifted_down: series is not divisible by T^" + std::to_string(k));
    }
    UniSeries r(order() - k);
    for (int i = k; i <= order(); ++i) {
        r[i - k] = (*this)[i];
    }
    return r;
}

UniSeries &UniSeries::operator+=(const UniSeries &o)
{
    require_same_order(order(), o.order(), "add");
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    return *this;
}

UniSeries &UniSeries::operator-=(const UniSeries &o)
{
    require_same_order(order(), o.order(), "sub");
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    return *this;
}

UniSeries &UniSeries::operator*=(const Rational &s)
{
    for (auto &x : c_) {
        x *= s;
    }
    return *this;
}

UniSeries operator-(const UniSeries &a)
{
    return a * Rational(-1);
}

UniSeries operator*(const UniSeries &a, const UniSeries &b)
{
    require_same_order(a.order(), b.order(), "mul");
    const int n = a.order();
    UniSeries r(n);
    // The series met here are sparse in parity classes, so skipping zeros
    // pays for itself.
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            r[i + j].add_product(a[i], b[j]);
        }
    }
    return r;
}

UniSeries inverse(const UniSeries &b)
{
    if (b[0].is_zero()) {
        throw NonUnitDivisor("inverse: constant term is zero");
    }
    const int n = b.order();
    UniSeries q(n);
    const Rational inv0 = Rational(1) / b[0];
    q[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational acc;
        for (int j = 1; j <= k; ++j) {
            acc.add_product(b[j], q[k - j]);
        }
        q[k] = -acc * inv0;
    }
    return q;
}

UniSeries div(const UniSeries &a, const UniSeries &b)
{
    require_same_order(a.order(), b.order(), "div");
    if (b[0].is_zero()) {
        throw NonUnitDivisor("div: divisor has zero constant term");
    }
    const int n = a.order();
    UniSeries q(n);
    const Rational inv0 = Rational(1) / b[0];
    for (int k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (int j = 1; j <= k; ++j) {
            if (!b[j].is_zero()) {
                acc -= b[j] * q[k - j];
            }
        }
        q[k] = acc * inv0;
    }
    return q;
}

UniSeries compose(const UniSeries &outer, const UniSeries &inner)
{
    require_same_order(outer.order(), inner.order(), "compose");
    if (!inner[0].is_zero()) {
        throw CompositionDomain("compose: inner series has nonzero constant term");
    }
    const int n = outer.order();
    // Horner in the inner series.
    UniSeries acc = UniSeries::monomial(n, 0, outer[n]);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * inner;
        acc[0] += outer[k];
    }
    return acc;
}

UniSeries power(const UniSeries &f, unsigned n)
{
    UniSeries result = UniSeries::monomial(f.order(), 0);
    UniSeries base = f;
    while (n != 0) {
        if ((n & 1u) != 0) {
            result = result * base;
        }
        n >>= 1;
        if (n != 0) {
            base = base * base;
        }
    }
    return result;
}

UniSeries reverse(const UniSeries &f)
{
    if (f.order() < 1 || !f[0].is_zero() || f[1] != Rational(1)) {
        throw ReversionDomain("reverse: series must have the form T + O(T^2)");
    }
    const int n = f.order();
    UniSeries g(n);
    g[1] = Rational(1);
    if (n < 2) {
        return g;
    }
    // h = T / f has order n - 1; [T^k] g = [T^(k-1)] h^k / k.
    const UniSeries h = inverse(f.shifted_down(1));
    UniSeries hk = h;
    for (int k = 2; k <= n; ++k) {
        // Only coefficients up to k - 1 of h^k are needed at step k, but
        // later powers need everything up to n - 1.
        hk = hk * h;
        g[k] = hk[k - 1] / Rational(k);
    }
    return g;
}

UniSeries differentiate(const UniSeries &f)
{
    const int n = f.order();
    if (n == 0) {
        return UniSeries(0);
    }
    UniSeries d(n - 1);
    for (int k = 1; k <= n; ++k) {
        d[k - 1] = f[k] * Rational(k);
    }
    return d;
}

Rational evaluate(const UniSeries &f, const Rational &x)
{
    Rational acc = f[f.order()];
    for (int k = f.order() - 1; k >= 0; --k) {
        acc *= x;
        acc += f[k];
    }
    return acc;
}

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries::LaurentSeries(int valuation, UniSeries body) : valuation_(valuation), body_(std::move(body))
{
    const int v = body_.valuation();
    if (v > body_.order()) {
        return;
    }
    if (v > 0) {
        body_ = body_.shifted_down(v);
        valuation_ += v;
    }
}

Rational LaurentSeries::coefficient(int k) const
{
    if (k > precision()) {
        throw OrderError("Laurent coefficient " + std::to_string(k) + " beyond precision "
                         + std::to_string(precision()));
    }
    if (k < valuation_) {
        return Rational(0);
    }
    return body_[k - valuation_];
}

LaurentSeries differentiate(const LaurentSeries &f)
{
    const UniSeries &b = f.body();
    UniSeries d(b.order());
    for (int k = 0; k <= b.order(); ++k) {
        d[k] = b[k] * Rational(f.valuation() + k);
    }
    return LaurentSeries(f.valuation() - 1, std::move(d));
}

LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b)
{
    const int n = std::min(a.body().order(), b.body().order());
    return LaurentSeries(a.valuation() + b.valuation(), a.body().truncated(n) * b.body().truncated(n));
}

LaurentSeries operator*(const Rational &s, const LaurentSeries &a)
{
    return LaurentSeries(a.valuation(), s * a.body());
}

LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b)
{
    const int v = std::min(a.valuation(), b.valuation());
    const int prec = std::min(a.precision(), b.precision());
    UniSeries body(std::max(prec - v, 0));
    for (int k = v; k <= prec; ++k) {
        body[k - v] = a.coefficient(k) + b.coefficient(k);
    }
    return LaurentSeries(v, std::move(body));
}

LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b)
{
    return a + Rational(-1) * b;
}

LaurentSeries inverse(const LaurentSeries &a)
{
    if (a.is_zero()) {
        throw NonUnitDivisor("inverse of the zero Laurent series");
    }
    return LaurentSeries(-a.valuation(), inverse(a.body()));
}

LaurentSeries compose(const LaurentSeries &outer, const UniSeries &inner)
{
    if (inner.order() < 1 || !inner[0].is_zero() || inner[1].is_zero()) {
        throw CompositionDomain("Laurent compose: inner series must have valuation exactly one");
    }
    // outer(inner) = inner^v * body(inner) and inner = T * u with u(0) != 0.
    const int n = std::min(outer.body().order(), inner.order() - 1);
    const UniSeries u = inner.shifted_down(1).truncated(n);
    const UniSeries inner_n = inner.truncated(n);
    UniSeries factor = UniSeries::monomial(n, 0);
    if (outer.valuation() >= 0) {
        factor = power(u, static_cast<unsigned>(outer.valuation()));
    } else {
        factor = power(inverse(u), static_cast<unsigned>(-outer.valuation()));
    }
    const UniSeries body = compose(outer.body().truncated(n), inner_n) * factor;
    return LaurentSeries(outer.valuation(), body);
}

// ---------------------------------------------------------------------------
// BiSeries

BiSeries::BiSeries(int order)
    : order_(std::max(order, 0)), c_(static_cast<std::size_t>(order_ + 1) * static_cast<std::size_t>(order_ + 2) / 2)
{
}

BiSeries BiSeries::variable(int order, int var)
{
    BiSeries r(order);
    if (order >= 1) {
        if (var == 0) {
            r(1, 0) = Rational(1);
        } else {
            r(0, 1) = Rational(1);
        }
    }
    return r;
}

BiSeries BiSeries::constant(int order, const Rational &c)
{
    BiSeries r(order);
    r(0, 0) = c;
    return r;
}

BiSeries BiSeries::from_uni(const UniSeries &f, int var)
{
    BiSeries r(f.order());
    for (int k = 0; k <= f.order(); ++k) {
        if (var == 0) {
            r(k, 0) = f[k];
        } else {
            r(0, k) = f[k];
        }
    }
    return r;
}

Rational BiSeries::at(int i, int j) const
{
    if (i < 0 || j < 0 || i + j > order_) {
        return Rational(0);
    }
    return (*this)(i, j);
}

bool BiSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational &x) { return x.is_zero(); });
}

BiSeries BiSeries::truncated(int order) const
{
    BiSeries r(order);
    const int n = std::min(order, order_);
    for (int d = 0; d <= n; ++d) {
        for (int j = 0; j <= d; ++j) {
            r(d - j, j) = (*this)(d - j, j);
        }
    }
    return r;
}

BiSeries &BiSeries::operator+=(const BiSeries &o)
{
    require_same_order(order_, o.order_, "bivariate add");
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    return *this;
}

BiSeries &BiSeries::operator-=(const BiSeries &o)
{
    require_same_order(order_, o.order_, "bivariate sub");
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    return *this;
}

BiSeries &BiSeries::operator*=(const Rational &s)
{
    for (auto &x : c_) {
        x *= s;
    }
    return *this;
}

BiSeries operator*(const BiSeries &a, const BiSeries &b)
{
    require_same_order(a.order(), b.order(), "bivariate mul");
    const int n = a.order();
    BiSeries r(n);
    for (int da = 0; da <= n; ++da) {
        for (int ja = 0; ja <= da; ++ja) {
            const Rational &x = a(da - ja, ja);
            if (x.is_zero()) {
                continue;
            }
            for (int db = 0; da + db <= n; ++db) {
                for (int jb = 0; jb <= db; ++jb) {
                    const Rational &y = b(db - jb, jb);
                    if (!y.is_zero()) {
                        r(da - ja + db - jb, ja + jb).add_product(x, y);
                    }
                }
            }
        }
    }
    return r;
}

BiSeries inverse(const BiSeries &b)
{
    const Rational c0 = b.constant_term();
    if (c0.is_zero()) {
        throw NonUnitDivisor("bivariate inverse: constant term is zero");
    }
    // 1/(c0 + R) = (1/c0) * sum_k (-R/c0)^k; R has no constant term so the
    // sum stops at k = order.
    const Rational inv0 = Rational(1) / c0;
    BiSeries x = b;
    x(0, 0) = Rational(0);
    x *= -inv0;
    BiSeries acc = BiSeries::constant(b.order(), Rational(1));
    BiSeries term = acc;
    for (int k = 1; k <= b.order(); ++k) {
        term = term * x;
        acc += term;
    }
    return acc * inv0;
}

BiSeries divided_difference(const UniSeries &f)
{
    const int n = std::max(f.order() - 1, 0);
    BiSeries r(n);
    for (int k = 1; k <= f.order(); ++k) {
        if (f[k].is_zero()) {
            continue;
        }
        for (int i = 0; i <= k - 1; ++i) {
            r(i, k - 1 - i) += f[k];
        }
    }
    return r;
}

BiSeries bi_substitute(const UniSeries &outer, const BiSeries &inner)
{
    if (!inner.constant_term().is_zero()) {
        throw CompositionDomain("bi_substitute: inner series has nonzero constant term");
    }
    const int n = inner.order();
    if (outer.order() < n) {
        throw OrderMismatch("bi_substitute: outer order " + std::to_string(outer.order())
                            + " below inner order " + std::to_string(n));
    }
    BiSeries acc = BiSeries::constant(n, outer[0]);
    BiSeries pw = BiSeries::constant(n, Rational(1));
    for (int k = 1; k <= n; ++k) {
        pw = pw * inner;
        if (!outer[k].is_zero()) {
            acc += outer[k] * pw;
        }
    }
    return acc;
}

UniSeries restrict_t2_zero(const BiSeries &f)
{
    UniSeries r(f.order());
    for (int i = 0; i <= f.order(); ++i) {
        r[i] = f(i, 0);
    }
    return r;
}

} // namespace modparam
