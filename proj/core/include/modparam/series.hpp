#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <modparam/rational.hpp>

namespace modparam {

// Truncated univariate power series c_0 + c_1 T + ... + c_N T^N over Q.
// Every coefficient up to the order N is known exactly; nothing beyond it is
// ever read or produced.
class UniSeries {
public:
    /// The zero series of order `order`.
    explicit UniSeries(int order = 0);
    /// Takes the coefficients as given; the order is coeffs.size() - 1.
    explicit UniSeries(std::vector<Rational> coeffs);

    /// c * T^k at the given order (zero if k > order).
    static UniSeries monomial(int order, int k, const Rational &c = Rational(1));
    /// The series T.
    static UniSeries identity(int order) { return monomial(order, 1); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational &operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational &operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    std::span<const Rational> coeffs() const { return c_; }

    bool is_zero() const;
    /// Index of the first nonzero coefficient, or order() + 1 for zero.
    int valuation() const;

    /// Drops (or zero-pads) coefficients so that the order becomes `order`.
    /// Padding asserts knowledge of zeros; only use it where that holds.
    UniSeries truncated(int order) const;
    /// Multiplies by T^k (k >= 0) keeping the order.
    UniSeries shifted_up(int k) const;
    /// Divides by T^k; requires the first k coefficients to vanish. The
    /// order drops by k.
    UniSeries shifted_down(int k) const;

    UniSeries &operator+=(const UniSeries &o);
    UniSeries &operator-=(const UniSeries &o);
    UniSeries &operator*=(const Rational &s);

    friend UniSeries operator+(UniSeries a, const UniSeries &b) { return a += b; }
    friend UniSeries operator-(UniSeries a, const UniSeries &b) { return a -= b; }
    friend UniSeries operator-(const UniSeries &a);
    friend UniSeries operator*(UniSeries a, const Rational &s) { return a *= s; }
    friend UniSeries operator*(const Rational &s, UniSeries a) { return a *= s; }
    /// Cauchy product truncated at the shared order.
    friend UniSeries operator*(const UniSeries &a, const UniSeries &b);

    friend bool operator==(const UniSeries &, const UniSeries &) = default;

private:
    std::vector<Rational> c_;
};

/// q with q * b == a up to the shared order. b must have a nonzero constant
/// term (NonUnitDivisor otherwise).
UniSeries div(const UniSeries &a, const UniSeries &b);
/// 1 / b for a unit b.
UniSeries inverse(const UniSeries &b);

/// outer(inner(T)). inner must have zero constant term (CompositionDomain)
/// and both orders must agree (OrderMismatch).
UniSeries compose(const UniSeries &outer, const UniSeries &inner);

/// Compositional inverse of f = T + O(T^2), by Lagrange inversion:
/// [T^n] g = (1/n) [T^(n-1)] (T / f)^n.
UniSeries reverse(const UniSeries &f);

/// Term-by-term derivative. Order N becomes N - 1 (order 0 stays 0).
UniSeries differentiate(const UniSeries &f);

/// f^n truncated at f's order.
UniSeries power(const UniSeries &f, unsigned n);

/// Evaluation of the truncated polynomial at an exact point.
Rational evaluate(const UniSeries &f, const Rational &x);

// T^valuation * body with body[0] != 0 (unless the series is zero, in which
// case body is the zero series). The absolute precision is
// valuation + body.order(). Only the handful of operations needed for the
// Weierstrass pole bookkeeping are provided.
class LaurentSeries {
public:
    LaurentSeries() = default;
    /// Normalizes: leading zeros of body are folded into the valuation.
    LaurentSeries(int valuation, UniSeries body);

    int valuation() const { return valuation_; }
    const UniSeries &body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }
    /// Largest exponent whose coefficient is known.
    int precision() const { return valuation_ + body_.order(); }
    /// Coefficient of T^k; zero below the valuation. OrderError above the
    /// precision.
    Rational coefficient(int k) const;

    friend bool operator==(const LaurentSeries &, const LaurentSeries &) = default;

private:
    int valuation_ = 0;
    UniSeries body_{0};
};

/// Derivative; valuation drops by one and the body order is kept.
LaurentSeries differentiate(const LaurentSeries &f);
LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries operator*(const Rational &s, const LaurentSeries &a);
/// Sum; the result precision is the smaller of the two.
LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b);
/// 1 / a for nonzero a.
LaurentSeries inverse(const LaurentSeries &a);
/// outer(inner(T)) for inner = T + ... (valuation exactly one). The result is
/// computed to precision outer.valuation() + inner body order.
LaurentSeries compose(const LaurentSeries &outer, const UniSeries &inner);

// Truncated bivariate series sum a_ij t1^i t2^j over i + j <= N, stored as a
// dense triangle ordered by total degree.
class BiSeries {
public:
    explicit BiSeries(int order = 0);

    /// t1 (var == 0) or t2 (var == 1).
    static BiSeries variable(int order, int var);
    static BiSeries constant(int order, const Rational &c);
    /// f(t1) or f(t2), depending on var.
    static BiSeries from_uni(const UniSeries &f, int var);

    int order() const { return order_; }
    const Rational &operator()(int i, int j) const { return c_[index(i, j)]; }
    Rational &operator()(int i, int j) { return c_[index(i, j)]; }
    /// a_ij, or zero if i + j exceeds the order.
    Rational at(int i, int j) const;

    bool is_zero() const;
    Rational constant_term() const { return c_[0]; }
    BiSeries truncated(int order) const;

    BiSeries &operator+=(const BiSeries &o);
    BiSeries &operator-=(const BiSeries &o);
    BiSeries &operator*=(const Rational &s);

    friend BiSeries operator+(BiSeries a, const BiSeries &b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries &b) { return a -= b; }
    friend BiSeries operator*(BiSeries a, const Rational &s) { return a *= s; }
    friend BiSeries operator*(const Rational &s, BiSeries a) { return a *= s; }
    friend BiSeries operator*(const BiSeries &a, const BiSeries &b);

    friend bool operator==(const BiSeries &, const BiSeries &) = default;

private:
    static std::size_t index(int i, int j)
    {
        const auto d = static_cast<std::size_t>(i + j);
        return d * (d + 1) / 2 + static_cast<std::size_t>(j);
    }

    int order_;
    std::vector<Rational> c_;
};

/// 1 / b for b with nonzero constant term.
BiSeries inverse(const BiSeries &b);

/// (f(t1) - f(t2)) / (t1 - t2) expanded as a symmetric polynomial; the
/// order is f.order() - 1. No division is performed.
BiSeries divided_difference(const UniSeries &f);

/// outer(inner(t1, t2)) truncated at inner's order. inner must have zero
/// constant term; outer may have any order (missing terms are treated as
/// unknown, so outer.order() must be at least inner.order()).
BiSeries bi_substitute(const UniSeries &outer, const BiSeries &inner);

/// f(t1, 0) as a univariate series.
UniSeries restrict_t2_zero(const BiSeries &f);

} // namespace modparam
