#include <modparam/weierstrass.hpp>

#include <string>

#include <modparam/error.hpp>

namespace modparam {

namespace {

Rational discriminant_of(const Rational &g2, const Rational &g3)
{
    return g2 * g2 * g2 - Rational(27) * g3 * g3;
}

} // namespace

Curve::Curve(Rational g2, Rational g3) : g2_(std::move(g2)), g3_(std::move(g3)), disc_(discriminant_of(g2_, g3_))
{
    if (disc_.is_zero() && !is_additive()) {
        throw DomainError("singular curve: g2^3 - 27 g3^2 = 0 for g2 = " + g2_.str() + ", g3 = " + g3_.str());
    }
}

WpExpansion wp_coefficients(const Curve &curve, int N)
{
    if (N < 2) {
        throw DomainError("wp_coefficients: N must be at least 2");
    }
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    c[2] = curve.g2() / Rational(20);
    if (N >= 3) {
        c[3] = curve.g3() / Rational(28);
    }
    // From wp'' = 6 wp^2 - g2/2, comparing coefficients of z^(2k-4).
    for (int k = 4; k <= N; ++k) {
        Rational acc;
        for (int j = 2; j <= k - 2; ++j) {
            acc.add_product(c[static_cast<std::size_t>(j)], c[static_cast<std::size_t>(k - j)]);
        }
        c[static_cast<std::size_t>(k)] = acc * Rational(3, (2L * k + 1) * (k - 3));
    }
    return WpExpansion{curve, N, std::move(c)};
}

LaurentSeries wp_laurent(const WpExpansion &wp)
{
    // z^2 wp = 1 + sum c_k z^(2k).
    UniSeries body(2 * wp.order);
    body[0] = Rational(1);
    for (int k = 2; k <= wp.order; ++k) {
        body[2 * k] = wp.coefficient(k);
    }
    return LaurentSeries(-2, std::move(body));
}

LaurentSeries wp_laurent(const Curve &curve, int N)
{
    return wp_laurent(wp_coefficients(curve, N));
}

LaurentSeries wp_prime_laurent(const WpExpansion &wp)
{
    return differentiate(wp_laurent(wp));
}

LaurentSeries wp_prime_laurent(const Curve &curve, int N)
{
    return wp_prime_laurent(wp_coefficients(curve, N));
}

Rational eisenstein_G(const Curve &curve, int k)
{
    if (k < 4) {
        throw DomainError("eisenstein_G: k = " + std::to_string(k) + " < 4");
    }
    if (k % 2 != 0) {
        return Rational(0);
    }
    const WpExpansion wp = wp_coefficients(curve, k / 2);
    return factorial(static_cast<unsigned>(k - 2)) * wp.coefficient(k / 2) / Rational(2);
}

Rational bernoulli_hurwitz(const Curve &curve, int k)
{
    if (k < 4) {
        throw DomainError("bernoulli_hurwitz: k = " + std::to_string(k) + " < 4");
    }
    return Rational(2 * k) * eisenstein_G(curve, k);
}

} // namespace modparam
