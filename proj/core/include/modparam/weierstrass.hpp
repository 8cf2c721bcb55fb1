#pragma once

#include <vector>

#include <modparam/rational.hpp>
#include <modparam/series.hpp>

namespace modparam {

// The curve y^2 = 4x^3 - g2 x - g3 over Q, given by its invariants.
class Curve {
public:
    /// Throws DomainError when g2^3 - 27 g3^2 vanishes, except for the
    /// additive limit g2 = g3 = 0, which is accepted (see additive()).
    Curve(Rational g2, Rational g3);

    const Rational &g2() const { return g2_; }
    const Rational &g3() const { return g3_; }
    /// g2^3 - 27 g3^2.
    const Rational &discriminant() const { return disc_; }

    /// g2 = g3 = 0: the cuspidal cubic whose formal group is additive and
    /// whose wp is the pure pole 1/z^2.
    static Curve additive() { return Curve(Rational(0), Rational(0)); }

    bool is_additive() const { return g2_.is_zero() && g3_.is_zero(); }

    friend bool operator==(const Curve &, const Curve &) = default;

private:
    Rational g2_;
    Rational g3_;
    Rational disc_;
};

// wp(z) = 1/z^2 + sum_{k=2}^{N} c_k z^(2k-2).
struct WpExpansion {
    Curve curve;
    int order; // N
    std::vector<Rational> c; // c[k] for 0 <= k <= N; c[0] = c[1] = 0

    const Rational &coefficient(int k) const { return c.at(static_cast<std::size_t>(k)); }
};

/// c_2 = g2/20, c_3 = g3/28, c_k = 3/((2k+1)(k-3)) sum_{j=2}^{k-2} c_j c_{k-j}.
/// Throws DomainError for N < 2.
WpExpansion wp_coefficients(const Curve &curve, int N);

/// wp as a Laurent series of valuation -2 (body order 2N).
LaurentSeries wp_laurent(const WpExpansion &wp);
LaurentSeries wp_laurent(const Curve &curve, int N);
/// wp' = d/dz wp, valuation -3.
LaurentSeries wp_prime_laurent(const WpExpansion &wp);
LaurentSeries wp_prime_laurent(const Curve &curve, int N);

/// Eisenstein value G_k = (k-2)! c_{k/2} / 2 for even k, 0 for odd k.
/// DomainError when k < 4.
Rational eisenstein_G(const Curve &curve, int k);
/// BH_k = 2k G_k.
Rational bernoulli_hurwitz(const Curve &curve, int k);

} // namespace modparam
