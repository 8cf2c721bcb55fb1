#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace modparam {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(static_cast<long>(n)) {}     // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class &n) : v_(n) {}
    Rational(const mpz_class &num, const mpz_class &den);
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "a" or "a/b" (integers only, base 10). Throws ParseError.
    static Rational from_string(std::string_view text);

    const mpz_class &numerator() const { return v_.get_num(); }
    const mpz_class &denominator() const { return v_.get_den(); }
    const mpq_class &mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// "num/den", or just "num" for integers.
    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    Rational &operator+=(const Rational &o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        v_ *= o.v_;
        return *this;
    }
    /// Throws DomainError on division by zero.
    Rational &operator/=(const Rational &o);

    /// this += a * b without a temporary.
    void add_product(const Rational &a, const Rational &b);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
    mpq_class v_;
};

Rational abs(const Rational &r);
Rational pow(const Rational &base, unsigned exponent);
/// n! as a Rational.
Rational factorial(unsigned n);

/// Residue of r modulo a prime p, or -1 when p divides the denominator.
std::int64_t mod_prime(const Rational &r, std::int64_t p);

} // namespace modparam
