#include <modparam/rational.hpp>

#include <cctype>
#include <ostream>

#include <modparam/error.hpp>

namespace modparam {

Rational::Rational(long num, long den) : v_(num, den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    v_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) : v_(num, den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    v_.canonicalize();
}

namespace {

// Validates an optionally signed run of decimal digits starting at `pos`.
std::size_t scan_integer(std::string_view text, std::size_t pos, bool allow_sign)
{
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        ++pos;
    }
    const std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == digits_begin) {
        throw ParseError("expected digits", pos);
    }
    return pos;
}

mpz_class to_mpz(std::string_view digits)
{
    std::string s(digits);
    if (!s.empty() && s.front() == '+') {
        s.erase(0, 1);
    }
    return mpz_class(s, 10);
}

} // namespace

Rational Rational::from_string(std::string_view text)
{
    const std::size_t num_end = scan_integer(text, 0, true);
    if (num_end == text.size()) {
        return Rational(to_mpz(text));
    }
    if (text[num_end] != '/') {
        throw ParseError("unexpected character '" + std::string(1, text[num_end]) + "'", num_end);
    }
    const std::size_t den_end = scan_integer(text, num_end + 1, false);
    if (den_end != text.size()) {
        throw ParseError("trailing characters", den_end);
    }
    const mpz_class den = to_mpz(text.substr(num_end + 1));
    if (den == 0) {
        throw ParseError("zero denominator", num_end + 1);
    }
    return Rational(to_mpz(text.substr(0, num_end)), den);
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

void Rational::add_product(const Rational &a, const Rational &b)
{
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    v_ += a.v_ * b.v_;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.str();
}

Rational abs(const Rational &r)
{
    return Rational(mpq_class(::abs(r.mpq())));
}

Rational pow(const Rational &base, unsigned exponent)
{
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return Rational(num, den);
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

std::int64_t mod_prime(const Rational &r, std::int64_t p)
{
    const mpz_class modulus(static_cast<long>(p));
    mpz_class den = r.denominator() % modulus;
    if (den == 0) {
        return -1;
    }
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    mpz_class res = (r.numerator() * inv) % modulus;
    if (res < 0) {
        res += modulus;
    }
    return res.get_si();
}

} // namespace modparam
