#include <modparam/formal_group.hpp>

#include <modparam/error.hpp>

namespace modparam {

std::string to_string(LawProvenance p)
{
    switch (p) {
        case LawProvenance::exp_log:
            return "exp-log";
        case LawProvenance::buchstaber_bunkova:
            return "buchstaber-bunkova";
    }
    return "unknown";
}

FormalExp formal_exponential(const Curve &curve, int N)
{
    if (N < 1) {
        throw DomainError("formal_exponential: N must be at least 1");
    }
    // f_E = -2 T (T^2 wp) / (T^3 wp'); the quotient is needed to order N - 1,
    // i.e. body order 2K >= N - 1.
    const int K = std::max(2, N / 2 + 1);
    const WpExpansion wp = wp_coefficients(curve, K);
    const UniSeries p = wp_laurent(wp).body().truncated(N - 1);
    const UniSeries dp = wp_prime_laurent(wp).body().truncated(N - 1);
    UniSeries q = div(p, dp) * Rational(-2);
    UniSeries fe(N);
    for (int k = 0; k <= N - 1; ++k) {
        fe[k + 1] = q[k];
    }
    return FormalExp{curve, std::move(fe)};
}

FormalLog formal_logarithm_of(const UniSeries &f)
{
    UniSeries fl = reverse(f);
    std::vector<Rational> an(static_cast<std::size_t>(fl.order()) + 1);
    for (int n = 1; n <= fl.order(); ++n) {
        an[static_cast<std::size_t>(n)] = Rational(n) * fl[n];
    }
    return FormalLog{std::nullopt, std::move(fl), std::move(an)};
}

FormalLog formal_logarithm(const FormalExp &fe)
{
    FormalLog fl = formal_logarithm_of(fe.series);
    fl.curve = fe.curve;
    return fl;
}

std::vector<Rational> universal_bernoulli(const UniSeries &f, int N)
{
    if (N < 0 || N >= f.order()) {
        throw OrderError("universal_bernoulli: need N < order of f (N = " + std::to_string(N) + ", order "
                         + std::to_string(f.order()) + ")");
    }
    const UniSeries ratio = inverse(f.shifted_down(1));
    std::vector<Rational> b(static_cast<std::size_t>(N) + 1);
    Rational fact(1);
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            fact *= Rational(k);
        }
        b[static_cast<std::size_t>(k)] = fact * ratio[k];
    }
    return b;
}

std::vector<Rational> universal_bernoulli(const FormalExp &fe, int N)
{
    return universal_bernoulli(fe.series, N);
}

SCoordinate s_expansion(const Curve &curve, int N)
{
    if (N < 3) {
        throw DomainError("s_expansion: N must be at least 3");
    }
    const Rational a = -curve.g2() / Rational(4);
    const Rational b = -curve.g3() / Rational(4);
    const UniSeries t = UniSeries::identity(N);
    const UniSeries t3 = UniSeries::monomial(N, 3);
    UniSeries s = t3;
    // s_{k+1} - s_k = O(t^(3+4k)); stop at the fixed point.
    for (int iter = 0; iter <= N; ++iter) {
        const UniSeries s2 = s * s;
        UniSeries next = t3 + a * (t * s2) + b * (s2 * s);
        if (next == s) {
            break;
        }
        s = std::move(next);
    }
    return SCoordinate{curve, std::move(s)};
}

GroupLaw group_law_exp_log(const FormalExp &fe, const FormalLog &fl, int N)
{
    if (fe.series.order() < N || fl.series.order() < N) {
        throw OrderError("group_law_exp_log: series order below requested total degree");
    }
    const UniSeries log = fl.series.truncated(N);
    const BiSeries sum = BiSeries::from_uni(log, 0) + BiSeries::from_uni(log, 1);
    return GroupLaw{fe.curve, bi_substitute(fe.series.truncated(N), sum), LawProvenance::exp_log};
}

GroupLaw group_law_bb(const Curve &curve, int N)
{
    if (N < 2) {
        throw DomainError("group_law_bb: N must be at least 2");
    }
    // One extra order of s so that the divided difference is exact through
    // total degree N.
    const UniSeries s = s_expansion(curve, std::max(N + 1, 3)).s;
    const BiSeries m = divided_difference(s).truncated(N);
    const BiSeries t2 = BiSeries::variable(N, 1);
    const BiSeries b = BiSeries::from_uni(s.truncated(N), 1) - t2 * m;

    const BiSeries m2 = m * m;
    const BiSeries numer = Rational(2) * curve.g2() * BiSeries::constant(N, Rational(1)) + Rational(3) * curve.g3() * m;
    const BiSeries denom = BiSeries::constant(N, Rational(4)) - curve.g2() * m2 - curve.g3() * (m2 * m);
    BiSeries F = BiSeries::variable(N, 0) + t2 - b * m * numer * inverse(denom);
    return GroupLaw{curve, std::move(F), LawProvenance::buchstaber_bunkova};
}

namespace {

// For F = sum a_ij x^i y^j returns H with H[i] = sum_j a_ij G^j, so that
// F(x, G) = sum_i x^i H[i]. Each H[i] is truncated at order N - i.
std::vector<BiSeries> partial_substitution_second(const BiSeries &F, const BiSeries &G)
{
    const int n = F.order();
    std::vector<BiSeries> powers;
    powers.reserve(static_cast<std::size_t>(n) + 1);
    powers.push_back(BiSeries::constant(n, Rational(1)));
    for (int j = 1; j <= n; ++j) {
        powers.push_back(powers.back() * G);
    }
    std::vector<BiSeries> h;
    h.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        BiSeries acc(n - i);
        for (int j = 0; i + j <= n; ++j) {
            if (!F(i, j).is_zero()) {
                acc += F(i, j) * powers[static_cast<std::size_t>(j)].truncated(n - i);
            }
        }
        h.push_back(std::move(acc));
    }
    return h;
}

// Same with the roles of the variables swapped: F(K, y) = sum_j y^j V[j].
std::vector<BiSeries> partial_substitution_first(const BiSeries &F, const BiSeries &K)
{
    BiSeries swapped(F.order());
    for (int d = 0; d <= F.order(); ++d) {
        for (int j = 0; j <= d; ++j) {
            swapped(j, d - j) = F(d - j, j);
        }
    }
    return partial_substitution_second(swapped, K);
}

} // namespace

AxiomReport verify_axioms(const BiSeries &F)
{
    const int n = F.order();
    AxiomReport r;

    r.neutrality = F(0, 0).is_zero();
    for (int i = 1; i <= n && r.neutrality; ++i) {
        r.neutrality = F(i, 0) == Rational(i == 1 ? 1 : 0);
    }

    r.commutativity = true;
    for (int d = 0; d <= n && r.commutativity; ++d) {
        for (int j = 0; j <= d; ++j) {
            if (F(d - j, j) != F(j, d - j)) {
                r.commutativity = false;
                break;
            }
        }
    }

    // Trivariate comparison. Left: F(t1, F(t2, t3)) = sum_i t1^i L[i](t2, t3).
    // Right: F(F(t1, t2), t3) = sum_k t3^k R[k](t1, t2).
    if (!F(0, 0).is_zero()) {
        r.associativity = false;
        return r;
    }
    const std::vector<BiSeries> left = partial_substitution_second(F, F);
    const std::vector<BiSeries> right = partial_substitution_first(F, F);
    r.associativity = true;
    for (int i = 0; i <= n && r.associativity; ++i) {
        for (int j = 0; i + j <= n && r.associativity; ++j) {
            for (int k = 0; i + j + k <= n; ++k) {
                if (left[static_cast<std::size_t>(i)](j, k) != right[static_cast<std::size_t>(k)](i, j)) {
                    r.associativity = false;
                    break;
                }
            }
        }
    }
    return r;
}

AxiomReport verify_axioms(const GroupLaw &law)
{
    return verify_axioms(law.F);
}

} // namespace modparam
