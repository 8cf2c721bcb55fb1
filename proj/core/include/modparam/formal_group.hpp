#pragma once

#include <optional>
#include <string>
#include <vector>

#include <modparam/series.hpp>
#include <modparam/weierstrass.hpp>

namespace modparam {

/// f_E(T) = -2 wp(T) / wp'(T), an odd series T + O(T^5).
struct FormalExp {
    Curve curve;
    UniSeries series;
};

/// f_L = reverse(f_E) = sum a(n)/n T^n.
struct FormalLog {
    std::optional<Curve> curve; // empty when built from a bare series
    UniSeries series;
    std::vector<Rational> an; // an[n] = n * [T^n] f_L, an[0] = 0

    int order() const { return series.order(); }
    const Rational &a(int n) const { return an.at(static_cast<std::size_t>(n)); }
};

/// s = -2/y expanded in t = -2x/y along the curve.
struct SCoordinate {
    Curve curve;
    UniSeries s;
};

enum class LawProvenance { exp_log, buchstaber_bunkova };

std::string to_string(LawProvenance p);

struct GroupLaw {
    Curve curve;
    BiSeries F;
    LawProvenance provenance;

    int order() const { return F.order(); }
};

struct AxiomReport {
    bool neutrality = false;
    bool commutativity = false;
    bool associativity = false;

    bool all() const { return neutrality && commutativity && associativity; }
};

/// f_E to order N (N >= 1).
FormalExp formal_exponential(const Curve &curve, int N);

/// Formal logarithm by Lagrange inversion of f_E, with a(n) extracted.
FormalLog formal_logarithm(const FormalExp &fe);
/// Same, for an arbitrary series T + O(T^2) not tied to a curve (e.g. the
/// classical e^T - 1).
FormalLog formal_logarithm_of(const UniSeries &f);

/// B^_k = k! [T^k] (T / f) for 0 <= k <= N. Requires N < f.order().
std::vector<Rational> universal_bernoulli(const UniSeries &f, int N);
std::vector<Rational> universal_bernoulli(const FormalExp &fe, int N);

/// Solution of s = t^3 - (g2/4) t s^2 - (g3/4) s^3 to order N (N >= 3), by
/// fixed-point iteration from s = t^3.
SCoordinate s_expansion(const Curve &curve, int N);

/// F(t1, t2) = f_E(f_L(t1) + f_L(t2)) to total degree N.
GroupLaw group_law_exp_log(const FormalExp &fe, const FormalLog &fl, int N);

/// F = t1 + t2 - b m (2 g2 + 3 g3 m) / (4 - g2 m^2 - g3 m^3) with
/// m = (s1 - s2)/(t1 - t2) and b = s(t2) - t2 m, to total degree N.
GroupLaw group_law_bb(const Curve &curve, int N);

/// Coefficient-exact check of F(t,0) = t, F(t1,t2) = F(t2,t1) and
/// F(t1,F(t2,t3)) = F(F(t1,t2),t3) up to the law's total degree.
AxiomReport verify_axioms(const GroupLaw &law);
AxiomReport verify_axioms(const BiSeries &F);

} // namespace modparam
