#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <modparam/error.hpp>
#include <modparam/formal_group.hpp>
#include <modparam/lseries.hpp>
#include <modparam/numeric_eval.hpp>
#include <modparam/weierstrass.hpp>

namespace modparam::cli {

// ---------------------------------------------------------------------------
// Parsing

Rational parse_rational(std::string_view text)
{
    if (text.find('/') != std::string_view::npos) {
        return Rational::from_string(text);
    }
    const std::size_t dot = text.find('.');
    if (dot == std::string_view::npos) {
        return Rational::from_string(text);
    }
    // Decimal: sign? digits "." digits, at least one digit overall.
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    for (; pos < dot; ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
        }
        digits += text[pos];
    }
    std::size_t frac_len = 0;
    for (pos = dot + 1; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
        }
        digits += text[pos];
        ++frac_len;
    }
    if (digits.empty()) {
        throw ParseError("expected digits", dot);
    }
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

std::pair<std::string, std::string> parse_complex(std::string_view text)
{
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError("complex value must be written as re,im", text.size());
    }
    std::string re(text.substr(0, comma));
    std::string im(text.substr(comma + 1));
    try {
        parse_rational(re);
    } catch (const ParseError &e) {
        throw ParseError("bad real part: " + std::string(e.what()), e.position());
    }
    try {
        parse_rational(im);
    } catch (const ParseError &e) {
        throw ParseError("bad imaginary part: " + std::string(e.what()), comma + 1 + e.position());
    }
    return {re, im};
}

namespace {

int parse_int(const std::string &field, const std::string &text, int min_value)
{
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception &) {
        throw ParseError("--" + field + ": expected an integer, got '" + text + "'", 0);
    }
    if (used != text.size()) {
        throw ParseError("--" + field + ": expected an integer, got '" + text + "'", used);
    }
    if (value < min_value || value > 100'000'000) {
        throw DomainError("--" + field + " must be in [" + std::to_string(min_value) + ", 100000000]");
    }
    return static_cast<int>(value);
}

std::vector<int> parse_int_list(const std::string &field, const std::string &text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_int(field, item, 1));
    }
    if (out.empty()) {
        throw ParseError("--" + field + ": empty list", 0);
    }
    return out;
}

std::string get(const std::map<std::string, std::string> &fields, const std::string &key, const std::string &fallback)
{
    const auto it = fields.find(key);
    return it == fields.end() ? fallback : it->second;
}

} // namespace

std::string to_string(Command c)
{
    switch (c) {
        case Command::expand:
            return "expand";
        case Command::grouplaw:
            return "grouplaw";
        case Command::honda:
            return "honda";
        case Command::bernoulli:
            return "bernoulli";
        case Command::param:
            return "param";
        case Command::classical:
            return "classical";
    }
    return "unknown";
}

const std::vector<std::string> &fields_for(Command c)
{
    static const std::map<Command, std::vector<std::string>> table{
        {Command::expand, {"g2", "g3", "order", "what", "format"}},
        {Command::grouplaw, {"g2", "g3", "order", "law", "format"}},
        {Command::honda, {"g2", "g3", "pmax", "order", "format"}},
        {Command::bernoulli, {"g2", "g3", "order", "format"}},
        {Command::param, {"g2", "g3", "z", "order", "nmax", "wp-order", "precision", "step", "format"}},
        {Command::classical, {"order", "nmax", "s", "format"}},
    };
    return table.at(c);
}

RunConfig resolve(Command c, const std::map<std::string, std::string> &fields)
{
    const auto &allowed = fields_for(c);
    for (const auto &[key, value] : fields) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ParseError("field '" + key + "' is not accepted by command '" + to_string(c) + "'", 0);
        }
    }

    RunConfig cfg;
    cfg.command = c;
    const std::string format = get(fields, "format", "text");
    if (format == "text") {
        cfg.format = Format::text;
    } else if (format == "json") {
        cfg.format = Format::json;
    } else {
        throw ParseError("--format must be text or json", 0);
    }

    if (c != Command::classical) {
        cfg.g2 = parse_rational(get(fields, "g2", "0"));
        cfg.g3 = parse_rational(get(fields, "g3", "0"));
    }

    switch (c) {
        case Command::expand:
            cfg.order = parse_int("order", get(fields, "order", "10"), 1);
            cfg.what = get(fields, "what", "fe");
            if (cfg.what != "fe" && cfg.what != "fl" && cfg.what != "wp" && cfg.what != "wpp" && cfg.what != "s"
                && cfg.what != "an") {
                throw ParseError("--what must be one of fe, fl, wp, wpp, s, an", 0);
            }
            if ((cfg.what == "wp" || cfg.what == "wpp") && cfg.order < 2) {
                throw DomainError("--order must be at least 2 for wp expansions");
            }
            if (cfg.what == "s" && cfg.order < 3) {
                throw DomainError("--order must be at least 3 for the s expansion");
            }
            break;
        case Command::grouplaw:
            cfg.order = parse_int("order", get(fields, "order", "8"), 2);
            cfg.law = get(fields, "law", "both");
            if (cfg.law != "both" && cfg.law != "exp-log" && cfg.law != "bb") {
                throw ParseError("--law must be one of both, exp-log, bb", 0);
            }
            break;
        case Command::honda:
            cfg.pmax = parse_int("pmax", get(fields, "pmax", "50"), 2);
            if (cfg.pmax > max_counting_prime) {
                throw DomainError("--pmax must not exceed " + std::to_string(max_counting_prime));
            }
            cfg.order = parse_int("order", get(fields, "order", std::to_string(cfg.pmax)), 1);
            if (cfg.order < cfg.pmax) {
                throw DomainError("--order must be at least --pmax");
            }
            break;
        case Command::bernoulli:
            cfg.order = parse_int("order", get(fields, "order", "12"), 0);
            break;
        case Command::param: {
            cfg.order = parse_int("order", get(fields, "order", "50"), 1);
            cfg.nmax = parse_int("nmax", get(fields, "nmax", std::to_string(cfg.order)), 1);
            if (cfg.nmax > cfg.order) {
                throw DomainError("--nmax must not exceed --order");
            }
            cfg.wp_order = parse_int("wp-order", get(fields, "wp-order", "20"), 2);
            cfg.precision = parse_int("precision", get(fields, "precision", "53"), 1);
            if (cfg.precision != 53 && cfg.precision != 64 && cfg.precision != 113) {
                throw DomainError("--precision must be 53, 64 or 113 binary digits");
            }
            std::tie(cfg.z_re, cfg.z_im) = parse_complex(get(fields, "z", "0,1"));
            cfg.h = get(fields, "step", "1e-4");
            std::size_t used = 0;
            double h = 0.0;
            try {
                h = std::stod(cfg.h, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != cfg.h.size() || !(h > 0.0)) {
                throw ParseError("--step must be a positive decimal", used);
            }
            break;
        }
        case Command::classical:
            cfg.order = parse_int("order", get(fields, "order", "8"), 2);
            cfg.nmax = parse_int("nmax", get(fields, "nmax", "1000000"), 1);
            cfg.s_values = parse_int_list("s", get(fields, "s", "1,2"));
            break;
    }
    return cfg;
}

json config_to_json(const RunConfig &cfg)
{
    json j;
    j["command"] = to_string(cfg.command);
    const auto &allowed = fields_for(cfg.command);
    const auto has = [&](const char *k) { return std::find(allowed.begin(), allowed.end(), k) != allowed.end(); };
    if (has("g2")) {
        j["g2"] = cfg.g2.str();
        j["g3"] = cfg.g3.str();
    }
    if (has("z")) {
        j["z"] = cfg.z_re + "," + cfg.z_im;
    }
    if (has("order")) {
        j["order"] = cfg.order;
    }
    if (has("pmax")) {
        j["pmax"] = cfg.pmax;
    }
    if (has("nmax")) {
        j["nmax"] = cfg.nmax;
    }
    if (has("wp-order")) {
        j["wp-order"] = cfg.wp_order;
    }
    if (has("precision")) {
        j["precision"] = cfg.precision;
    }
    if (has("step")) {
        j["step"] = cfg.h;
    }
    if (has("what")) {
        j["what"] = cfg.what;
    }
    if (has("law")) {
        j["law"] = cfg.law;
    }
    if (has("s")) {
        j["s"] = cfg.s_values;
    }
    j["format"] = cfg.format == Format::json ? "json" : "text";
    return j;
}

// ---------------------------------------------------------------------------
// Serialization

json series_to_json(const UniSeries &f)
{
    json coeffs = json::array();
    for (const auto &c : f.coeffs()) {
        coeffs.push_back(c.str());
    }
    return json{{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

json laurent_to_json(const LaurentSeries &f)
{
    json j = series_to_json(f.body());
    json out;
    out["valuation"] = f.valuation();
    out["order"] = j["order"];
    out["coeffs"] = j["coeffs"];
    return out;
}

json biseries_to_json(const BiSeries &f)
{
    json terms = json::array();
    for (int d = 0; d <= f.order(); ++d) {
        for (int i = d; i >= 0; --i) {
            terms.push_back(json{{"i", i}, {"j", d - i}, {"c", f(i, d - i).str()}});
        }
    }
    return json{{"order", f.order()}, {"terms", std::move(terms)}};
}

namespace {

json rational_list(const std::vector<Rational> &v, std::size_t from = 0)
{
    json out = json::array();
    for (std::size_t k = from; k < v.size(); ++k) {
        out.push_back(v[k].str());
    }
    return out;
}

template <class Real>
json complex_to_json(const Complex<Real> &z)
{
    using std::imag;
    using std::real;
    return json{{"re", to_decimal<Real>(Real(real(z)))},
                {"im", to_decimal<Real>(Real(imag(z)))},
                {"precision", precision_bits<Real>()}};
}

std::string join(const std::vector<Rational> &v, std::size_t from = 0)
{
    std::string out;
    for (std::size_t k = from; k < v.size(); ++k) {
        if (k != from) {
            out += ' ';
        }
        out += v[k].str();
    }
    return out;
}

struct Report {
    json result;
    std::string text;
    bool ok = true;
};

Report run_expand(const RunConfig &cfg, const Curve &curve)
{
    Report r;
    std::ostringstream text;
    if (cfg.what == "wp" || cfg.what == "wpp") {
        const WpExpansion wp = wp_coefficients(curve, cfg.order);
        const LaurentSeries series = cfg.what == "wp" ? wp_laurent(wp) : wp_prime_laurent(wp);
        r.result["what"] = cfg.what;
        r.result["series"] = laurent_to_json(series);
        r.result["c"] = rational_list(wp.c, 2);
        text << cfg.what << ": valuation " << series.valuation() << ", coefficients from z^" << series.valuation()
             << ": " << join(std::vector<Rational>(series.body().coeffs().begin(), series.body().coeffs().end()))
             << "\n";
        text << "c_k (k >= 2): " << join(wp.c, 2) << "\n";
    } else if (cfg.what == "s") {
        const SCoordinate s = s_expansion(curve, cfg.order);
        r.result["what"] = "s";
        r.result["series"] = series_to_json(s.s);
        text << "s(t): " << join(std::vector<Rational>(s.s.coeffs().begin(), s.s.coeffs().end())) << "\n";
    } else {
        const FormalExp fe = formal_exponential(curve, cfg.order);
        r.result["what"] = cfg.what;
        if (cfg.what == "fe") {
            r.result["series"] = series_to_json(fe.series);
            text << "f_E(T): "
                 << join(std::vector<Rational>(fe.series.coeffs().begin(), fe.series.coeffs().end())) << "\n";
        } else {
            const FormalLog fl = formal_logarithm(fe);
            if (cfg.what == "fl") {
                r.result["series"] = series_to_json(fl.series);
                text << "f_L(T): "
                     << join(std::vector<Rational>(fl.series.coeffs().begin(), fl.series.coeffs().end())) << "\n";
            } else {
                r.result["an"] = rational_list(fl.an, 1);
                text << "a(n), n = 1.." << cfg.order << ": " << join(fl.an, 1) << "\n";
            }
        }
    }
    r.text = text.str();
    return r;
}

json axioms_to_json(const AxiomReport &a)
{
    return json{{"neutrality", a.neutrality}, {"commutativity", a.commutativity}, {"associativity", a.associativity}};
}

Report run_grouplaw(const RunConfig &cfg, const Curve &curve)
{
    Report r;
    std::ostringstream text;
    std::vector<GroupLaw> laws;
    if (cfg.law != "bb") {
        const FormalExp fe = formal_exponential(curve, cfg.order);
        const FormalLog fl = formal_logarithm(fe);
        laws.push_back(group_law_exp_log(fe, fl, cfg.order));
    }
    if (cfg.law != "exp-log") {
        laws.push_back(group_law_bb(curve, cfg.order));
    }
    r.result["laws"] = json::array();
    for (const auto &law : laws) {
        const AxiomReport ax = verify_axioms(law);
        r.ok = r.ok && ax.all();
        r.result["laws"].push_back(json{{"provenance", to_string(law.provenance)},
                                        {"law", biseries_to_json(law.F)},
                                        {"axioms", axioms_to_json(ax)}});
        text << to_string(law.provenance) << ": neutrality " << (ax.neutrality ? "ok" : "FAIL") << ", commutativity "
             << (ax.commutativity ? "ok" : "FAIL") << ", associativity " << (ax.associativity ? "ok" : "FAIL")
             << "\n";
        for (int d = 0; d <= law.F.order(); ++d) {
            for (int i = d; i >= 0; --i) {
                if (!law.F(i, d - i).is_zero()) {
                    text << "  [" << i << "," << d - i << "] " << law.F(i, d - i) << "\n";
                }
            }
        }
    }
    if (laws.size() == 2) {
        const bool agree = laws[0].F == laws[1].F;
        r.ok = r.ok && agree;
        r.result["constructions_agree"] = agree;
        text << "constructions agree: " << (agree ? "yes" : "NO") << "\n";
    }
    r.text = text.str();
    return r;
}

Report run_honda(const RunConfig &cfg, const Curve &curve)
{
    Report r;
    std::ostringstream text;
    const FormalLog fl = formal_logarithm(formal_exponential(curve, cfg.order));
    const HondaReport rep = honda_check(curve, cfg.pmax, fl);
    r.result["entries"] = json::array();
    for (const auto &e : rep.entries) {
        json j{{"p", e.p}, {"a_p_formal", e.a_formal.str()}};
        if (e.skipped_reason) {
            j["skipped_reason"] = *e.skipped_reason;
            text << "p = " << e.p << ": skipped (" << *e.skipped_reason << ")\n";
        } else {
            j["a_p_trace"] = e.trace;
            j["congruent"] = e.congruent;
            j["exact"] = e.exact;
            text << "p = " << e.p << ": a(p) = " << e.a_formal << ", trace = " << e.trace << ", "
                 << (e.congruent ? "congruent" : "NOT congruent") << (e.exact ? " (equal)" : "") << "\n";
        }
        r.result["entries"].push_back(std::move(j));
    }
    r.ok = rep.all_congruent();
    r.result["all_congruent"] = r.ok;
    r.result["checked"] = rep.checked_count();
    text << rep.checked_count() << " primes checked, " << (r.ok ? "all congruent" : "FAILURES present") << "\n";
    r.text = text.str();
    return r;
}

Report run_bernoulli(const RunConfig &cfg, const Curve &curve)
{
    Report r;
    std::ostringstream text;
    const FormalExp fe = formal_exponential(curve, cfg.order + 1);
    const std::vector<Rational> bhat = universal_bernoulli(fe, cfg.order);
    json bh = json::array();
    for (int k = 4; k <= cfg.order; ++k) {
        bh.push_back(json{{"k", k}, {"value", bernoulli_hurwitz(curve, k).str()}});
    }
    r.result["universal_bernoulli"] = rational_list(bhat);
    r.result["bernoulli_hurwitz"] = std::move(bh);
    text << "universal Bernoulli B^_k, k = 0.." << cfg.order << ": " << join(bhat) << "\n";
    text << "Bernoulli-Hurwitz BH_k, k = 4.." << cfg.order << ":";
    for (int k = 4; k <= cfg.order; ++k) {
        text << " " << bernoulli_hurwitz(curve, k);
    }
    text << "\n";
    r.text = text.str();
    return r;
}

/// Scaled residual above this fails the param command.
constexpr double param_scaled_residual_limit = 1e-9;

template <class Real>
Report run_param_with(const RunConfig &cfg, const Curve &curve)
{
    Report r;
    std::ostringstream text;
    const FormalLog fl = formal_logarithm(formal_exponential(curve, cfg.order));
    const Parametrization<Real> map(curve, fl, cfg.nmax, cfg.wp_order);
    const Complex<Real> z(from_decimal<Real>(cfg.z_re), from_decimal<Real>(cfg.z_im));
    const ParamResult<Real> p = map.point(z);
    const DerivativeReport<Real> d = map.derivative_check(z, from_decimal<Real>(cfg.h));

    r.result["z"] = complex_to_json<Real>(p.z);
    r.result["q"] = complex_to_json<Real>(p.q);
    r.result["F"] = complex_to_json<Real>(p.F);
    r.result["alpha"] = complex_to_json<Real>(p.alpha);
    r.result["beta"] = complex_to_json<Real>(p.beta);
    r.result["residual"] = to_decimal<Real>(p.residual);
    r.result["scaled_residual"] = to_decimal<Real>(p.scaled_residual);
    r.result["truncation_estimate"] = to_decimal<Real>(p.truncation_estimate);
    r.result["wp_reliability_radius"] = to_decimal<Real>(map.wp().reliability_radius());
    r.result["derivative_check"] = json{{"finite_difference", complex_to_json<Real>(d.finite_difference)},
                                        {"chain_rule", complex_to_json<Real>(d.chain_rule)},
                                        {"relative_deviation", to_decimal<Real>(d.relative_deviation)}};
    r.ok = p.scaled_residual <= Real(param_scaled_residual_limit);
    r.result["ok"] = r.ok;

    using std::imag;
    using std::real;
    const auto show = [](const Complex<Real> &v) {
        return to_decimal<Real>(Real(real(v))) + (imag(v) < Real(0) ? " - " : " + ")
               + to_decimal<Real>(Real(imag(v) < Real(0) ? Real(-imag(v)) : Real(imag(v)))) + "i";
    };
    text << "z        = " << show(p.z) << "\n"
         << "q        = " << show(p.q) << "\n"
         << "F(z)     = " << show(p.F) << "\n"
         << "alpha(z) = " << show(p.alpha) << "\n"
         << "beta(z)  = " << show(p.beta) << "\n"
         << "residual = " << to_decimal<Real>(p.residual) << " (scaled " << to_decimal<Real>(p.scaled_residual)
         << ")\n"
         << "F truncation estimate = " << to_decimal<Real>(p.truncation_estimate) << "\n"
         << "derivative check relative deviation = " << to_decimal<Real>(d.relative_deviation) << "\n";
    r.text = text.str();
    return r;
}

Report run_classical(const RunConfig &cfg)
{
    Report r;
    std::ostringstream text;
    const ClassicalReport rep = classical_demo(cfg.order, cfg.nmax, cfg.s_values);
    r.ok = rep.coefficients_match;
    json samples = json::array();
    for (const auto &s : rep.samples) {
        // Alternating series: the error is at most the first omitted term.
        const double bound = 1.0 / std::pow(static_cast<double>(rep.nmax + 1), s.s) + 1e-15;
        const bool within = s.abs_error <= bound;
        r.ok = r.ok && within;
        std::ostringstream ps;
        ps.precision(17);
        ps << s.partial_sum;
        std::ostringstream rs;
        rs.precision(17);
        rs << s.reference;
        std::ostringstream es;
        es.precision(6);
        es << s.abs_error;
        samples.push_back(json{{"s", s.s},
                               {"partial_sum", ps.str()},
                               {"reference", rs.str()},
                               {"abs_error", es.str()},
                               {"within_alternating_bound", within}});
        text << "s = " << s.s << ": partial sum " << ps.str() << ", (1 - 2^(1-s)) zeta(s) = " << rs.str()
             << ", error " << es.str() << "\n";
    }
    r.result["an"] = rational_list(rep.an, 1);
    r.result["coefficients_match_log1p"] = rep.coefficients_match;
    r.result["bernoulli"] = rational_list(rep.bernoulli);
    r.result["eta"] = std::move(samples);
    text << "reverted e^T - 1 to order " << rep.reversion_order << ": a(n) = (-1)^(n-1) "
         << (rep.coefficients_match ? "confirmed" : "NOT confirmed") << "\n"
         << "a(n): " << join(rep.an, 1) << "\n"
         << "B_k: " << join(rep.bernoulli) << "\n";
    r.text = text.str();
    return r;
}

} // namespace

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    Report report;
    try {
        if (cfg.command == Command::classical) {
            report = run_classical(cfg);
        } else {
            const Curve curve(cfg.g2, cfg.g3);
            switch (cfg.command) {
                case Command::expand:
                    report = run_expand(cfg, curve);
                    break;
                case Command::grouplaw:
                    report = run_grouplaw(cfg, curve);
                    break;
                case Command::honda:
                    report = run_honda(cfg, curve);
                    break;
                case Command::bernoulli:
                    report = run_bernoulli(cfg, curve);
                    break;
                case Command::param:
                    if (cfg.precision == 64) {
                        report = run_param_with<long double>(cfg, curve);
                    } else if (cfg.precision == 113) {
                        report = run_param_with<quad>(cfg, curve);
                    } else {
                        report = run_param_with<double>(cfg, curve);
                    }
                    break;
                case Command::classical:
                    break;
            }
        }
    } catch (const OutOfRadius &e) {
        err << "error: " << e.what() << "\n";
        return exit_check_failed;
    } catch (const PoleError &e) {
        err << "error: " << e.what() << "\n";
        return exit_check_failed;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (cfg.format == Format::json) {
        json doc;
        doc["config"] = config_to_json(cfg);
        doc["result"] = std::move(report.result);
        out << doc.dump(2) << "\n";
    } else {
        out << report.text;
    }
    if (!report.ok) {
        err << "check failed\n";
        return exit_check_failed;
    }
    return exit_ok;
}

namespace {

std::string json_value_to_text(const json &v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string out;
        for (const auto &item : v) {
            if (!out.empty()) {
                out += ',';
            }
            out += json_value_to_text(item);
        }
        return out;
    }
    return v.dump();
}

} // namespace

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Formal groups, L-series coefficients and modular parametrizations of y^2 = 4x^3 - g2 x - g3",
                 "modparam"};
    app.require_subcommand(1);

    struct Sub {
        Command command;
        CLI::App *app;
        std::map<std::string, std::string> values;
        std::map<std::string, CLI::Option *> options;
        std::string config_path;
    };
    const std::vector<std::pair<Command, std::string>> commands{
        {Command::expand, "Exact series: f_E, f_L, wp, wp', s(t) or a(n)"},
        {Command::grouplaw, "Formal group law by both constructions, with axiom checks"},
        {Command::honda, "Congruence a(p) = p + 1 - #E(F_p) mod p for primes up to pmax"},
        {Command::bernoulli, "Universal Bernoulli and Bernoulli-Hurwitz numbers"},
        {Command::param, "Numerical point (alpha(z), beta(z)) of the modular parametrization"},
        {Command::classical, "The e^T - 1 degeneration and partial sums of eta(s)"},
    };
    std::vector<std::unique_ptr<Sub>> subs;
    for (const auto &[command, description] : commands) {
        auto sub = std::make_unique<Sub>();
        sub->command = command;
        sub->app = app.add_subcommand(to_string(command), description);
        for (const auto &field : fields_for(command)) {
            sub->options[field] = sub->app->add_option("--" + field, sub->values[field]);
        }
        sub->app->add_option("--config", sub->config_path, "JSON file with the same field names as the flags");
        subs.push_back(std::move(sub));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    for (const auto &sub : subs) {
        if (!sub->app->parsed()) {
            continue;
        }
        std::map<std::string, std::string> fields;
        for (const auto &[name, opt] : sub->options) {
            if (opt->count() > 0) {
                fields[name] = sub->values[name];
            }
        }
        try {
            if (!sub->config_path.empty()) {
                std::ifstream in(sub->config_path);
                if (!in) {
                    err << "error: cannot open config file " << sub->config_path << "\n";
                    return exit_usage;
                }
                const json cfg = json::parse(in);
                if (!cfg.is_object()) {
                    err << "error: config file must hold a JSON object\n";
                    return exit_usage;
                }
                for (const auto &[key, value] : cfg.items()) {
                    if (key == "command") {
                        if (!value.is_string() || value.get<std::string>() != to_string(sub->command)) {
                            err << "error: config file is for command " << value.dump() << "\n";
                            return exit_usage;
                        }
                        continue;
                    }
                    // Flags given on the command line win over the file.
                    fields.try_emplace(key, json_value_to_text(value));
                }
            }
            return run(resolve(sub->command, fields), out, err);
        } catch (const json::exception &e) {
            err << "error: config file: " << e.what() << "\n";
            return exit_usage;
        } catch (const Error &e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
    }
    return exit_usage;
}

} // namespace modparam::cli
