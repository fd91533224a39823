#pragma once

#include <chpf/error.hpp>
#include <chpf/exact_value.hpp>
#include <chpf/rational.hpp>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace chpf {

/// Fixed 110-decimal-digit binary float; enough headroom for 50 requested
/// digits plus the Stirling shift products.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<110>,
                                           boost::multiprecision::et_off>;

struct NumericOptions {
    int max_digits = 50;
    /// Number of Bernoulli terms kept in the Stirling series.
    int series_depth = 40;
    /// Largest argument shift the evaluator may use to reach the target accuracy.
    long max_shift = 100000;
};

struct NumericResult {
    std::string decimal; ///< rounded half-even to the requested significant digits
    std::string error_bound; ///< e.g. "1e-11"
    Real value;
    Real bound;
};

inline Real to_real(const Rational& r)
{
    Real n(r.num().get_str()), d(r.den().get_str());
    return n / d;
}

/// Parses a plain decimal such as "1.25" or "3e-4".
inline Real parse_real(const std::string& text)
{
    try {
        return Real(text);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Config, "not a decimal number: '" + text + "'");
    }
}

namespace detail {

/// B_0 .. B_n from sum_{k=0}^{m} C(m+1, k) B_k = 0.
inline std::vector<Rational> bernoulli_numbers(int n)
{
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = Rational(1);
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        mpz_class binom = 1; // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            acc += Rational(binom) * b[static_cast<std::size_t>(k)];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
    }
    return b;
}

inline const std::vector<Rational>& bernoulli_table()
{
    static const std::vector<Rational> table = bernoulli_numbers(202);
    return table;
}

struct LogGamma {
    Real log_abs;
    int sign = 1;
    Real truncation; ///< rigorous bound on the dropped Stirling tail
};

/// log|Gamma(x)| for any non-pole rational x. The argument is shifted up to
/// z = x + s with the recurrence, then
///   log Gamma(z) = (z - 1/2) log z - z + log(2 pi)/2 + sum_{k=1}^{K} B_2k / (2k (2k-1) z^(2k-1)),
/// whose tail is bounded in magnitude by the first omitted term for real z > 0.
inline LogGamma log_gamma(const Rational& x, int target_digits, const NumericOptions& opt)
{
    if (x.is_integer() && x.sign() <= 0)
        throw Error(ErrorKind::GammaPole, "Gamma(" + x.str() + ") is a pole");
    const int depth = opt.series_depth;
    if (2 * depth + 2 >= static_cast<int>(bernoulli_table().size()))
        throw Error(ErrorKind::PrecisionUnreachable, "series depth above the Bernoulli table");
    const Rational& b_next = bernoulli_table()[static_cast<std::size_t>(2 * depth + 2)];

    // smallest z with |B_{2K+2}| / ((2K+2)(2K+1) z^{2K+1}) < 10^{-(digits+20)}
    const double log10_b = std::log10(std::fabs(b_next.to_double()));
    const double log10_tail = log10_b - std::log10((2.0 * depth + 2) * (2.0 * depth + 1)) +
                              (target_digits + 20);
    const double z_min = std::pow(10.0, log10_tail / (2.0 * depth + 1));
    if (!std::isfinite(z_min) || z_min > static_cast<double>(opt.max_shift))
        throw Error(ErrorKind::PrecisionUnreachable,
                    "Stirling series depth " + std::to_string(depth) + " cannot reach " +
                        std::to_string(target_digits) + " digits within the shift limit");

    Rational z = x;
    Real log_product(0);
    int sign = 1;
    const Rational zmin_r(static_cast<long>(std::ceil(z_min)) + 1);
    while (z < zmin_r) {
        Real zr = to_real(z);
        if (zr < 0) {
            sign = -sign;
            zr = -zr;
        }
        log_product += log(zr);
        z += Rational(1);
    }

    const Real zr = to_real(z);
    Real two_pi = 2 * boost::math::constants::pi<Real>();
    Real result = (zr - Real(0.5)) * log(zr) - zr + log(two_pi) / 2;
    Real zpow = zr;
    const Real z2 = zr * zr;
    for (int k = 1; k <= depth; ++k) {
        const Rational& b = bernoulli_table()[static_cast<std::size_t>(2 * k)];
        result += to_real(b) / (Real(2 * k) * Real(2 * k - 1) * zpow);
        zpow *= z2;
    }
    LogGamma out;
    out.log_abs = result - log_product;
    out.sign = sign;
    out.truncation = abs(to_real(b_next)) / (Real(2 * depth + 2) * Real(2 * depth + 1) * zpow);
    return out;
}

inline std::string format_decimal(const Real& v, int digits)
{
    if (v == 0) return "0";
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), v.backend().data(),
                             MPFR_RNDN);
    std::string s(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!s.empty() && s[0] == '-') {
        sign = "-";
        s.erase(0, 1);
    }
    // value = 0.s * 10^exp10
    const long point = static_cast<long>(exp10);
    std::string out;
    if (point > 0 && point <= 30) {
        if (static_cast<std::size_t>(point) >= s.size()) {
            out = s + std::string(static_cast<std::size_t>(point) - s.size(), '0');
        } else {
            out = s.substr(0, static_cast<std::size_t>(point)) + "." + s.substr(static_cast<std::size_t>(point));
        }
    } else if (point <= 0 && point > -6) {
        out = "0." + std::string(static_cast<std::size_t>(-point), '0') + s;
    } else {
        out = s.substr(0, 1) + (s.size() > 1 ? "." + s.substr(1) : "") + "e" + std::to_string(point - 1);
    }
    return sign + out;
}

inline Real power_of_ten(long e)
{
    return pow(Real(10), Real(e));
}

} // namespace detail

/// Evaluates a factor list (normalized or not) to high precision. The
/// returned interval [value - bound, value + bound] contains the true value.
inline NumericResult numeric_eval(const FactorList& f, int digits,
                                  const std::map<std::string, std::string>& kappa_values = {},
                                  const NumericOptions& opt = {})
{
    if (digits <= 0 || digits > opt.max_digits)
        throw Error(ErrorKind::PrecisionUnreachable,
                    "requested " + std::to_string(digits) + " digits, maximum is " +
                        std::to_string(opt.max_digits));
    NumericResult out;
    if (f.coeff.is_zero()) {
        out.decimal = "0";
        out.error_bound = "0";
        out.value = 0;
        out.bound = 0;
        return out;
    }

    Real log_abs(0), tail(0);
    int sign = f.coeff.sign();
    log_abs += log(abs(to_real(f.coeff)));
    log_abs += to_real(f.two_exp) * log(Real(2));
    log_abs += Real(f.pi_half_exp) / 2 * log(boost::math::constants::pi<Real>());
    for (const auto& [arg, e] : f.gammas) {
        if (e == 0) continue;
        auto lg = detail::log_gamma(arg, digits, opt);
        log_abs += Real(e) * lg.log_abs;
        tail += Real(std::labs(e)) * lg.truncation;
        if (lg.sign < 0 && (e % 2 != 0)) sign = -sign;
    }
    for (const auto& [sym, g] : f.kappa) {
        if (g == 0) continue;
        auto it = kappa_values.find(sym);
        if (it == kappa_values.end())
            throw Error(ErrorKind::MissingKappa, "no value supplied for kappa[" + sym + "]");
        Real kv = parse_real(it->second);
        if (kv <= 0) throw Error(ErrorKind::Config, "kappa values must be positive");
        log_abs += Real(g) * log(kv);
    }

    Real value = exp(log_abs);
    if (sign < 0) value = -value;
    // relative error from the dropped tails plus arithmetic rounding
    Real internal = abs(value) * (tail * 2 + detail::power_of_ten(-(digits + 25)));

    const long e10 = static_cast<long>(floor(log10(abs(value))).convert_to<double>());
    Real ulp = detail::power_of_ten(e10 - (digits - 1));
    out.decimal = detail::format_decimal(value, digits);
    out.value = value;
    if (internal > ulp / 4)
        throw Error(ErrorKind::PrecisionUnreachable, "internal error exceeds the requested precision");
    out.bound = ulp;
    out.error_bound = "1e" + std::to_string(e10 - (digits - 1));
    return out;
}

inline NumericResult numeric_eval(const ExactValue& v, int digits,
                                  const std::map<std::string, std::string>& kappa_values = {},
                                  const NumericOptions& opt = {})
{
    return numeric_eval(v.factors(), digits, kappa_values, opt);
}

/// Convenience: high-precision value only.
inline Real numeric_value(const ExactValue& v, const std::map<std::string, std::string>& kappa_values = {},
                          int digits = 45)
{
    return numeric_eval(v, digits, kappa_values).value;
}

} // namespace chpf
