#pragma once

#include <chpf/error.hpp>
#include <chpf/rational.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace chpf {

/// An unnormalized product
///   coeff * 2^two_exp * pi^(pi_half_exp/2) * prod Gamma(arg)^exp * prod kappa_s^grade.
/// Arguments may be anywhere except the poles; this is the input of normalize().
struct FactorList {
    Rational coeff{1};
    Rational two_exp{0};
    long pi_half_exp = 0;
    std::vector<std::pair<Rational, long>> gammas;
    std::map<std::string, long> kappa;
};

/// Exact scalar in canonical form. Invariants (established by normalize()):
///   - every Gamma argument lies in (0, 1) and is not 1/2,
///   - two_exp lies in [0, 1) (the integer part lives in coeff),
///   - no zero exponents are stored,
///   - coeff == 0 forces every other field to its neutral value.
class ExactValue {
public:
    ExactValue() = default;
    ExactValue(const Rational& c) : coeff_(c) {}
    ExactValue(int c) : coeff_(c) {}

    static ExactValue gamma(const Rational& arg, long exp = 1);
    /// pi^(p/2)
    static ExactValue pi_half(long p);
    static ExactValue sqrt_pi() { return pi_half(1); }
    static ExactValue two_pow(const Rational& e);
    static ExactValue kappa(const std::string& symbol, long grade = 1);

    const Rational& coeff() const { return coeff_; }
    const Rational& two_exp() const { return two_exp_; }
    long pi_half_exp() const { return pi_half_exp_; }
    const std::map<Rational, long>& gammas() const { return gammas_; }
    const std::map<std::string, long>& kappa_grades() const { return kappa_; }

    long kappa_grade() const
    {
        long g = 0;
        for (const auto& [sym, e] : kappa_) g += e;
        return g;
    }

    bool is_zero() const { return coeff_.is_zero(); }

    /// True when the value is a plain rational number.
    bool is_rational() const
    {
        return gammas_.empty() && pi_half_exp_ == 0 && two_exp_.is_zero() && kappa_.empty();
    }

    /// Same transcendental part; such values add by adding coefficients.
    bool same_monomial(const ExactValue& o) const
    {
        return two_exp_ == o.two_exp_ && pi_half_exp_ == o.pi_half_exp_ && gammas_ == o.gammas_ &&
               kappa_ == o.kappa_;
    }

    FactorList factors() const
    {
        FactorList f;
        f.coeff = coeff_;
        f.two_exp = two_exp_;
        f.pi_half_exp = pi_half_exp_;
        for (const auto& g : gammas_) f.gammas.push_back(g);
        f.kappa = kappa_;
        return f;
    }

    ExactValue pow(long e) const;

    ExactValue operator-() const
    {
        ExactValue r = *this;
        r.coeff_ = -r.coeff_;
        return r;
    }

    friend ExactValue operator*(const ExactValue& a, const ExactValue& b);
    friend ExactValue operator/(const ExactValue& a, const ExactValue& b);
    friend ExactValue operator+(const ExactValue& a, const ExactValue& b);
    friend ExactValue operator-(const ExactValue& a, const ExactValue& b) { return a + (-b); }

    ExactValue& operator*=(const ExactValue& o) { return *this = *this * o; }
    ExactValue& operator/=(const ExactValue& o) { return *this = *this / o; }
    ExactValue& operator+=(const ExactValue& o) { return *this = *this + o; }
    ExactValue& operator-=(const ExactValue& o) { return *this = *this - o; }

    friend bool operator==(const ExactValue& a, const ExactValue& b)
    {
        return a.coeff_ == b.coeff_ && a.same_monomial(b);
    }

    /// Human-readable form, e.g. "3/4 * pi^(1/2) * Gamma(1/3)^2".
    std::string str() const;

    friend ExactValue normalize(const FactorList& f);

private:
    Rational coeff_{0};
    Rational two_exp_{0};
    long pi_half_exp_ = 0;
    std::map<Rational, long> gammas_;
    std::map<std::string, long> kappa_;
};

inline bool is_zero(const ExactValue& v) { return v.is_zero(); }

namespace detail {

/// Gamma(x) = multiplier * Gamma(reduced) with reduced in (0, 1].
inline std::pair<Rational, Rational> shift_gamma(const Rational& x)
{
    if (x.is_integer() && x.sign() <= 0)
        throw Error(ErrorKind::GammaPole, "Gamma(" + x.str() + ") is a pole");
    Rational reduced = x, mult(1);
    if (x > Rational(1)) {
        mpz_class n = x.ceil() - 1;
        reduced = x - Rational(n);
        for (Rational k = reduced; k < x; k += Rational(1)) mult *= k;
    } else if (x.sign() <= 0) {
        reduced = frac(x);
        for (Rational k = x; k < reduced; k += Rational(1)) mult /= k;
    }
    return {reduced, mult};
}

} // namespace detail

/// ev_normalize: shift every Gamma argument into (0, 1] by Gamma(x+1) = x Gamma(x),
/// then drop Gamma(1) and rewrite Gamma(1/2) as pi^(1/2).
inline ExactValue normalize(const FactorList& f)
{
    ExactValue v;
    Rational coeff = f.coeff;
    long pi_half = f.pi_half_exp;
    std::map<Rational, long> gammas;
    for (const auto& [arg, e] : f.gammas) {
        if (e == 0) continue;
        auto [reduced, mult] = detail::shift_gamma(arg);
        coeff *= mult.pow(e);
        if (reduced == Rational(1)) continue;
        if (reduced == Rational(1, 2)) {
            pi_half += e;
            continue;
        }
        gammas[reduced] += e;
    }
    if (coeff.is_zero()) return v;

    Rational two = f.two_exp;
    mpz_class whole = two.floor();
    if (whole != 0) {
        coeff *= Rational(2).pow(whole.get_si());
        two -= Rational(whole);
    }

    std::erase_if(gammas, [](const auto& kv) { return kv.second == 0; });
    std::map<std::string, long> kappa = f.kappa;
    std::erase_if(kappa, [](const auto& kv) { return kv.second == 0; });

    v.coeff_ = coeff;
    v.two_exp_ = two;
    v.pi_half_exp_ = pi_half;
    v.gammas_ = std::move(gammas);
    v.kappa_ = std::move(kappa);
    return v;
}

inline ExactValue ExactValue::gamma(const Rational& arg, long exp)
{
    FactorList f;
    f.gammas.emplace_back(arg, exp);
    return normalize(f);
}

inline ExactValue ExactValue::pi_half(long p)
{
    FactorList f;
    f.pi_half_exp = p;
    return normalize(f);
}

inline ExactValue ExactValue::two_pow(const Rational& e)
{
    FactorList f;
    f.two_exp = e;
    return normalize(f);
}

inline ExactValue ExactValue::kappa(const std::string& symbol, long grade)
{
    FactorList f;
    f.kappa[symbol] = grade;
    return normalize(f);
}

inline ExactValue operator*(const ExactValue& a, const ExactValue& b)
{
    if (a.is_zero() || b.is_zero()) return ExactValue();
    FactorList f = a.factors();
    f.coeff *= b.coeff_;
    f.two_exp += b.two_exp_;
    f.pi_half_exp += b.pi_half_exp_;
    for (const auto& g : b.gammas_) f.gammas.push_back(g);
    for (const auto& [sym, e] : b.kappa_) f.kappa[sym] += e;
    return normalize(f);
}

inline ExactValue ExactValue::pow(long e) const
{
    if (e == 0) return ExactValue(1);
    if (is_zero()) {
        if (e < 0) throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
        return ExactValue();
    }
    FactorList f;
    f.coeff = coeff_.pow(e);
    f.two_exp = two_exp_ * Rational(e);
    f.pi_half_exp = pi_half_exp_ * e;
    for (const auto& [arg, x] : gammas_) f.gammas.emplace_back(arg, x * e);
    for (const auto& [sym, g] : kappa_) f.kappa[sym] = g * e;
    return normalize(f);
}

inline ExactValue operator/(const ExactValue& a, const ExactValue& b)
{
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division of " + a.str() + " by zero");
    return a * b.pow(-1);
}

inline ExactValue operator+(const ExactValue& a, const ExactValue& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.same_monomial(b))
        throw Error(ErrorKind::InhomogeneousSum, a.str() + " + " + b.str());
    Rational c = a.coeff_ + b.coeff_;
    if (c.is_zero()) return ExactValue();
    ExactValue r = a;
    r.coeff_ = c;
    return r;
}

inline std::string ExactValue::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    os << coeff_;
    if (!two_exp_.is_zero()) os << " * 2^(" << two_exp_ << ")";
    if (pi_half_exp_ != 0) {
        if (pi_half_exp_ == 2)
            os << " * pi";
        else if (pi_half_exp_ % 2 == 0)
            os << " * pi^" << (pi_half_exp_ / 2);
        else
            os << " * pi^(" << pi_half_exp_ << "/2)";
    }
    for (const auto& [arg, e] : gammas_) {
        os << " * Gamma(" << arg << ")";
        if (e != 1) os << "^" << e;
    }
    for (const auto& [sym, g] : kappa_) {
        os << " * kappa[" << sym << "]";
        if (g != 1) os << "^" << g;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const ExactValue& v) { return os << v.str(); }

enum class Combine { Mul, Div, Add };

/// ev_combine
inline ExactValue combine(const ExactValue& x, const ExactValue& y, Combine mode)
{
    switch (mode) {
    case Combine::Mul: return x * y;
    case Combine::Div: return x / y;
    case Combine::Add: return x + y;
    }
    return x;
}

namespace detail {

inline long gamma_measure(const ExactValue& v)
{
    long m = 0;
    for (const auto& [arg, e] : v.gammas()) m += std::labs(e);
    return m;
}

/// Gamma(w) Gamma(w+1/2) 2^(2w-1) pi^(-1/2) / Gamma(2w), which equals 1.
inline ExactValue duplication_unit(const Rational& w)
{
    FactorList f;
    f.gammas = {{w, 1}, {w + Rational(1, 2), 1}, {w * Rational(2), -1}};
    f.two_exp = Rational(2) * w - Rational(1);
    f.pi_half_exp = -1;
    return normalize(f);
}

} // namespace detail

/// ev_ratio: canonical x / y followed by greedy Legendre-duplication rewriting
/// that strictly lowers the total |exponent| of the Gamma factors. Each round
/// applies the best available duplication unit; candidates are scanned in
/// increasing order of the half-argument w.
inline ExactValue ratio(const ExactValue& x, const ExactValue& y)
{
    ExactValue r = x / y;
    const Rational half(1, 2);
    for (;;) {
        std::vector<Rational> candidates;
        for (const auto& [arg, e] : r.gammas()) {
            if (arg < half) candidates.push_back(arg);
            if (arg > half) candidates.push_back(arg - half);
            candidates.push_back(arg / Rational(2));
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        // take the candidate with the largest drop; ties go to the smallest w
        long best = detail::gamma_measure(r);
        std::optional<ExactValue> next;
        for (const auto& w : candidates) {
            if (w.sign() <= 0 || w >= half) continue;
            ExactValue unit = detail::duplication_unit(w);
            for (ExactValue option : {r / unit, r * unit}) {
                long m = detail::gamma_measure(option);
                if (m < best) {
                    best = m;
                    next = std::move(option);
                }
            }
        }
        const bool improved = next.has_value();
        if (improved) r = *next;
        if (!improved) return r;
    }
}

} // namespace chpf
