#pragma once

#include <chpf/chpf.hpp>

#include <mpfr.h>

#include <random>
#include <string>

namespace chpf::test {

inline Rational R(long p, long q = 1) { return Rational(p, q); }

/// Gamma through MPFR's own implementation, used only as an oracle.
inline Real mpfr_gamma(const Rational& x)
{
    Real v = to_real(x), out;
    mpfr_gamma(out.backend().data(), v.backend().data(), MPFR_RNDN);
    return out;
}

/// Evaluates a factor list with MPFR's gamma; independent of numeric_eval.
inline Real oracle_value(const ExactValue& v, const std::map<std::string, Real>& kappa = {})
{
    if (v.is_zero()) return Real(0);
    Real out = to_real(v.coeff());
    out *= pow(Real(2), to_real(v.two_exp()));
    out *= pow(boost::math::constants::pi<Real>(), Real(v.pi_half_exp()) / 2);
    for (const auto& [arg, e] : v.gammas()) out *= pow(mpfr_gamma(arg), Real(e));
    for (const auto& [sym, g] : v.kappa_grades()) out *= pow(kappa.at(sym), Real(g));
    return out;
}

inline bool close(const Real& a, const Real& b, const Real& rel)
{
    if (b == 0) return abs(a) <= rel;
    return abs(a / b - 1) <= rel;
}

/// Skew matrix with integer-over-small-denominator entries.
inline SkewMatrix<Rational> random_skew(std::size_t dim, std::mt19937_64& rng, long num_range = 9, long den_max = 7)
{
    std::uniform_int_distribution<long> num(-num_range, num_range), den(1, den_max);
    return SkewMatrix<Rational>::generate(dim, [&](std::size_t, std::size_t) {
        long p = num(rng);
        long q = den(rng);
        return Rational(p, q);
    });
}

/// Pfaffian over the reals by pivoted elimination, for numeric cross-checks.
inline Real real_pfaffian(SkewMatrix<Real> m)
{
    return pf_eliminate(m);
}

inline FamilySpec family(FamilyId id, Params p = {})
{
    if (p.empty() && !default_samples(id).empty()) p = default_samples(id).front();
    return make_family(id, p);
}

} // namespace chpf::test
