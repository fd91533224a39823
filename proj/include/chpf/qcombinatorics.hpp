#pragma once

#include <chpf/error.hpp>
#include <chpf/rational.hpp>

namespace chpf {

/// q-integer [n]_q = 1 + q + ... + q^{n-1}.
inline Rational qnum(long n, const Rational& q)
{
    if (q == Rational(1))
        throw Error(ErrorKind::DegenerateParameter, "q = 1 in q-integer; use the plain integer");
    if (n < 0) throw Error(ErrorKind::DegenerateParameter, "q-integer of a negative index");
    Rational sum(0), term(1);
    for (long k = 0; k < n; ++k) {
        sum += term;
        term *= q;
    }
    return sum;
}

/// Finite q-Pochhammer (a;q)_n, extended to n < 0 by (a;q)_{-n} = 1/(a q^{-n};q)_n.
inline Rational qpoch(const Rational& a, const Rational& q, long n)
{
    if (n >= 0) {
        Rational prod(1), aqk = a;
        for (long k = 0; k < n; ++k) {
            prod *= Rational(1) - aqk;
            aqk *= q;
        }
        return prod;
    }
    if (q.is_zero()) throw Error(ErrorKind::Pole, "negative q-Pochhammer index with q = 0");
    Rational denom(1), qinv = Rational(1) / q, aqk = a;
    for (long k = 1; k <= -n; ++k) {
        aqk *= qinv;
        Rational factor = Rational(1) - aqk;
        if (factor.is_zero())
            throw Error(ErrorKind::Pole, "vanishing factor in (" + a.str() + ";" + q.str() + ")_" +
                                             std::to_string(n));
        denom *= factor;
    }
    return Rational(1) / denom;
}

/// Gaussian binomial; zero when k > n.
inline Rational qbinom(long n, long k, const Rational& q)
{
    if (n < 0 || k < 0) throw Error(ErrorKind::DegenerateParameter, "negative q-binomial index");
    if (k > n) return Rational(0);
    return qpoch(q, q, n) / (qpoch(q, q, k) * qpoch(q, q, n - k));
}

} // namespace chpf
