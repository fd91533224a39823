#pragma once

#include <chpf/error.hpp>

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace chpf {

/// Arbitrary-precision rational, always reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(const mpz_class& v) : v_(v) {}
    Rational(const mpz_class& num, const mpz_class& den)
    {
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p", "p/q" or "-p/q".
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        if (s.empty()) throw Error(ErrorKind::Config, "empty fraction");
        auto slash = s.find('/');
        auto valid_int = [](const std::string& part) {
            std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
            if (i >= part.size()) return false;
            for (; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9') return false;
            return true;
        };
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den))
            throw Error(ErrorKind::Config, "not an exact fraction: '" + s + "'");
        if (num[0] == '+') num.erase(0, 1);
        if (den[0] == '+') den.erase(0, 1);
        mpz_class n(num), d(den);
        if (d == 0) throw Error(ErrorKind::Config, "zero denominator in '" + s + "'");
        return Rational(n, d);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class floor() const
    {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return r;
    }
    mpz_class ceil() const
    {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return r;
    }

    /// Integer value; throws if not an integer or out of range.
    long to_long() const
    {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw Error(ErrorKind::DegenerateParameter, "expected small integer, got " + str());
        return v_.get_num().get_si();
    }

    double to_double() const { return v_.get_d(); }

    std::string str() const { return v_.get_str(); }

    Rational pow(long e) const
    {
        if (e < 0) {
            if (is_zero()) throw Error(ErrorKind::DivisionByZero, "0 raised to a negative power");
            return Rational(1) / pow(-e);
        }
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(mpq_class(n, d));
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// x - floor(x), in [0, 1).
inline Rational frac(const Rational& x) { return x - Rational(x.floor()); }

} // namespace chpf

template <>
struct std::hash<chpf::Rational> {
    std::size_t operator()(const chpf::Rational& r) const noexcept
    {
        return std::hash<std::string>{}(r.str());
    }
};
