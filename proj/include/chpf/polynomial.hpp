#pragma once

#include <chpf/error.hpp>
#include <chpf/exact_value.hpp>
#include <chpf/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace chpf {

namespace detail {

template <typename T>
bool scalar_is_zero(const T& x)
{
    if constexpr (requires { x.is_zero(); })
        return x.is_zero();
    else
        return x == T(0);
}

} // namespace detail

/// Dense univariate polynomial; coefficient i multiplies x^i. The leading
/// coefficient is nonzero unless the polynomial is zero (empty storage).
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(T constant) : c_{std::move(constant)} { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(std::size_t degree, T coeff = T(1))
    {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = std::move(coeff);
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(long i) const
    {
        if (i < 0 || i > degree()) return T(0);
        return c_[static_cast<std::size_t>(i)];
    }
    T lead() const { return is_zero() ? T(0) : c_.back(); }

    T operator()(const T& x) const
    {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const
    {
        std::vector<T> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<int>(i)));
        return Polynomial(std::move(d));
    }

    /// p(s x)
    Polynomial scaled(const T& s) const
    {
        std::vector<T> d = c_;
        T power(1);
        for (auto& c : d) {
            c = c * power;
            power = power * s;
        }
        return Polynomial(std::move(d));
    }

    template <typename F>
    auto map(F&& f) const -> Polynomial<decltype(f(std::declval<const T&>()))>
    {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return Polynomial<U>(std::move(out));
    }

    Polynomial operator-() const
    {
        std::vector<T> d;
        for (const auto& c : c_) d.push_back(-c);
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> d(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::scalar_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(d));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Polynomial& a, const T& s)
    {
        std::vector<T> d;
        for (const auto& c : a.c_) d.push_back(c * s);
        return Polynomial(std::move(d));
    }
    friend Polynomial operator/(const Polynomial& a, const T& s)
    {
        std::vector<T> d;
        for (const auto& c : a.c_) d.push_back(c / s);
        return Polynomial(std::move(d));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Highest power first, e.g. "x^2 + 1/2" or "3/4 * pi^(1/2) * x".
    std::string str(const std::string& var = "x") const
    {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            const T& c = c_[static_cast<std::size_t>(i)];
            if (detail::scalar_is_zero(c)) continue;
            std::string cs = to_text(c);
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative) cs.erase(0, 1);
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            if (i == 0) {
                os << cs;
                continue;
            }
            if (cs != "1") os << (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

private:
    static std::string to_text(const T& c)
    {
        std::ostringstream os;
        os << c;
        return os.str();
    }

    void trim()
    {
        while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

template <typename T>
bool is_zero(const Polynomial<T>& p)
{
    return p.is_zero();
}

using RationalPoly = Polynomial<Rational>;
using ExactPoly = Polynomial<ExactValue>;

inline ExactPoly to_exact(const RationalPoly& p)
{
    return p.map([](const Rational& r) { return ExactValue(r); });
}

/// Quotient of polynomials with a monic denominator.
class RationalFunction {
public:
    RationalFunction(RationalPoly num, RationalPoly den = RationalPoly(Rational(1)))
        : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero())
            throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
        Rational lead = den_.lead();
        num_ = num_ / lead;
        den_ = den_ / lead;
    }

    const RationalPoly& num() const { return num_; }
    const RationalPoly& den() const { return den_; }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }

    /// Equality as functions (cross multiplication).
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    RationalPoly num_, den_;
};

} // namespace chpf
