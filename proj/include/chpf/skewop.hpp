#pragma once

#include <chpf/error.hpp>
#include <chpf/exact_value.hpp>
#include <chpf/families.hpp>
#include <chpf/pfaffian.hpp>
#include <chpf/polynomial.hpp>
#include <chpf/qcombinatorics.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace chpf {

/// Monic orthogonal polynomials p_0..p_K with norms h_k = <p_k, p_k>_rho.
struct OPSystem {
    FamilySpec family;
    std::vector<ExactPoly> polys;
    std::vector<ExactValue> norms;
    std::vector<ExactValue> moments; ///< mu_0 .. mu_{2K+2}
};

namespace detail {

/// <x^n, p>_rho from the moment table.
inline ExactValue pair_monomial(const std::vector<ExactValue>& mu, long n, const ExactPoly& p)
{
    ExactValue acc;
    for (long i = 0; i <= p.degree(); ++i) {
        const ExactValue& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        acc += c * mu.at(static_cast<std::size_t>(n + i));
    }
    return acc;
}

inline ExactValue pair(const std::vector<ExactValue>& mu, const ExactPoly& a, const ExactPoly& b)
{
    ExactValue acc;
    for (long i = 0; i <= a.degree(); ++i) {
        const ExactValue& c = a.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        acc += c * pair_monomial(mu, i, b);
    }
    return acc;
}

} // namespace detail

/// Gram-Schmidt on the moment functional.
inline OPSystem build_ops(const FamilySpec& fam, long K)
{
    OPSystem sys;
    sys.family = fam;
    for (long n = 0; n <= 2 * K + 2; ++n) sys.moments.push_back(moment(fam, n));
    for (long k = 0; k <= K; ++k) {
        ExactPoly p = ExactPoly::monomial(static_cast<std::size_t>(k));
        for (long j = 0; j < k; ++j) {
            ExactValue proj = detail::pair_monomial(sys.moments, k, sys.polys[static_cast<std::size_t>(j)]) /
                              sys.norms[static_cast<std::size_t>(j)];
            p -= sys.polys[static_cast<std::size_t>(j)] * proj;
        }
        ExactValue h = detail::pair(sys.moments, p, p);
        if (h.is_zero())
            throw Error(ErrorKind::DegenerateMoments,
                        fam.name() + ": vanishing norm h_" + std::to_string(k) + " (moment determinant is zero)");
        sys.polys.push_back(p);
        sys.norms.push_back(h);
    }
    return sys;
}

namespace detail {

/// Coefficientwise D_q x^n = [n]_q x^{n-1}.
inline ExactPoly q_derivative(const ExactPoly& p, const Rational& q)
{
    std::vector<ExactValue> out;
    for (long n = 1; n <= p.degree(); ++n)
        out.push_back(p.coeffs()[static_cast<std::size_t>(n)] * ExactValue(qnum(n, q)));
    return ExactPoly(std::move(out));
}

} // namespace detail

/// The skew operator. Continuous: f p' + (f' - g)/2 p.
/// q-lattice: q^{-1/2} g T_q p + q^{-1} f D_{q^{-1}} p + f D_q p.
inline ExactPoly apply_A(const FamilySpec& fam, const ExactPoly& p)
{
    ExactPoly f = to_exact(fam.f), g = to_exact(fam.g);
    if (!fam.is_q()) {
        ExactPoly half = (to_exact(fam.f.derivative()) - g) * ExactValue(Rational(1, 2));
        return f * p.derivative() + half * p;
    }
    Rational q = fam.q(), one(1);
    ExactPoly shifted = p.scaled(ExactValue(q));
    return g * shifted * ExactValue(one / fam.t()) +
           f * detail::q_derivative(p, one / q) * ExactValue(one / q) + f * detail::q_derivative(p, q);
}

/// Components of A p_k in the basis p_0..p_{deg}, by leading-term subtraction.
inline std::vector<ExactValue> expand_in_ops(const OPSystem& sys, ExactPoly v)
{
    std::vector<ExactValue> comp(static_cast<std::size_t>(std::max<long>(v.degree() + 1, 0)));
    while (!v.is_zero()) {
        long d = v.degree();
        if (d >= static_cast<long>(sys.polys.size()))
            throw Error(ErrorKind::StructureViolation, "expansion needs p_" + std::to_string(d) + " (not built)");
        ExactValue c = v.lead();
        comp[static_cast<std::size_t>(d)] = c;
        v -= sys.polys[static_cast<std::size_t>(d)] * c;
        if (v.degree() >= d) throw Error(ErrorKind::StructureViolation, "leading term did not cancel");
    }
    return comp;
}

namespace detail {

/// A p_k = a p_{k+1} + b p_{k-1}; returns (a, b) after checking no other component appears.
inline std::pair<ExactValue, ExactValue> three_term(const OPSystem& sys, long k)
{
    auto comp = expand_in_ops(sys, apply_A(sys.family, sys.polys.at(static_cast<std::size_t>(k))));
    for (std::size_t i = 0; i < comp.size(); ++i) {
        long li = static_cast<long>(i);
        if (li == k + 1 || li == k - 1) continue;
        if (!comp[i].is_zero())
            throw Error(ErrorKind::StructureViolation,
                        sys.family.name() + ": A p_" + std::to_string(k) + " has a p_" + std::to_string(li) +
                            " component " + comp[i].str());
    }
    auto get = [&](long i) { return (i >= 0 && i < static_cast<long>(comp.size())) ? comp[static_cast<std::size_t>(i)] : ExactValue(); };
    return {get(k + 1), get(k - 1)};
}

} // namespace detail

/// c_k in A p_k = -(c_k / h_{k+1}) p_{k+1} + (c_{k-1} / h_{k-1}) p_{k-1}.
/// Needs p_0 .. p_{k+1}. The p_{k-1} coefficient is cross-checked against c_{k-1}.
inline ExactValue extract_c(const OPSystem& sys, long k)
{
    if (k + 1 >= static_cast<long>(sys.polys.size()))
        throw Error(ErrorKind::StructureViolation, "extract_c(" + std::to_string(k) + ") needs p_" +
                                                       std::to_string(k + 1));
    auto [up, down] = detail::three_term(sys, k);
    ExactValue c = -sys.norms[static_cast<std::size_t>(k + 1)] * up;
    if (k >= 1) {
        auto [prev_up, prev_down] = detail::three_term(sys, k - 1);
        (void)prev_down;
        ExactValue c_prev = -sys.norms[static_cast<std::size_t>(k)] * prev_up;
        ExactValue expected = c_prev / sys.norms[static_cast<std::size_t>(k - 1)];
        if (!(down == expected))
            throw Error(ErrorKind::StructureViolation,
                        sys.family.name() + ": A p_" + std::to_string(k) + " has p_" + std::to_string(k - 1) +
                            " coefficient " + down.str() + ", antisymmetry requires " + expected.str());
    } else if (!down.is_zero()) {
        throw Error(ErrorKind::StructureViolation, "A p_0 has a negative-index component");
    }
    return c;
}

// ---------------------------------------------------------------------------
// Skew-orthogonal polynomials

struct SOPSystem {
    FamilySpec family;
    std::vector<ExactPoly> polys;  ///< Q_0 .. Q_{2K+1}
    std::vector<ExactValue> tau;   ///< tau_0, tau_2, ..., tau_{2K+2} (index n holds tau_{2n})
    std::vector<ExactValue> u;     ///< u_0 .. u_K
};

inline SkewMatrix<ExactValue> skew_moment_matrix(const FamilySpec& fam, std::size_t dim)
{
    return SkewMatrix<ExactValue>::generate(
        dim, [&](std::size_t i, std::size_t j) { return skew_moment(fam, static_cast<long>(i), static_cast<long>(j)); });
}

namespace detail {

/// Pf of the moment block on `rows` bordered by the column (x^r).
inline ExactPoly bordered_pfaffian(const SkewMatrix<ExactValue>& m, const std::vector<std::size_t>& rows)
{
    const std::size_t n = rows.size();
    auto border = SkewMatrix<ExactPoly>::generate(n + 1, [&](std::size_t a, std::size_t b) -> ExactPoly {
        if (b == n) return ExactPoly::monomial(rows[a]);
        return ExactPoly(m.at(rows[a], rows[b]));
    });
    return pf_poly(border, std::max(kDefaultPolyCap, n + 1));
}

inline std::vector<std::size_t> iota(std::size_t n)
{
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace detail

/// Q_{2n} = Pf(0..2n | x) / tau_{2n}, Q_{2n+1} = Pf(0..2n-1, 2n+1 | x) / tau_{2n},
/// u_n = tau_{2n+2} / tau_{2n}.
inline SOPSystem build_sops(const FamilySpec& fam, long K)
{
    SOPSystem sys;
    sys.family = fam;
    auto m = skew_moment_matrix(fam, static_cast<std::size_t>(2 * K + 2));
    for (long n = 0; n <= K + 1; ++n) {
        ExactValue tau = pf_eliminate(m.restrict_to(detail::iota(static_cast<std::size_t>(2 * n))));
        if (tau.is_zero())
            throw Error(ErrorKind::DegenerateSkewMoments,
                        fam.name() + ": tau_" + std::to_string(2 * n) + " vanishes");
        sys.tau.push_back(tau);
    }
    for (long n = 0; n <= K; ++n) {
        const ExactValue& tau = sys.tau[static_cast<std::size_t>(n)];
        auto rows = detail::iota(static_cast<std::size_t>(2 * n + 1));
        sys.polys.push_back(detail::bordered_pfaffian(m, rows) / tau);
        rows.back() = static_cast<std::size_t>(2 * n + 1);
        sys.polys.push_back(detail::bordered_pfaffian(m, rows) / tau);
        sys.u.push_back(sys.tau[static_cast<std::size_t>(n + 1)] / tau);
    }
    return sys;
}

inline ExactValue skew_gram(const FamilySpec& fam, const ExactPoly& a, const ExactPoly& b)
{
    ExactValue acc;
    for (long i = 0; i <= a.degree(); ++i) {
        const ExactValue& ai = a.coeffs()[static_cast<std::size_t>(i)];
        if (ai.is_zero()) continue;
        for (long j = 0; j <= b.degree(); ++j) {
            const ExactValue& bj = b.coeffs()[static_cast<std::size_t>(j)];
            if (bj.is_zero() || i == j) continue;
            acc += ai * bj * skew_moment(fam, i, j);
        }
    }
    return acc;
}

inline ExactValue skew_gram(const SOPSystem& sys, std::size_t n, std::size_t m)
{
    return skew_gram(sys.family, sys.polys.at(n), sys.polys.at(m));
}

struct AdjointReport {
    bool ok = true;
    long i = -1, j = -1; ///< first failing pair
    ExactValue lhs, rhs;
};

/// <x^i, A x^j>_rho == <x^i, x^j>_{4, omega} for all i, j <= dmax.
inline AdjointReport verify_adjoint(const FamilySpec& fam, long dmax)
{
    std::vector<ExactValue> mu;
    long top = 2 * dmax + static_cast<long>(fam.f.degree()) + 1;
    for (long n = 0; n <= top; ++n) mu.push_back(moment(fam, n));
    AdjointReport rep;
    for (long j = 0; j <= dmax; ++j) {
        ExactPoly a = apply_A(fam, ExactPoly::monomial(static_cast<std::size_t>(j)));
        for (long i = 0; i <= dmax; ++i) {
            ExactValue lhs = detail::pair_monomial(mu, i, a);
            ExactValue rhs = skew_moment(fam, i, j);
            if (!(lhs == rhs)) {
                rep.ok = false;
                rep.i = i;
                rep.j = j;
                rep.lhs = lhs;
                rep.rhs = rhs;
                return rep;
            }
        }
    }
    return rep;
}

struct ProductCheck {
    long N = 0;
    ExactValue lhs, rhs, ratio;
    bool holds() const { return ratio == ExactValue(1); }
};

/// The Pfaffian of the first 2N skew moments against the product of c_{2i}.
/// Continuous weights carry the factor 2^N from the 1/2 in the skew moments.
inline ProductCheck verify_product(const FamilySpec& fam, long N)
{
    ProductCheck out;
    out.N = N;
    const std::size_t dim = static_cast<std::size_t>(2 * N);
    SkewMatrix<ExactValue> m;
    if (fam.is_q()) {
        m = skew_moment_matrix(fam, dim);
    } else {
        m = SkewMatrix<ExactValue>::generate(dim, [&](std::size_t i, std::size_t j) {
            long li = static_cast<long>(i), lj = static_cast<long>(j);
            return ExactValue(Rational(lj - li)) * omega_moment(fam, li + lj - 1);
        });
    }
    out.lhs = pf_eliminate(m);
    OPSystem ops = build_ops(fam, 2 * N - 1);
    ExactValue rhs(fam.is_q() ? Rational(1) : Rational(2).pow(N));
    for (long i = 0; i < N; ++i) rhs *= extract_c(ops, 2 * i);
    out.rhs = rhs;
    out.ratio = ratio(out.lhs, out.rhs);
    return out;
}

} // namespace chpf
