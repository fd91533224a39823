// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chpf/chpf.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace chpf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::vector<FamilySpec> all_samples()
{
    std::vector<FamilySpec> out;
    for (auto id : kAllFamilies)
        for (auto& f : default_families(id)) out.push_back(f);
    return out;
}

std::string fail_at(const FamilySpec& fam, const std::string& what)
{
    return fam.name() + " " + format_params(fam.params) + ": " + what;
}

// (q; q)_inf to 60 digits, the constant carried by the big q-Jacobi right-hand sides
std::string qq_inf(const Rational& q)
{
    Real qr = to_real(q), prod = 1, qk = qr;
    for (int k = 0; k < 2000 && qk > Real("1e-80"); ++k, qk *= qr) prod *= 1 - qk;
    std::ostringstream os;
    os << std::setprecision(60) << prod;
    return os.str();
}

Outcome c1_pfaffian()
{
    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7), half(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t dim = 2 * static_cast<std::size_t>(half(rng));
        auto m = SkewMatrix<Rational>::generate(dim, [&](std::size_t, std::size_t) {
            long p = num(rng);
            return Rational(p, den(rng));
        });
        Rational pf = pf_eliminate(m);
        if (pf != pf_expand(m)) return {false, "elimination and expansion differ at trial " + std::to_string(trial)};
        if (pf * pf != det_check(m)) return {false, "Pf^2 != det at trial " + std::to_string(trial)};
    }
    return {true, "200 matrices, dims 2..10"};
}

Outcome c2_pearson()
{
    long n = 0;
    for (const auto& fam : all_samples()) {
        if (!check_pearson(fam).ok) return {false, fail_at(fam, "Pearson relation")};
        ++n;
    }
    return {true, std::to_string(n) + " samples"};
}

Outcome c3_adjoint()
{
    for (const auto& fam : all_samples()) {
        auto rep = verify_adjoint(fam, 8);
        if (!rep.ok) return {false, fail_at(fam, "at (" + std::to_string(rep.i) + "," + std::to_string(rep.j) + ")")};
    }
    return {true, "degrees <= 8"};
}

Outcome c4_three_term()
{
    for (const auto& fam : all_samples()) {
        auto sys = build_ops(fam, 7);
        for (long k = 0; k <= 6; ++k) {
            try {
                extract_c(sys, k);
            } catch (const Error& e) {
                return {false, fail_at(fam, e.what())};
            }
        }
    }
    for (auto id : {FamilyId::Hermite, FamilyId::Laguerre, FamilyId::AlSalamCarlitzI, FamilyId::LittleQJacobi})
        for (const auto& fam : default_families(id)) {
            auto sys = build_ops(fam, 6);
            for (long k = 0; k <= 5; ++k)
                if (extract_c(sys, k) != closed_c(fam, k)) return {false, fail_at(fam, "c_" + std::to_string(k))};
        }
    return {true, "structure k <= 6, closed forms k <= 5"};
}

Outcome c5_product()
{
    long n = 0;
    for (const auto& fam : all_samples())
        for (long N = 1; N <= 3; ++N) {
            auto pc = verify_product(fam, N);
            if (!pc.holds()) return {false, fail_at(fam, "N=" + std::to_string(N) + " ratio " + pc.ratio.str())};
            ++n;
        }
    return {true, std::to_string(n) + " products"};
}

Outcome c6_gram()
{
    for (const auto& fam : all_samples()) {
        auto sys = build_sops(fam, 3);
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = 0; b < 8; ++b) {
                ExactValue expected;
                if (a / 2 == b / 2 && a != b) expected = a < b ? sys.u[a / 2] : -sys.u[a / 2];
                if (skew_gram(sys, a, b) != expected)
                    return {false, fail_at(fam, "<Q_" + std::to_string(a) + ",Q_" + std::to_string(b) + ">")};
            }
    }
    return {true, "indices <= 7"};
}

Outcome c7_confirmed()
{
    const Rational one(1);
    for (auto id : kAllIdentities) {
        if (identity_status(id) != IdentityStatus::Verified) continue;
        for (const auto& p : default_samples(identity_family(id))) {
            auto fam = make_family(identity_family(id), p);
            for (long N = 1; N <= 4; ++N) {
                auto cell = identity_check(id, fam, N);
                if (!cell.match())
                    return {false, std::string(identity_name(id)) + " " + format_params(p) + " N=" +
                                       std::to_string(N) + " ratio " + cell.ratio.str()};
            }
        }
    }
    auto herm = make_family(FamilyId::Hermite, {});
    if (identity_lhs(IdentityId::Hermite, herm, 2) != ExactValue(Rational(3, 2)) * ExactValue::pi_half(2))
        return {false, "Hermite N=2 anchor"};
    auto asc = make_family(FamilyId::AlSalamCarlitzI, {{"t", Rational(1, 2)}, {"a", Rational(-2)}});
    if (identity_lhs(IdentityId::AlSalamCarlitz, asc, 1) != ExactValue(Rational(3, 4))) return {false, "ASC N=1 anchor"};
    for (const auto& lqj : default_families(FamilyId::LittleQJacobi))
        if (identity_lhs(IdentityId::LittleQJacobi, lqj, 1) != ExactValue(one - lqj.q()))
            return {false, "little q-Jacobi N=1 anchor"};
    for (const auto& lag : default_families(FamilyId::Laguerre)) {
        Rational a = lag.param("a");
        if (identity_lhs(IdentityId::Laguerre, lag, 2) !=
            ExactValue(6) * ExactValue::gamma(a + Rational(2)) * ExactValue::gamma(a + Rational(4)))
            return {false, "Laguerre N=2 anchor"};
    }
    return {true, "N <= 4 plus anchors"};
}

Outcome c8_deviations()
{
    std::vector<IdentityId> dev;
    for (auto id : kAllIdentities)
        if (identity_status(id) == IdentityStatus::Deviating) dev.push_back(id);
    SuiteOptions opt;
    opt.check_theorem = false;
    auto a = run_suite(dev, opt), b = run_suite(dev, opt);
    if (a.cells.size() != b.cells.size()) return {false, "cell counts differ between runs"};
    long non_one = 0;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        if (a.cells[i].ratio != b.cells[i].ratio) return {false, "ratio not reproducible"};
        non_one += !a.cells[i].match();
    }
    // every deviating identity must deviate somewhere
    for (auto id : dev) {
        bool any = false;
        for (const auto& c : a.cells) any = any || (c.id == id && !c.match());
        if (!any) return {false, std::string(identity_name(id)) + " never deviates"};
    }
    return {true, std::to_string(non_one) + " of " + std::to_string(a.cells.size()) + " cells deviate, reproducibly"};
}

Outcome c9_numeric()
{
    const Real tol("1e-30");
    long n = 0;
    for (auto id : kAllIdentities)
        for (const auto& p : default_samples(identity_family(id))) {
            auto fam = make_family(identity_family(id), p);
            std::map<std::string, std::string> kv;
            if (fam.is_q()) {
                kv[fam.kappa_symbol] = "1.25";
                kv["qq_inf"] = qq_inf(fam.q());
            }
            for (long N = 1; N <= 3; ++N) {
                auto m = identity_matrix(id, fam, N);
                auto num = SkewMatrix<Real>::generate(m.dim(), [&](std::size_t i, std::size_t j) {
                    return numeric_value(m.at(i, j), kv);
                });
                Real direct = pf_eliminate(num);
                auto cell = identity_check(id, fam, N);
                Real exact = numeric_value(cell.lhs, kv);
                if (abs(direct - exact) > tol * abs(exact))
                    return {false, std::string(identity_name(id)) + " N=" + std::to_string(N) + " lhs"};
                Real quotient = exact / numeric_value(cell.rhs, kv);
                Real r = numeric_value(cell.ratio, kv);
                if (abs(quotient - r) > tol * abs(r))
                    return {false, std::string(identity_name(id)) + " N=" + std::to_string(N) + " ratio"};
                ++n;
            }
        }
    return {true, std::to_string(n) + " cells within 1e-30"};
}

Outcome c10_mehta_wang()
{
    for (auto b : {Rational(1), Rational(5, 2), Rational(10, 3), Rational(7, 4)})
        for (long N = 1; N <= 3; ++N)
            if (!mehta_wang_check(b, N).holds()) return {false, "b=" + b.str() + " N=" + std::to_string(N)};
    return {true, "N <= 3"};
}

} // namespace

int main()
{
    struct Criterion {
        int k;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {1, "Pfaffian kernels agree", 30, c1_pfaffian},
        {2, "Pearson pairs", 5, c2_pearson},
        {3, "adjoint relation", 60, c3_adjoint},
        {4, "three-term structure", 60, c4_three_term},
        {5, "product theorem", 120, c5_product},
        {6, "skew Gram structure", 60, c6_gram},
        {7, "confirmed identities", 60, c7_confirmed},
        {8, "deviation ledger", 60, c8_deviations},
        {9, "numeric cross-check", 60, c9_numeric},
        {10, "Mehta-Wang Pfaffian", 10, c10_mehta_wang},
    };
    int failures = 0;
    for (const auto& c : all) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (o.ok && secs >= c.limit_s) o = {false, o.detail + ", over time limit"};
        failures += !o.ok;
        std::printf("%s criterion %d: %s (%s; %.2fs, limit %.0fs)\n", o.ok ? "PASS" : "FAIL", c.k, c.name,
                    o.detail.c_str(), secs, c.limit_s);
    }
    return failures == 0 ? 0 : 1;
}
