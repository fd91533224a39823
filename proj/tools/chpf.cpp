// chpf: verification driver for the Catalan-Hankel Pfaffian catalogue.

#include <chpf/chpf.hpp>
#include <chpf/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace chpf;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::vector<std::string> families, identities, params;
    std::optional<std::string> sqrt_q;
    long n_max = 3;
    std::string format = "json";
    int digits = 0;
    unsigned seed = 7;
    std::size_t oracle_cap = kDefaultOracleCap;
    std::size_t max_dim = kDefaultMaxDim;
    bool timing = true;
};

std::size_t max_dim_from_env()
{
    const char* env = std::getenv("CHPF_MAX_DIM");
    if (!env || !*env) return kDefaultMaxDim;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 2 || v > 62) throw ConfigError("CHPF_MAX_DIM must be an integer in [2, 62]");
    return static_cast<std::size_t>(v);
}

/// A family with the parameter samples the run will use.
struct FamilyPlan {
    FamilyId id;
    std::vector<FamilySpec> samples;
};

Params user_params(const RunConfig& cfg)
{
    Params out;
    for (const auto& kv : cfg.params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("--param expects name=p/q, got '" + kv + "'");
        out[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
    }
    if (cfg.sqrt_q) out["t"] = Rational::parse(*cfg.sqrt_q);
    return out;
}

/// Default samples, or a single sample with the user's values merged into
/// the family's first default.
std::vector<FamilySpec> plan_samples(FamilyId id, const Params& user)
{
    std::vector<FamilySpec> out;
    if (user.empty()) return default_families(id);
    Params p = default_samples(id).front();
    auto names = family_param_names(id);
    for (const auto& [k, v] : user)
        if (std::find(names.begin(), names.end(), k) != names.end()) p[k] = v;
    out.push_back(make_family(id, p));
    return out;
}

struct Selection {
    std::vector<IdentityId> identities;
    std::vector<FamilyPlan> families;
    std::map<FamilyId, std::size_t> family_index;
};

Selection select(const RunConfig& cfg, bool default_all_identities)
{
    Selection sel;
    std::set<FamilyId> fams;
    std::vector<FamilyId> fam_order;
    auto add_family = [&](FamilyId f) {
        if (fams.insert(f).second) fam_order.push_back(f);
    };
    for (const auto& name : cfg.families) {
        auto f = parse_family(name);
        if (!f) throw ConfigError("unknown family '" + name + "'");
        add_family(*f);
    }
    for (const auto& name : cfg.identities) {
        auto id = parse_identity(name);
        if (!id) throw ConfigError("unknown identity '" + name + "'");
        if (std::find(sel.identities.begin(), sel.identities.end(), *id) == sel.identities.end())
            sel.identities.push_back(*id);
        add_family(identity_family(*id));
    }
    if (cfg.identities.empty()) {
        for (auto id : kAllIdentities)
            if ((cfg.families.empty() && default_all_identities) || fams.count(identity_family(id)))
                sel.identities.push_back(id);
        if (cfg.families.empty() && default_all_identities)
            for (auto f : kAllFamilies) add_family(f);
    }

    Params user = user_params(cfg);
    std::set<std::string> known;
    for (auto f : fam_order)
        for (const auto& n : family_param_names(f)) known.insert(n);
    for (const auto& [k, v] : user)
        if (!known.count(k)) throw ConfigError("no selected family has a parameter '" + k + "'");

    for (auto f : fam_order) {
        try {
            sel.family_index[f] = sel.families.size();
            sel.families.push_back({f, plan_samples(f, user)});
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
    }
    return sel;
}

void check_run_size(const RunConfig& cfg)
{
    if (cfg.n_max < 1) throw ConfigError("--n-max must be at least 1");
    if (static_cast<std::size_t>(2 * cfg.n_max) > cfg.max_dim)
        throw ConfigError("--n-max " + std::to_string(cfg.n_max) + " needs " + std::to_string(2 * cfg.n_max) +
                          "x" + std::to_string(2 * cfg.n_max) + " matrices, above the size cap " +
                          std::to_string(cfg.max_dim) + " (CHPF_MAX_DIM)");
}

// ---------------------------------------------------------------------------
// Row sink shared by verify / table / bench

class Sink {
public:
    Sink(std::string format, std::vector<std::string> columns) : format_(std::move(format)), columns_(std::move(columns))
    {
        if (format_ == "csv") std::cout << csv_row(columns_) << "\n";
        if (format_ == "markdown") std::cout << md_row(columns_) << "\n" << md_rule(columns_.size()) << "\n";
    }

    /// json: the record itself; csv/markdown: `fields` in column order.
    void row(const json& record, const std::vector<std::string>& fields)
    {
        if (format_ == "json")
            std::cout << record.dump() << "\n";
        else if (format_ == "csv")
            std::cout << csv_row(fields) << "\n";
        else
            std::cout << md_row(fields) << "\n";
        std::cout.flush();
    }

    void footer(const json& summary)
    {
        if (format_ == "json") {
            std::cout << json{{"summary", summary}}.dump() << "\n";
            return;
        }
        std::string text;
        for (const auto& [k, v] : summary.items()) {
            if (!text.empty()) text += format_ == "csv" ? ";" : ", ";
            text += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        if (format_ == "csv")
            std::cout << "# summary: " << text << "\n";
        else
            std::cout << "\n**Summary:** " << text << "\n";
    }

private:
    std::string format_;
    std::vector<std::string> columns_;
};

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const RunConfig& cfg)
{
    check_run_size(cfg);
    Selection sel = select(cfg, true);
    Sink sink(cfg.format, {"kind", "name", "N", "params", "verdict", "ratio", "lhs", "rhs", "wall_time_ms"});

    long cells = 0, matches = 0, deviations = 0, verified_failures = 0, errors = 0;
    long checks = 0, check_failures = 0;

    for (auto id : sel.identities) {
        const auto& plan = sel.families[sel.family_index.at(identity_family(id))];
        for (const auto& fam : plan.samples) {
            for (long N = 1; N <= cfg.n_max; ++N) {
                ++cells;
                try {
                    IdentityCell cell = identity_check(id, fam, N, cfg.max_dim);
                    if (!cfg.timing) cell.wall_time_ms = 0;
                    json rec = to_json(cell, cfg.timing);
                    if (cfg.digits > 0 && cell.ratio.kappa_grade() == 0 && cell.ratio.kappa_grades().empty())
                        rec["ratio_decimal"] = numeric_eval(cell.ratio, cfg.digits).decimal;
                    if (cell.warning) std::cerr << "warning: " << *cell.warning << "\n";
                    if (cell.match())
                        ++matches;
                    else {
                        ++deviations;
                        if (identity_status(id) == IdentityStatus::Verified) ++verified_failures;
                    }
                    sink.row(rec, {"identity", std::string(identity_name(id)), std::to_string(N),
                                   format_params(fam.params), cell.verdict(), cell.ratio.str(), cell.lhs.str(),
                                   cell.rhs.str(), format_ms(cell.wall_time_ms)});
                } catch (const Error& e) {
                    ++errors;
                    json rec = {{"identity", std::string(identity_name(id))},
                                {"N", N},
                                {"params", to_json(fam.params)},
                                {"verdict", "error"},
                                {"error", e.what()}};
                    sink.row(rec, {"identity", std::string(identity_name(id)), std::to_string(N),
                                   format_params(fam.params), "error", e.what(), "", "", ""});
                }
            }
        }
    }

    auto check_row = [&](const std::string& kind, const FamilySpec& fam, long N, bool ok, const std::string& detail,
                         const json& extra) {
        ++checks;
        if (!ok) ++check_failures;
        json rec = {{"check", kind}, {"family", fam.name()}, {"params", to_json(fam.params)}};
        if (N > 0) rec["N"] = N;
        rec["verdict"] = ok ? "pass" : "fail";
        for (const auto& [k, v] : extra.items()) rec[k] = v;
        if (!detail.empty()) rec["detail"] = detail;
        sink.row(rec, {kind, fam.name(), N > 0 ? std::to_string(N) : "", format_params(fam.params),
                       ok ? "pass" : "fail", detail, "", "", ""});
    };

    for (const auto& plan : sel.families) {
        for (const auto& fam : plan.samples) {
            try {
                auto p = check_pearson(fam);
                check_row("pearson", fam, 0, p.ok, p.ok ? "" : "residual " + p.residual->str(), json::object());
            } catch (const Error& e) {
                check_row("pearson", fam, 0, false, e.what(), json::object());
            }
            try {
                auto a = verify_adjoint(fam, 2 * cfg.n_max + 1);
                std::string detail;
                if (!a.ok)
                    detail = "i=" + std::to_string(a.i) + " j=" + std::to_string(a.j) + ": " + a.lhs.str() +
                             " vs " + a.rhs.str();
                check_row("adjoint", fam, 0, a.ok, detail, json::object());
            } catch (const Error& e) {
                check_row("adjoint", fam, 0, false, e.what(), json::object());
            }
            for (long N = 1; N <= cfg.n_max; ++N) {
                try {
                    auto pc = verify_product(fam, N);
                    check_row("product", fam, N, pc.holds(), pc.holds() ? "" : "ratio " + pc.ratio.str(),
                              json{{"lhs_canonical", to_json(pc.lhs)},
                                   {"rhs_canonical", to_json(pc.rhs)},
                                   {"ratio_canonical", to_json(pc.ratio)}});
                } catch (const Error& e) {
                    check_row("product", fam, N, false, e.what(), json::object());
                }
            }
        }
    }

    const int code = (verified_failures + errors + check_failures) > 0 ? 1 : 0;
    sink.footer(json{{"cells", cells},
                     {"matches", matches},
                     {"deviations", deviations},
                     {"verified_failures", verified_failures},
                     {"errors", errors},
                     {"checks", checks},
                     {"check_failures", check_failures},
                     {"exit_code", code}});
    return code;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const RunConfig& cfg)
{
    check_run_size(cfg);
    Selection sel = select(cfg, true);
    std::vector<std::string> cols = {"identity", "params", "status"};
    for (long N = 1; N <= cfg.n_max; ++N) cols.push_back("N=" + std::to_string(N));
    Sink sink(cfg.format, cols);
    long verified_failures = 0, errors = 0, rows = 0;
    for (auto id : sel.identities) {
        const auto& plan = sel.families[sel.family_index.at(identity_family(id))];
        for (const auto& fam : plan.samples) {
            ++rows;
            std::vector<std::string> fields = {std::string(identity_name(id)), format_params(fam.params),
                                               std::string(to_string(identity_status(id)))};
            json cells = json::array();
            for (long N = 1; N <= cfg.n_max; ++N) {
                try {
                    IdentityCell cell = identity_check(id, fam, N, cfg.max_dim);
                    fields.push_back(cell.match() ? "match" : "deviation(" + cell.ratio.str() + ")");
                    cells.push_back({{"N", N}, {"verdict", cell.verdict()}, {"ratio", cell.ratio.str()}});
                    if (!cell.match() && identity_status(id) == IdentityStatus::Verified) ++verified_failures;
                } catch (const Error& e) {
                    ++errors;
                    fields.push_back("error");
                    cells.push_back({{"N", N}, {"verdict", "error"}, {"error", e.what()}});
                }
            }
            sink.row(json{{"identity", std::string(identity_name(id))},
                          {"params", to_json(fam.params)},
                          {"status", std::string(to_string(identity_status(id)))},
                          {"cells", cells}},
                     fields);
        }
    }
    const int code = (verified_failures + errors) > 0 ? 1 : 0;
    sink.footer(json{{"rows", rows}, {"verified_failures", verified_failures}, {"errors", errors}, {"exit_code", code}});
    return code;
}

// ---------------------------------------------------------------------------
// sop

int cmd_sop(const RunConfig& cfg)
{
    if (cfg.families.size() != 1 || !cfg.identities.empty())
        throw ConfigError("sop needs exactly one --family");
    if (cfg.n_max < 0) throw ConfigError("--n-max must be non-negative");
    Selection sel = select(cfg, false);
    const FamilySpec& fam = sel.families.front().samples.front();
    const long K = cfg.n_max;
    if (static_cast<std::size_t>(2 * K + 2) > cfg.max_dim)
        throw ConfigError("sop with --n-max " + std::to_string(K) + " needs dimension " + std::to_string(2 * K + 2) +
                          ", above the size cap " + std::to_string(cfg.max_dim));
    SOPSystem sys = build_sops(fam, K);

    Sink sink(cfg.format, {"quantity", "n", "value"});
    for (std::size_t n = 0; n < sys.polys.size(); ++n)
        sink.row(json{{"quantity", "Q"}, {"n", n}, {"text", sys.polys[n].str()}, {"coeffs", to_json(sys.polys[n])}},
                 {"Q", std::to_string(n), sys.polys[n].str()});
    for (long n = 0; n < K; ++n) {
        const auto& u = sys.u[static_cast<std::size_t>(n)];
        sink.row(json{{"quantity", "u"}, {"n", n}, {"text", u.str()}, {"canonical", to_json(u)}},
                 {"u", std::to_string(n), u.str()});
    }
    for (long n = 0; n <= K; ++n) {
        const auto& tau = sys.tau[static_cast<std::size_t>(n)];
        sink.row(json{{"quantity", "tau"}, {"n", 2 * n}, {"text", tau.str()}, {"canonical", to_json(tau)}},
                 {"tau", std::to_string(2 * n), tau.str()});
    }
    sink.footer(json{{"family", fam.name()}, {"params", format_params(fam.params)}, {"exit_code", 0}});
    return 0;
}

// ---------------------------------------------------------------------------
// bench

SkewMatrix<Rational> random_skew(std::size_t dim, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return SkewMatrix<Rational>::generate(dim, [&](std::size_t, std::size_t) {
        long p = num(rng);
        long q = den(rng);
        return Rational(p, q);
    });
}

int cmd_bench(const RunConfig& cfg)
{
    constexpr int kRepeats = 5;
    std::mt19937_64 rng(cfg.seed);
    Sink sink(cfg.format, {"dim", "matrices", "eliminate_ms", "expand_ms", "agree", "note"});
    bool all_agree = true;
    for (std::size_t dim = 2; dim <= cfg.max_dim; dim += 2) {
        double t_elim = 0, t_exp = 0;
        bool agree = true;
        const bool expand = dim <= cfg.oracle_cap;
        for (int r = 0; r < kRepeats; ++r) {
            auto m = random_skew(dim, rng);
            auto t0 = std::chrono::steady_clock::now();
            Rational e = pf_eliminate(m);
            auto t1 = std::chrono::steady_clock::now();
            t_elim += std::chrono::duration<double, std::milli>(t1 - t0).count();
            if (expand) {
                Rational x = pf_expand(m, cfg.oracle_cap);
                auto t2 = std::chrono::steady_clock::now();
                t_exp += std::chrono::duration<double, std::milli>(t2 - t1).count();
                agree = agree && (e == x);
            }
        }
        all_agree = all_agree && agree;
        std::string note = expand ? "" : "expansion skipped (above oracle cap " + std::to_string(cfg.oracle_cap) + ")";
        json rec = {{"dim", dim}, {"matrices", kRepeats}};
        rec["eliminate_ms"] = cfg.timing ? t_elim : 0.0;
        if (expand) rec["expand_ms"] = cfg.timing ? t_exp : 0.0;
        rec["agree"] = agree;
        if (!note.empty()) rec["note"] = note;
        sink.row(rec, {std::to_string(dim), std::to_string(kRepeats), format_ms(cfg.timing ? t_elim : 0.0),
                       expand ? format_ms(cfg.timing ? t_exp : 0.0) : "", agree ? "yes" : "NO", note});
        if (!agree) {
            std::cerr << "error: elimination and expansion disagree at dimension " << dim << "\n";
            break;
        }
    }
    const int code = all_agree ? 0 : 1;
    sink.footer(json{{"seed", cfg.seed}, {"all_agree", all_agree}, {"exit_code", code}});
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Exact verification of Catalan-Hankel Pfaffian evaluations"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.families, "weight family (repeatable)");
        sub->add_option("--identity", cfg.identities, "identity name (repeatable)");
        sub->add_option("--n-max", cfg.n_max, "largest pair count N");
        sub->add_option("--param", cfg.params, "parameter value name=p/q (repeatable)");
        sub->add_option("--sqrt-q", cfg.sqrt_q, "t with q = t^2, as p/q");
        sub->add_option("--format", cfg.format, "json, csv or markdown")
            ->check(CLI::IsMember({"json", "csv", "markdown"}));
        sub->add_option("--digits", cfg.digits, "also print ratios to this many significant digits");
        sub->add_option("--seed", cfg.seed, "seed for bench matrices");
        sub->add_option("--oracle-cap", cfg.oracle_cap, "largest dimension for the expansion oracle");
        sub->add_flag("--no-timing{false}", cfg.timing, "report zero wall times (byte-stable output)");
    };
    auto* verify = app.add_subcommand("verify", "check identities and the product formula chain");
    auto* sop = app.add_subcommand("sop", "print skew orthogonal polynomials, u_n and tau_2n");
    auto* table = app.add_subcommand("table", "identity verdicts by N");
    auto* bench = app.add_subcommand("bench", "time Pfaffian elimination against expansion");
    for (auto* s : {verify, sop, table, bench}) add_common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.max_dim = max_dim_from_env();
        if (verify->parsed()) return cmd_verify(cfg);
        if (sop->parsed()) return cmd_sop(cfg);
        if (table->parsed()) return cmd_table(cfg);
        if (bench->parsed()) return cmd_bench(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        bool config = e.kind() == ErrorKind::Config || e.kind() == ErrorKind::ParameterDomain ||
                      e.kind() == ErrorKind::SizeCap;
        return config ? 2 : 1;
    }
    return 2;
}
