#pragma once

#include <chpf/exact_value.hpp>
#include <chpf/families.hpp>
#include <chpf/identities.hpp>
#include <chpf/skewop.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace chpf {

using json = nlohmann::ordered_json;

/// {coeff, two_exp, pi_half_exp, gammas: [{arg, exp}], kappa_grade}; the
/// per-symbol kappa grades are listed too when present.
inline json to_json(const ExactValue& v)
{
    json g = json::array();
    for (const auto& [arg, e] : v.gammas()) g.push_back({{"arg", arg.str()}, {"exp", e}});
    json out = {{"coeff", v.coeff().str()},
                {"two_exp", v.two_exp().str()},
                {"pi_half_exp", v.pi_half_exp()},
                {"gammas", g},
                {"kappa_grade", v.kappa_grade()}};
    if (!v.kappa_grades().empty()) {
        json k = json::object();
        for (const auto& [sym, grade] : v.kappa_grades()) k[sym] = grade;
        out["kappa"] = k;
    }
    return out;
}

inline ExactValue exact_from_json(const json& j)
{
    FactorList f;
    f.coeff = Rational::parse(j.at("coeff").get<std::string>());
    f.two_exp = Rational::parse(j.at("two_exp").get<std::string>());
    f.pi_half_exp = j.at("pi_half_exp").get<long>();
    for (const auto& g : j.at("gammas")) f.gammas.emplace_back(Rational::parse(g.at("arg").get<std::string>()), g.at("exp").get<long>());
    if (j.contains("kappa"))
        for (const auto& [sym, grade] : j.at("kappa").items()) f.kappa[sym] = grade.get<long>();
    return normalize(f);
}

inline json to_json(const Params& p)
{
    json out = json::object();
    for (const auto& [k, v] : p) out[k] = v.str();
    return out;
}

inline json to_json(const IdentityCell& c, bool timing = true)
{
    json out = {{"identity", std::string(identity_name(c.id))},
                {"N", c.N},
                {"params", to_json(c.params)},
                {"lhs_canonical", to_json(c.lhs)},
                {"rhs_canonical", to_json(c.rhs)},
                {"ratio_canonical", to_json(c.ratio)},
                {"verdict", c.verdict()},
                {"ratio", c.ratio.str()},
                {"status", std::string(to_string(identity_status(c.id)))},
                {"wall_time_ms", timing ? c.wall_time_ms : 0.0}};
    if (c.warning) out["warning"] = *c.warning;
    return out;
}

/// Polynomial coefficients, lowest degree first.
inline json to_json(const ExactPoly& p)
{
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

/// Quotes a CSV field when needed.
inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += csv_field(fields[i]);
    }
    return out;
}

inline std::string md_row(const std::vector<std::string>& fields)
{
    std::string out = "|";
    for (const auto& f : fields) {
        std::string cell = f;
        for (std::size_t pos = 0; (pos = cell.find('|', pos)) != std::string::npos; pos += 2) cell.replace(pos, 1, "\\|");
        out += " " + cell + " |";
    }
    return out;
}

inline std::string md_rule(std::size_t n)
{
    std::string out = "|";
    for (std::size_t i = 0; i < n; ++i) out += "---|";
    return out;
}

inline std::string format_ms(double ms)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << ms;
    return os.str();
}

} // namespace chpf
