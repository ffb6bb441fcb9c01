#include "heatkern/config.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

#include "heatkern/bounds.hpp"
#include "heatkern/campaigns.hpp"
#include "heatkern/errors.hpp"

namespace heatkern {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::string& where) {
    if (!j.is_object()) throw config_error(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw config_error(where + ": unknown key '" + it.key() + "'");
}

double num(const json& j, const std::string& where) {
    if (!j.is_number()) throw config_error(where + ": expected a number");
    return j.get<double>();
}

std::complex<double> complex_pair(const json& j, const std::string& where) {
    // [modulus, angle-in-radians]
    if (!j.is_array() || j.size() != 2)
        throw config_error(where + ": expected [modulus, angle] pair");
    const double mod = num(j[0], where);
    const double ang = num(j[1], where);
    return std::polar(mod, ang);
}

SymbolSpec parse_symbol(const json& j) {
    require_keys(j, {"kind", "d", "shift", "imag"}, "symbol");
    SymbolSpec s;
    if (j.contains("kind")) {
        if (!j["kind"].is_string())
            throw config_error("symbol.kind: expected a string");
        s.kind = j["kind"].get<std::string>();
    }
    const std::set<std::string> kinds{"fractional",        "fractional_shifted",
                                      "bracket",           "dn",
                                      "laplacian_shifted", "perturbed_dn"};
    if (!kinds.count(s.kind))
        throw config_error("symbol.kind: unknown kind '" + s.kind + "'");
    if (j.contains("d")) s.d = num(j["d"], "symbol.d");
    if (j.contains("shift")) s.shift = num(j["shift"], "symbol.shift");
    if (j.contains("imag")) {
        if (!j["imag"].is_boolean())
            throw config_error("symbol.imag: expected a boolean");
        s.imag = j["imag"].get<bool>();
    }
    return s;
}

void parse_offsets(const json& j, GridSpec& g) {
    require_keys(j, {"kind", "per_decade", "values"}, "offsets");
    std::string kind = "standard";
    if (j.contains("kind")) kind = j["kind"].get<std::string>();
    if (kind == "standard") {
        g.standard_offsets_flag = true;
        if (j.contains("per_decade"))
            g.offsets_per_decade =
                static_cast<int>(num(j["per_decade"], "offsets.per_decade"));
    } else if (kind == "list") {
        if (!j.contains("values") || !j["values"].is_array())
            throw config_error("offsets: list form needs 'values'");
        g.standard_offsets_flag = false;
        g.offsets.clear();
        for (const auto& v : j["values"])
            g.offsets.push_back(num(v, "offsets.values"));
    } else {
        throw config_error("offsets.kind: expected 'standard' or 'list'");
    }
}

void parse_times(const json& j, GridSpec& g) {
    require_keys(j, {"kind", "min", "max", "per_decade", "values"}, "times");
    std::string kind = "log";
    if (j.contains("kind")) kind = j["kind"].get<std::string>();
    if (kind == "log") {
        g.log_times = true;
        if (j.contains("min")) g.tmin = num(j["min"], "times.min");
        if (j.contains("max")) g.tmax = num(j["max"], "times.max");
        if (j.contains("per_decade"))
            g.t_per_decade =
                static_cast<int>(num(j["per_decade"], "times.per_decade"));
    } else if (kind == "list") {
        if (!j.contains("values") || !j["values"].is_array())
            throw config_error("times: list form needs 'values'");
        g.log_times = false;
        g.times.clear();
        for (const auto& v : j["values"])
            g.times.push_back(complex_pair(v, "times.values"));
    } else {
        throw config_error("times.kind: expected 'log' or 'list'");
    }
}

BoundSpec parse_bound(const json& j) {
    require_keys(j,
                 {"name", "gamma", "c1", "exponent_offset", "region_r",
                  "spread_cap"},
                 "bound");
    BoundSpec b;
    if (j.contains("name")) b.name = j["name"].get<std::string>();
    const std::set<std::string> names{"poisson", "refined", "perturb"};
    if (!names.count(b.name))
        throw config_error("bound.name: unknown bound '" + b.name + "'");
    if (j.contains("gamma")) b.gamma = num(j["gamma"], "bound.gamma");
    if (j.contains("c1")) b.c1 = num(j["c1"], "bound.c1");
    if (j.contains("exponent_offset"))
        b.exponent_offset = num(j["exponent_offset"], "bound.exponent_offset");
    if (j.contains("region_r")) b.region_r = num(j["region_r"], "bound.region_r");
    if (j.contains("spread_cap"))
        b.spread_cap = num(j["spread_cap"], "bound.spread_cap");
    return b;
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error(std::string("config parse failure: ") + e.what());
    }
    require_keys(j,
                 {"campaign", "symbol", "route", "offsets", "times", "tol",
                  "kmax", "nq", "threads", "terms", "K", "lambdas",
                  "remainder_exact", "bound", "lower", "tmods", "angle_levels",
                  "dlist", "svalues", "out", "contour_dump"},
                 "config");
    RunConfig c;
    if (j.contains("campaign"))
        c.campaign = static_cast<int>(num(j["campaign"], "campaign"));
    if (j.contains("symbol")) c.symbol = parse_symbol(j["symbol"]);
    if (j.contains("route")) {
        c.route = j["route"].get<std::string>();
        const std::set<std::string> routes{"spectral", "contour",
                                           "subordination", "closed_form"};
        if (!routes.count(c.route))
            throw config_error("route: unknown route '" + c.route + "'");
    }
    if (j.contains("offsets")) parse_offsets(j["offsets"], c.grid);
    if (j.contains("times")) parse_times(j["times"], c.grid);
    if (j.contains("tol")) c.tol = num(j["tol"], "tol");
    if (j.contains("kmax")) c.kmax = static_cast<long>(num(j["kmax"], "kmax"));
    if (j.contains("nq")) c.nq = static_cast<int>(num(j["nq"], "nq"));
    if (j.contains("threads"))
        c.threads = static_cast<int>(num(j["threads"], "threads"));
    if (j.contains("terms")) c.terms = static_cast<int>(num(j["terms"], "terms"));
    if (j.contains("K")) c.K = static_cast<long>(num(j["K"], "K"));
    if (j.contains("lambdas")) {
        if (!j["lambdas"].is_array())
            throw config_error("lambdas: expected an array of pairs");
        for (const auto& v : j["lambdas"])
            c.lambdas.push_back(complex_pair(v, "lambdas"));
    }
    if (j.contains("remainder_exact"))
        c.remainder_exact = j["remainder_exact"].get<std::string>();
    if (j.contains("bound")) c.bound = parse_bound(j["bound"]);
    if (j.contains("lower")) {
        if (!j["lower"].is_boolean())
            throw config_error("lower: expected a boolean");
        c.lower = j["lower"].get<bool>();
    }
    if (j.contains("tmods")) {
        c.tmods.clear();
        for (const auto& v : j["tmods"]) c.tmods.push_back(num(v, "tmods"));
        if (c.tmods.empty()) throw config_error("tmods: empty list");
    }
    if (j.contains("angle_levels"))
        c.angle_levels = static_cast<int>(num(j["angle_levels"], "angle_levels"));
    if (j.contains("dlist")) {
        c.dlist.clear();
        for (const auto& v : j["dlist"]) c.dlist.push_back(num(v, "dlist"));
        if (c.dlist.empty()) throw config_error("dlist: empty list");
    }
    if (j.contains("svalues"))
        for (const auto& v : j["svalues"])
            c.svalues.push_back(num(v, "svalues"));
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("contour_dump"))
        c.contour_dump = j["contour_dump"].get<std::string>();

    if (!(c.tol > 0.0)) throw config_error("tol must be positive");
    if (c.kmax < 0) throw config_error("kmax must be nonnegative");
    if (c.nq < 16) throw config_error("nq must be at least 16");
    if (c.threads < 1) throw config_error("threads must be at least 1");
    if (c.terms < 1) throw config_error("terms must be at least 1");
    if (c.K < 4) throw config_error("K must be at least 4");
    if (c.campaign < 0 || c.campaign > 12)
        throw config_error("campaign must lie in 1..12 (or 0 for none)");
    return c;
}

MultiplierSymbol make_multiplier(const SymbolSpec& s) {
    if (s.kind == "fractional") return MultiplierSymbol::fractional(s.d);
    if (s.kind == "fractional_shifted")
        return MultiplierSymbol::fractional_shifted(s.d, s.shift);
    if (s.kind == "bracket") return MultiplierSymbol::bracket();
    if (s.kind == "dn") return MultiplierSymbol::dirichlet_to_neumann();
    if (s.kind == "laplacian_shifted")
        return MultiplierSymbol::laplacian_shifted(s.shift);
    throw config_error("symbol kind '" + s.kind +
                       "' is not a Fourier multiplier");
}

ClassicalSymbol make_classical(const SymbolSpec& s) {
    if (s.kind == "perturbed_dn") return perturbed_dn_symbol(s.imag);
    if (s.kind == "fractional")
        return ClassicalSymbol(s.d, {HomogTerm::abs_xi(s.d)});
    if (s.kind == "dn") return ClassicalSymbol(1.0, {HomogTerm::abs_xi(1.0)});
    if (s.kind == "bracket")
        // leading part of (k^2+1)^{1/2}; adequate wherever only the top
        // terms of the expansion matter
        return ClassicalSymbol(1.0, {HomogTerm::abs_xi(1.0)});
    throw config_error("symbol kind '" + s.kind +
                       "' has no classical-symbol form here");
}

std::vector<double> offsets_from(const GridSpec& g) {
    if (g.standard_offsets_flag) return standard_offsets(g.offsets_per_decade);
    if (g.offsets.empty()) throw config_error("offsets: empty explicit list");
    return g.offsets;
}

std::vector<std::complex<double>> times_from(const GridSpec& g) {
    if (!g.log_times) {
        if (g.times.empty()) throw config_error("times: empty explicit list");
        return g.times;
    }
    const auto ts = standard_times(g.tmin, g.tmax, g.t_per_decade);
    return {ts.begin(), ts.end()};
}

}  // namespace heatkern
