// diffnev: command-line surface over the exact and numerical toolkit.
//
// Exit codes: 0 success / verdict PASS, 1 verdict FAIL, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffnev/classifier.hpp"
#include "diffnev/composition.hpp"
#include "diffnev/errors.hpp"
#include "diffnev/local_estimates.hpp"
#include "diffnev/nevanlinna.hpp"
#include "diffnev/parser.hpp"

using json = nlohmann::ordered_json;
using namespace diffnev;

namespace {

constexpr const char* kVersion = "0.1.0";

// Deterministic float rendering: shortest form at fixed significance, so
// identical manifests produce byte-identical files.
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
}

struct Output {
    std::string format = "json";
    std::string path;  // empty: stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw CLI::ValidationError("--out", "cannot open " + path);
        out << text;
    }
};

json manifest(const std::string& command,
              const std::map<std::string, std::string>& inputs, long seed,
              const Output& out) {
    json m;
    m["command"] = command;
    m["inputs"] = inputs;
    m["seed"] = seed;
    m["version"] = kVersion;
    m["outputs"] = out.path.empty() ? json::array() : json::array({out.path});
    return m;
}

std::string render_json(const json& man, const json& result) {
    json doc;
    doc["manifest"] = man;
    doc["result"] = result;
    return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "\n");
    return out.str();
}

std::vector<double> parse_grid(const std::string& text) {
    double start = 0, stop = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0 || stop < start)
        throw CLI::ValidationError("--r-grid", "expected start:stop:step with step > 0");
    std::vector<double> grid;
    for (double r = start; r <= stop + 1e-9; r += step) grid.push_back(r);
    return grid;
}

SolutionHandle pick_solution(const std::string& name, double c) {
    if (name == "exp2") return solution_exp2(c);
    if (name == "cos2") return solution_cos2(c);
    if (name == "identity") return solution_identity();
    if (name == "exp") return solution_exp();
    throw CLI::ValidationError("--solution",
                               "expected one of exp2, cos2, identity, exp");
}

const char* regime_name(OrderRegime r) {
    switch (r) {
        case OrderRegime::DeepPole: return "deep-pole";
        case OrderRegime::Bezout: return "bezout";
        default: return "trivial";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical toolkit for difference equations "
                 "f(z+1) = R(z, f(z))"};
    app.require_subcommand(1);

    // Shared state; each subcommand registers only the flags it consumes.
    std::string map_text, p_text, q_text, f_text, beta_text, target_text = "0";
    std::string solution = "cos2", h_text, grid_text = "2:6:1";
    int k = 1, kmax = 6;
    long seed = 0;
    bool forward = false, allow_exceptional = false;
    double c_param = 1.0, ceiling = 0.5, min_fraction = 0.9;
    QuadratureConfig cfg;
    Output out;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out.path, "Write output to PATH instead of stdout");
        cmd->add_option("--seed", seed, "Seed echoed into the run manifest");
    };

    auto* c_compose = app.add_subcommand("compose", "Depth-k shifted composition chain");
    c_compose->add_option("--map", map_text, "Rational map R(z, w)")->required();
    c_compose->add_option("--k", k, "Chain depth");
    c_compose->add_flag("--forward", forward, "Forward chain R_{z+k-1} o ... o R_z");
    add_common(c_compose);

    auto* c_profile = app.add_subcommand("profile", "Multiplicity profile of the depth-k denominator");
    c_profile->add_option("--map", map_text)->required();
    c_profile->add_option("--k", k, "Chain depth");
    add_common(c_profile);

    auto* c_spread = app.add_subcommand("spread", "Spread ratios e_k / d^k for k = 1..kmax");
    c_spread->add_option("--map", map_text)->required();
    c_spread->add_option("--kmax", kmax, "Largest depth");
    add_common(c_spread);

    auto* c_classify = app.add_subcommand("classify", "Inverse-power trichotomy of the map");
    c_classify->add_option("--map", map_text)->required();
    add_common(c_classify);

    auto* c_exc = app.add_subcommand("exceptional", "Shift-exceptional verdict for a target");
    c_exc->add_option("--map", map_text)->required();
    c_exc->add_option("--target", target_text, "Constant target a in Q(z)");
    add_common(c_exc);

    auto* c_bezout = app.add_subcommand("bezout", "Bezout identity A*P + B*Q = 1 over Q(z)[w]");
    c_bezout->add_option("--p", p_text, "Polynomial P in w")->required();
    c_bezout->add_option("--q", q_text, "Polynomial Q in w")->required();
    add_common(c_bezout);

    auto* c_local = app.add_subcommand("localcheck", "Pointwise order inequality at beta");
    c_local->add_option("--p", p_text)->required();
    c_local->add_option("--q", q_text)->required();
    c_local->add_option("--f", f_text, "Rational function f(z)")->required();
    c_local->add_option("--beta", beta_text, "Base point beta in Q")->required();
    add_common(c_local);

    auto add_numeric = [&](CLI::App* cmd) {
        cmd->add_option("--solution", solution, "Catalog entry: exp2, cos2, identity, exp");
        cmd->add_option("--c", c_param, "Scale constant of the catalog entry");
        cmd->add_option("--r-grid", grid_text, "Radii as start:stop:step");
        cmd->add_option("--nodes", cfg.nodes, "Initial quadrature nodes");
        cmd->add_option("--tolerance", cfg.tolerance, "Quadrature tolerance");
        add_common(cmd);
    };

    auto* c_nev = app.add_subcommand("nevanlinna", "Characteristic rows T = m + N at infinity");
    add_numeric(c_nev);

    auto* c_defect = app.add_subcommand("defect", "Defect-ratio decay experiment");
    c_defect->add_option("--target", target_text, "Finite target a (real)");
    c_defect->add_flag("--allow-exceptional", allow_exceptional,
                       "Contrast run against an exceptional target");
    c_defect->add_option("--ceiling", ceiling, "PASS ceiling for the final ratio");
    add_numeric(c_defect);

    auto* c_val = app.add_subcommand("valiron", "Valiron-Mohon'ko trend T_{f(.+1)} vs d*T_f");
    add_numeric(c_val);

    auto* c_stein = app.add_subcommand("steinmetz", "Steinmetz-type inequality with delta = 1");
    c_stein->add_option("--H", h_text, "Squarefree H(w) with constant coefficients")->required();
    c_stein->add_option("--min-fraction", min_fraction, "Required holding fraction");
    add_numeric(c_stein);

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();

    std::map<std::string, std::string> inputs;
    for (const auto* opt : sub->get_options())
        if (opt->count() && !opt->get_lnames().empty())
            inputs[opt->get_lnames().front()] =
                opt->results().empty() ? "true" : opt->results().front();

    try {
        json man = manifest(sub->get_name(), inputs, seed, out);
        cfg.tolerance = std::max(cfg.tolerance, 1e-12);
        int exit_code = 0;

        if (sub == c_compose) {
            WRat R = parse_wrat(map_text);
            CompositionChain chain = compose_chain(R, k, forward);
            std::string value = to_string(chain.value);
            if (out.format == "csv")
                out.write(render_csv({"k", "value_exact"}, {{std::to_string(k), value}}));
            else
                out.write(render_json(man, {{"k", k}, {"forward", forward}, {"value", value}}));
        } else if (sub == c_profile) {
            WRat R = parse_wrat(map_text);
            MultiplicityProfile prof = multiplicity_profile(R, k);
            if (out.format == "csv") {
                std::vector<std::vector<std::string>> rows;
                for (const auto& [H, e] : prof.factors)
                    rows.push_back({to_string(H), std::to_string(e)});
                out.write(render_csv({"factor_exact", "multiplicity"}, rows));
            } else {
                json factors = json::array();
                for (const auto& [H, e] : prof.factors)
                    factors.push_back({{"factor", to_string(H)}, {"multiplicity", e}});
                out.write(render_json(man, {{"k", k},
                                            {"factors", factors},
                                            {"e0", prof.e0},
                                            {"ek", prof.ek},
                                            {"degree", prof.degree}}));
            }
        } else if (sub == c_spread) {
            WRat R = parse_wrat(map_text);
            std::vector<SpreadRow> rows = spread_sequence(R, kmax);
            if (out.format == "csv") {
                std::vector<std::vector<std::string>> body;
                for (const auto& row : rows)
                    body.push_back({std::to_string(row.k), std::to_string(row.ek),
                                    std::to_string(row.e0), std::to_string(row.degree),
                                    to_string(row.ratio)});
                out.write(render_csv({"k", "ek", "e0", "degree", "ratio_exact"}, body));
            } else {
                json body = json::array();
                for (const auto& row : rows)
                    body.push_back({{"k", row.k},
                                    {"ek", row.ek},
                                    {"e0", row.e0},
                                    {"degree", row.degree},
                                    {"ratio", to_string(row.ratio)}});
                out.write(render_json(man, body));
            }
        } else if (sub == c_classify) {
            WRat R = parse_wrat(map_text);
            NormalForm nf = classify(R);
            const char* tag = nf.tag == NormalForm::Tag::Polynomial ? "Polynomial"
                              : nf.tag == NormalForm::Tag::InversePower ? "InversePower"
                                                                        : "Generic";
            json result{{"tag", tag}};
            if (nf.tag == NormalForm::Tag::InversePower) {
                result["a"] = to_string(nf.a);
                result["b"] = to_string(nf.b);
                result["d"] = nf.d;
            }
            if (out.format == "csv") {
                bool ip = nf.tag == NormalForm::Tag::InversePower;
                out.write(render_csv({"tag", "a_exact", "b_exact", "d"},
                                     {{tag, ip ? to_string(nf.a) : "", ip ? to_string(nf.b) : "",
                                       ip ? std::to_string(nf.d) : ""}}));
            } else {
                out.write(render_json(man, result));
            }
        } else if (sub == c_exc) {
            WRat R = parse_wrat(map_text);
            RatFunc a = parse_ratfunc(target_text);
            ExceptionalVerdict v = is_shift_exceptional(R, a);
            json result{{"target", to_string(v.target)},
                        {"fixed", v.fixed},
                        {"local_multiplicity", v.local_multiplicity},
                        {"full_degree", v.full_degree},
                        {"is_exceptional", v.is_exceptional}};
            if (out.format == "csv")
                out.write(render_csv(
                    {"target_exact", "fixed", "local_multiplicity", "full_degree",
                     "is_exceptional"},
                    {{to_string(v.target), v.fixed ? "1" : "0",
                      std::to_string(v.local_multiplicity), std::to_string(v.full_degree),
                      v.is_exceptional ? "1" : "0"}}));
            else
                out.write(render_json(man, result));
        } else if (sub == c_bezout) {
            WPoly P = parse_wpoly(p_text);
            WPoly Q = parse_wpoly(q_text);
            BezoutPair bez = bezout(P, Q);
            if (out.format == "csv")
                out.write(render_csv({"A_exact", "B_exact", "resultant_exact"},
                                     {{to_string(bez.A), to_string(bez.B),
                                       to_string(bez.res)}}));
            else
                out.write(render_json(man, {{"A", to_string(bez.A)},
                                            {"B", to_string(bez.B)},
                                            {"resultant", to_string(bez.res)}}));
        } else if (sub == c_local) {
            WPoly P = parse_wpoly(p_text);
            WPoly Q = parse_wpoly(q_text);
            RatFunc f = parse_ratfunc(f_text);
            RatFunc beta_rf = parse_ratfunc(beta_text);
            auto beta = beta_rf.as_rational();
            if (!beta) throw DegenerateInput("--beta must be a rational constant");
            OrderCheck check = verify_order_inequality(P, Q, f, *beta);
            exit_code = check.holds ? 0 : 1;
            if (out.format == "csv")
                out.write(render_csv(
                    {"lhs", "rhs_exact", "holds", "regime", "E_exact"},
                    {{std::to_string(check.lhs), to_string(check.rhs),
                      check.holds ? "1" : "0", regime_name(check.regime),
                      to_string(check.budget.E)}}));
            else
                out.write(render_json(man, {{"lhs", check.lhs},
                                            {"rhs", to_string(check.rhs)},
                                            {"holds", check.holds},
                                            {"regime", regime_name(check.regime)},
                                            {"E", to_string(check.budget.E)}}));
        } else if (sub == c_nev) {
            SolutionHandle f = pick_solution(solution, c_param);
            std::vector<double> grid = parse_grid(grid_text);
            std::vector<std::vector<std::string>> body;
            json jrows = json::array();
            for (double r : grid) {
                NevanlinnaRow row = characteristic(f, r, cfg);
                body.push_back({fmt(row.r), fmt(row.m), fmt(row.N), fmt(row.T),
                                fmt(row.ratio), ""});
                jrows.push_back({{"r", fmt(row.r)}, {"m", fmt(row.m)}, {"N", fmt(row.N)},
                                 {"T", fmt(row.T)}, {"ratio", fmt(row.ratio)}});
            }
            if (out.format == "csv")
                out.write(render_csv(
                    {"r_float", "m_float", "N_float", "T_float", "ratio_float", "flags"},
                    body));
            else
                out.write(render_json(man, jrows));
        } else if (sub == c_defect) {
            SolutionHandle f = pick_solution(solution, c_param);
            std::vector<double> grid = parse_grid(grid_text);
            double a = std::stod(target_text);
            DefectReport rep = defect_experiment(f, Target(Complex(a, 0.0)), grid, cfg,
                                                 allow_exceptional, ceiling);
            exit_code = rep.pass ? 0 : 1;
            std::vector<std::vector<std::string>> body;
            json jrows = json::array();
            for (const auto& row : rep.rows) {
                std::string flags;
                for (const auto& fl : row.flags) flags += (flags.empty() ? "" : ";") + fl;
                body.push_back({fmt(row.r), fmt(row.m), fmt(row.N), fmt(row.T),
                                fmt(row.ratio), flags});
                jrows.push_back({{"r", fmt(row.r)}, {"m", fmt(row.m)}, {"N", fmt(row.N)},
                                 {"T", fmt(row.T)}, {"ratio", fmt(row.ratio)},
                                 {"flags", flags}});
            }
            if (out.format == "csv")
                out.write(render_csv(
                    {"r_float", "m_float", "N_float", "T_float", "ratio_float", "flags"},
                    body));
            else
                out.write(render_json(man, {{"rows", jrows}, {"verdict", rep.pass ? "PASS" : "FAIL"}}));
        } else if (sub == c_val) {
            SolutionHandle f = pick_solution(solution, c_param);
            std::vector<double> grid = parse_grid(grid_text);
            std::vector<ValironRow> rows = valiron_check(f, grid, cfg);
            double first_dev = std::abs(rows.front().ratio - 1.0);
            double last_dev = std::abs(rows.back().ratio - 1.0);
            bool pass = last_dev <= first_dev + 1e-9 || last_dev < 0.02;
            exit_code = pass ? 0 : 1;
            std::vector<std::vector<std::string>> body;
            json jrows = json::array();
            for (const auto& row : rows) {
                body.push_back({fmt(row.r), fmt(row.T_shift), fmt(row.dT), fmt(row.ratio)});
                jrows.push_back({{"r", fmt(row.r)}, {"T_shift", fmt(row.T_shift)},
                                 {"dT", fmt(row.dT)}, {"ratio", fmt(row.ratio)}});
            }
            if (out.format == "csv")
                out.write(render_csv({"r_float", "T_shift_float", "dT_float", "ratio_float"},
                                     body));
            else
                out.write(render_json(man, {{"rows", jrows}, {"verdict", pass ? "PASS" : "FAIL"}}));
        } else if (sub == c_stein) {
            SolutionHandle f = pick_solution(solution, c_param);
            std::vector<double> grid = parse_grid(grid_text);
            WPoly H = parse_wpoly(h_text);
            SteinmetzReport rep = steinmetz_check(f, H, grid, cfg, min_fraction);
            exit_code = rep.pass ? 0 : 1;
            std::vector<std::vector<std::string>> body;
            json jrows = json::array();
            for (const auto& row : rep.rows) {
                body.push_back({fmt(row.r), fmt(row.lhs), fmt(row.rhs),
                                row.holds ? "1" : "0"});
                jrows.push_back({{"r", fmt(row.r)}, {"lhs", fmt(row.lhs)},
                                 {"rhs", fmt(row.rhs)}, {"holds", row.holds}});
            }
            if (out.format == "csv")
                out.write(render_csv({"r_float", "lhs_float", "rhs_float", "holds"}, body));
            else
                out.write(render_json(
                    man, {{"rows", jrows},
                          {"hold_fraction", fmt(rep.hold_fraction)},
                          {"verdict", rep.pass ? "PASS" : "FAIL"}}));
        }
        return exit_code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CommonFactor& e) {
        std::cerr << "verdict: " << e.what() << "\n";
        return 1;
    } catch (const DegenerateInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
