// pathcon: command-line front end for the path contraction solver.
//
// Exit status: 0 success, 1 a "no" answer (dcs2, dcs3, p5, verify),
// 2 usage, parse or input errors.

#include "pathcon/pathcon.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace pathcon;
using nlohmann::json;

namespace {

struct Globals {
    bool as_json = false;
    bool timing = false;
    int threads = 1;
};

json to_json(const VertexSet & s) { return s.to_vector(); }

json to_json(const WitnessStructure & w)
{
    json out = json::array();
    for (const auto & p : w.parts)
        out.push_back(to_json(p));
    return out;
}

std::string show(const WitnessStructure & w)
{
    std::string out;
    for (const auto & p : w.parts)
        out += (out.empty() ? "" : " ") + to_string(p);
    return out;
}

VertexSet parse_vertex_list(const std::string & text, int n)
{
    VertexSet s;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() || v < 0 || v >= n)
            throw Error(ErrorKind::Parse, "bad vertex '" + item + "' in list '" + text + "'");
        s.insert(v);
    }
    return s;
}

Fraction parse_fraction(const std::string & text, const char * name)
{
    try {
        return Fraction::parse(text);
    } catch (const Error & e) {
        throw Error(ErrorKind::Parse, std::string(name) + ": " + e.what());
    }
}

WitnessStructure parse_witness(const json & j, int n)
{
    const json & parts = j.is_object() ? j.at("witness") : j;
    WitnessStructure w;
    for (const auto & p : parts) {
        VertexSet s;
        for (const auto & v : p) {
            int x = v.get<int>();
            if (x < 0 || x >= n)
                throw Error(ErrorKind::Parse, "witness vertex " + std::to_string(x) + " out of range");
            s.insert(x);
        }
        w.parts.push_back(s);
    }
    return w;
}

std::string_view defect_name(WitnessDefect d)
{
    switch (d) {
        case WitnessDefect::None: return "ok";
        case WitnessDefect::Empty: return "no parts";
        case WitnessDefect::EmptyPart: return "empty part";
        case WitnessDefect::Overlap: return "parts overlap";
        case WitnessDefect::NotCovering: return "parts do not cover V";
        case WitnessDefect::PartNotConnected: return "part not connected";
        case WitnessDefect::MissingAdjacency: return "consecutive parts not adjacent";
        case WitnessDefect::ExtraAdjacency: return "non-consecutive parts adjacent";
    }
    return "?";
}

int emit(const Globals & g, const json & j, const std::string & text)
{
    if (g.as_json)
        std::cout << j.dump() << '\n';
    else
        std::cout << text;
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    CLI::App app{"Path contraction solver"};
    app.require_subcommand(1);
    Globals globals;
    app.add_flag("--json", globals.as_json, "Print JSON");
    app.add_flag("--timing", globals.timing, "Report wall time per stage");
    app.add_option("--threads", globals.threads, "Run independent subroutines concurrently")->check(CLI::Range(1, 64));

    std::string file;
    auto add_file = [&](CLI::App * sub) { sub->add_option("graph", file, "Graph file")->required(); };

    auto * solve_cmd = app.add_subcommand("solve", "Largest t with G contractible to P_t");
    add_file(solve_cmd);
    std::string alpha = "0.9996", beta = "0.9885", gamma = "0.9864", epsilon;
    solve_cmd->add_option("--alpha", alpha);
    solve_cmd->add_option("--beta", beta);
    solve_cmd->add_option("--gamma", gamma);
    solve_cmd->add_option("--epsilon", epsilon, "Override the derived epsilon");

    auto * oracle_cmd = app.add_subcommand("oracle", "Brute force over all two-colorings");
    add_file(oracle_cmd);

    auto * sub_cmd = app.add_subcommand("sub", "Run one subroutine");
    std::string sub_name, param;
    sub_cmd->add_option("name", sub_name)->required()->check(CLI::IsMember({"soepc", "bpc", "tdcpc", "nsoepc"}));
    add_file(sub_cmd);
    sub_cmd->add_option("--param", param)->required();

    std::string rho;
    auto * gamma_cmd = app.add_subcommand("gamma", "Dump the nice-solution table");
    add_file(gamma_cmd);
    gamma_cmd->add_option("--rho", rho)->required();
    auto * enum_cmd = app.add_subcommand("enum", "List connected sets with |N[S]| <= rho*n");
    add_file(enum_cmd);
    enum_cmd->add_option("--rho", rho)->required();

    std::string z1_text, z2_text;
    auto * dcs2_cmd = app.add_subcommand("dcs2", "2-disjoint connected subgraphs");
    auto * dcs3_cmd = app.add_subcommand("dcs3", "3-disjoint connected subgraphs");
    for (auto * sub : {dcs2_cmd, dcs3_cmd}) {
        add_file(sub);
        sub->add_option("--z1", z1_text, "Comma-separated vertices")->required();
        sub->add_option("--z2", z2_text, "Comma-separated vertices")->required();
    }

    auto * p5_cmd = app.add_subcommand("p5", "Is G contractible to P_5?");
    add_file(p5_cmd);

    std::string witness_file;
    auto * verify_cmd = app.add_subcommand("verify", "Check a witness (JSON list of parts, or solve --json output)");
    add_file(verify_cmd);
    verify_cmd->add_option("witness", witness_file, "Witness JSON file, '-' for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }

    try {
        const Graph g = read_graph_file(file);
        const int n = g.n();

        if (*solve_cmd) {
            Constants c(parse_fraction(alpha, "--alpha"), parse_fraction(beta, "--beta"), parse_fraction(gamma, "--gamma"));
            if (!epsilon.empty())
                c = c.with_epsilon(parse_fraction(epsilon, "--epsilon"));
            auto r = solve(g, c, SolveOptions{globals.threads});
            json j{{"t", r.t}, {"witness", to_json(r.witness)}, {"subroutines", json::object()}};
            std::string text = "t=" + std::to_string(r.t) + "\nwitness: " + show(r.witness) + "\n";
            if (!r.per_subroutine.empty()) {
                text += "subroutines:";
                for (auto [k, t] : r.per_subroutine) {
                    j["subroutines"][std::string(to_string(k))] = t;
                    text += " " + std::string(to_string(k)) + "=" + std::to_string(t);
                }
                text += "\n";
            }
            if (globals.timing) {
                j["timing"] = r.elapsed;
                for (const auto & [stage, secs] : r.elapsed)
                    text += "time " + stage + " " + std::to_string(secs) + "s\n";
            }
            return emit(globals, j, text);
        }

        if (*oracle_cmd) {
            auto r = oracle_path_contraction(g);
            return emit(globals, json{{"t", r.t}, {"witness", to_json(r.witness)}},
                        "t=" + std::to_string(r.t) + "\nwitness: " + show(r.witness) + "\n");
        }

        if (*sub_cmd) {
            const Fraction f = parse_fraction(param, "--param");
            SubroutineResult r = sub_name == "soepc" ? soepc(g, f)
                               : sub_name == "bpc"   ? bpc(g, f)
                               : sub_name == "tdcpc" ? tdcpc(g, f)
                                                     : nsoepc(g, f);
            json j{{"subroutine", sub_name}, {"t", r.t}, {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
            std::string text = sub_name + " t=" + std::to_string(r.t) + "\n";
            if (r.witness)
                text += "witness: " + show(*r.witness) + "\n";
            return emit(globals, j, text);
        }

        if (*gamma_cmd) {
            auto table = compute_gamma(g, parse_fraction(rho, "--rho"));
            json j = json::array();
            std::string text;
            for (const auto & s : table.keys()) {
                j.push_back({{"set", to_json(s)}, {"gamma", table.gamma(s)}});
                text += to_string(s) + " " + std::to_string(table.gamma(s)) + "\n";
            }
            return emit(globals, j, text);
        }

        if (*enum_cmd) {
            json j = json::array();
            std::string text;
            for (const auto & s : enumerate_small_connected(g, parse_fraction(rho, "--rho"))) {
                j.push_back(to_json(s));
                text += to_string(s) + "\n";
            }
            return emit(globals, j, text);
        }

        if (*dcs2_cmd || *dcs3_cmd) {
            const VertexSet z1 = parse_vertex_list(z1_text, n), z2 = parse_vertex_list(z2_text, n);
            json j;
            std::string text;
            bool yes = false;
            if (*dcs2_cmd) {
                auto r = solve_2dcs(g, z1, z2);
                yes = r.has_value();
                j = {{"answer", yes ? "yes" : "no"}};
                text = yes ? "yes\nV1=" + to_string(r->v1) + " V2=" + to_string(r->v2) + "\n" : "no\n";
                if (yes)
                    j["partition"] = {to_json(r->v1), to_json(r->v2)};
            } else {
                auto r = solve_3dcs(g, z1, z2);
                yes = r.has_value();
                j = {{"answer", yes ? "yes" : "no"}};
                text = yes ? "yes\nV1=" + to_string(r->v1) + " U=" + to_string(r->u) + " V2=" + to_string(r->v2) + "\n"
                           : "no\n";
                if (yes)
                    j["partition"] = {to_json(r->v1), to_json(r->u), to_json(r->v2)};
            }
            emit(globals, j, text);
            return yes ? 0 : 1;
        }

        if (*p5_cmd) {
            if (!is_connected(g))
                throw Error(ErrorKind::Disconnected, "input graph is not connected");
            auto w = p5_witness(g);
            json j{{"answer", w ? "yes" : "no"}};
            if (w)
                j["witness"] = to_json(*w);
            emit(globals, j, w ? "yes\nwitness: " + show(*w) + "\n" : "no\n");
            return w ? 0 : 1;
        }

        if (*verify_cmd) {
            json input;
            try {
                if (witness_file == "-") {
                    input = json::parse(std::cin);
                } else {
                    std::ifstream in(witness_file);
                    if (!in)
                        throw Error(ErrorKind::Parse, "cannot open " + witness_file);
                    input = json::parse(in);
                }
            } catch (const json::exception & e) {
                throw Error(ErrorKind::Parse, e.what());
            }
            WitnessStructure w;
            try {
                w = parse_witness(input, n);
            } catch (const json::exception & e) {
                throw Error(ErrorKind::Parse, e.what());
            }
            auto check = check_witness(g, w);
            json j{{"valid", check.ok()}, {"t", w.t()}, {"reason", defect_name(check.defect)}};
            if (check.part >= 0)
                j["part"] = check.part;
            std::string text = check.ok() ? "valid P_" + std::to_string(w.t()) + " witness\n"
                                          : "invalid: " + std::string(defect_name(check.defect)) +
                                                (check.part >= 0 ? " (part " + std::to_string(check.part) + ")" : "") + "\n";
            emit(globals, j, text);
            return check.ok() ? 0 : 1;
        }
    } catch (const Error & e) {
        std::cerr << "pathcon: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
