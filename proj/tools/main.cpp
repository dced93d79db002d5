// arcdelta: exact hyperbolicity and covering analysis of circular-arc
// families, with machine-readable JSON on stdout for every command.
//
// Exit codes: 0 success, 2 parse/usage error, 3 size-limit refusal,
// 4 proved-bound violation (library bug), 5 cap saturation.

#include "cag/classify.hpp"
#include "cag/cover.hpp"
#include "cag/errors.hpp"
#include "cag/generators.hpp"
#include "cag/hyperbolicity.hpp"
#include "cag/intersection.hpp"
#include "cag/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

struct Input {
    std::optional<cag::ArcFamily> family;
    std::optional<cag::UnitGraph> graph;
};

// Arc-family lines carry two or three tokens; an edge list leads with a
// lone vertex count. Sniff the first payload line.
Input load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cag::input_error("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    std::istringstream scan(text);
    std::string line;
    bool looks_like_graph = false;
    while (std::getline(scan, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first, second;
        if (!(ls >> first)) continue;
        looks_like_graph = !(ls >> second) && first.find_first_not_of("0123456789") == std::string::npos;
        break;
    }
    Input input;
    std::istringstream payload(text);
    if (looks_like_graph) {
        input.graph = cag::read_edge_list(payload);
    } else {
        input.family = cag::read_arc_family(payload);
    }
    return input;
}

cag::ArcFamily need_family(const Input& input, const std::string& verb) {
    if (!input.family) throw cag::input_error(verb + " needs an arc-family input");
    return *input.family;
}

cag::UnitGraph input_graph(const Input& input) {
    if (input.graph) return *input.graph;
    return cag::build(*input.family).graph;
}

json point_json(const cag::GraphPoint& p) {
    if (p.is_vertex()) return json{{"vertex", p.vertex()}};
    return json{{"edge", {p.edge_u(), p.edge_v()}}, {"offset", p.offset().str()}};
}

json delta_json(const cag::DeltaReport& report) {
    json j;
    j["delta"] = report.delta.str();
    j["saturated"] = report.saturated;
    if (report.witness) {
        json w;
        for (const auto& c : report.witness->corners) w["corners"].push_back(point_json(c));
        for (const auto& side : report.witness->sides) {
            json s = json::array();
            for (const auto& p : side) s.push_back(point_json(p));
            w["sides"].push_back(s);
        }
        w["point"] = point_json(*report.witness_point);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

void emit(const json& j, bool compact) {
    if (compact) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw cag::input_error("cannot write '" + path + "'");
    out << content;
}

struct CheckRow {
    std::string name;
    std::string status;  // pass | fail | skip
    std::string detail;
};

// Every theorem-backed predicate applicable to the family. A check
// whose cycle enumeration saturates is reported inconclusive, never as
// a failure.
std::vector<CheckRow> run_verification(const cag::ArcModel& model, const cag::DeltaOptions& dopts,
                                       const cag::ClassifyOptions& copts) {
    std::vector<CheckRow> rows;
    auto add = [&rows](const std::string& name, bool ok, const std::string& detail) {
        rows.push_back({name, ok ? "pass" : "fail", detail});
    };
    auto skip = [&rows](const std::string& name, const std::string& why) {
        rows.push_back({name, "skip", why});
    };
    auto guarded = [&rows](const std::string& name, auto&& body) {
        try {
            body();
        } catch (const cag::saturation_error& e) {
            rows.push_back({name, "inconclusive", e.what()});
        }
    };

    cag::QuarterValue delta = cag::delta_sup(model.graph, dopts).delta;
    int rho_value = cag::rho(model.family).rho;

    guarded("main_bounds", [&] {
        cag::CircularReport report = cag::verify_main_bounds(model, dopts, copts);
        add("main_bounds", true, "delta " + report.delta.str() + " in [" + report.lower.str() +
                                     ", " + report.upper.str() + "]");
        bool zero = report.zero_property == cag::TriState::holds;
        bool three_quarter = report.three_quarter_property == cag::TriState::holds;
        add("zero_property_iff_delta_0", zero == (delta == cag::QuarterValue(cag::Rational(0))),
            std::string("property ") + (zero ? "holds" : "fails") + ", delta " + delta.str());
        add("three_quarter_property_iff_delta_3_4",
            three_quarter == (delta == cag::QuarterValue(cag::Rational(3, 4))),
            std::string("property ") + (three_quarter ? "holds" : "fails") + ", delta " +
                delta.str());
        if (report.rho_prop == cag::TriState::not_applicable) {
            skip("rho_property_forward", "rho < 3");
        } else if (report.rho_prop == cag::TriState::holds) {
            add("rho_property_forward", delta == cag::QuarterValue(cag::Rational(report.rho, 4)),
                "property holds, delta " + delta.str());
        } else {
            skip("rho_property_forward", "property fails (no claim on delta)");
        }
        if (report.rho == 3 || report.rho == 4) {
            bool is_quarter = delta == cag::QuarterValue(cag::Rational(report.rho, 4));
            add("rho_property_converse", !is_quarter || report.rho_prop == cag::TriState::holds,
                "delta " + delta.str() + ", property " + cag::tri_state_name(report.rho_prop));
        } else {
            skip("rho_property_converse", "rho outside {3, 4}");
        }
    });

    cag::ComplementBounds cb = cag::complement_bounds(model, dopts);
    add("complement_bounds", true,
        "delta " + cb.delta_complement.str() + " in [" + cb.lower.str() + ", " + cb.upper.str() +
            "]" + (cb.generic_fallback ? " (diameter bound only)" : ""));
    if (rho_value > 4) {
        add("complement_two_values",
            cb.delta_complement == cag::QuarterValue(cag::Rational(5, 4)) ||
                cb.delta_complement == cag::QuarterValue(cag::Rational(3, 2)),
            "delta " + cb.delta_complement.str());
        add("common_neighbor_adjacency", cag::adjacency_forced_by_common_neighbors(model.graph),
            "no non-adjacent pair with non-adjacent common neighbors");
    } else {
        skip("complement_two_values", "rho <= 4");
        skip("common_neighbor_adjacency", "rho <= 4");
    }
    if (rho_value >= 7) {
        add("complement_strictly_below", cb.delta_complement < delta,
            cb.delta_complement.str() + " < " + delta.str());
    } else {
        skip("complement_strictly_below", "rho < 7");
    }
    if (rho_value == 0 || rho_value >= 4) {
        add("nordhaus_gaddum", cag::nordhaus_gaddum_check(model, dopts), "sum/product inequalities");
    } else {
        skip("nordhaus_gaddum", "rho in {1, 2, 3}");
    }
    if (model.graph.m() > 0) {
        cag::LineBounds lb = cag::line_bounds(model, dopts);
        add("line_bounds", true,
            "delta " + lb.delta_line.str() + " in [" + lb.lower.str() + ", " + lb.upper.str() + "]");
        cag::LineModel lm = cag::line_graph(model.graph);
        add("line_midpoint_isometry", cag::check_h_isometry(lm), "all line vertex pairs");
    } else {
        skip("line_bounds", "no edges");
        skip("line_midpoint_isometry", "no edges");
    }
    add("common_neighbor_covering", cag::covering_forced_by_common_neighbors(model),
        "pattern occurrences cover the circle");
    auto rd = cag::regular_delta(model.graph);
    if (rd) {
        add("regular_dichotomy", delta == cag::QuarterValue(*rd), "predicted " + rd->str());
    } else {
        skip("regular_dichotomy", "not (n-3)-regular with n >= 5");
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact delta / rho toolkit for circular-arc graphs"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    bool compact = false;
    long long geodesic_cap = 10000;
    long long cycle_cap = 100000;
    uint64_t seed = 1;
    app.add_flag("--json", compact, "compact single-line JSON output");

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input) cmd->add_option("input", in_path, "input file")->required();
        cmd->add_option("--geodesic-cap", geodesic_cap, "geodesics enumerated per point pair");
        cmd->add_option("--cycle-cap", cycle_cap, "simple cycles enumerated per graph");
    };

    CLI::App* cmd_build = app.add_subcommand("build", "intersection graph of an arc family");
    add_common(cmd_build);
    cmd_build->add_option("-o,--output", out_path, "write edge list here");

    CLI::App* cmd_delta = app.add_subcommand("delta", "exact hyperbolicity constant");
    add_common(cmd_delta);

    CLI::App* cmd_rho = app.add_subcommand("rho", "minimum circular cover");
    add_common(cmd_rho);

    CLI::App* cmd_classify = app.add_subcommand("classify", "intersection properties and bounds");
    add_common(cmd_classify);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run every applicable predicate");
    add_common(cmd_verify);
    bool verify_all = false;
    cmd_verify->add_flag("--all", verify_all, "accepted for compatibility; always runs all");

    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a named family or graph");
    std::string gen_name;
    std::vector<std::string> gen_params;
    cmd_gen->add_option("name", gen_name, "family name")->required();
    cmd_gen->add_option("--param", gen_params, "key=value parameter")->take_all();
    cmd_gen->add_option("--seed", seed, "random seed");
    cmd_gen->add_option("-o,--output", out_path, "write the family/graph here");

    CLI::App* cmd_complement = app.add_subcommand("complement", "complement graph");
    add_common(cmd_complement);
    cmd_complement->add_option("-o,--output", out_path, "write edge list here");

    CLI::App* cmd_line = app.add_subcommand("line", "line graph");
    add_common(cmd_line);
    cmd_line->add_option("-o,--output", out_path, "write edge list here");

    CLI::App* cmd_oracle = app.add_subcommand("oracle", "brute-force cross-check values");
    add_common(cmd_oracle);

    CLI11_PARSE(app, argc, argv);

    cag::DeltaOptions dopts{geodesic_cap};
    cag::ClassifyOptions copts;
    copts.cycle_cap = cycle_cap;

    try {
        if (cmd_build->parsed()) {
            cag::ArcModel model = cag::build(need_family(load_input(in_path), "build"));
            json j{{"n", model.graph.n()}, {"m", model.graph.m()}, {"labels", model.family.labels}};
            if (!out_path.empty()) write_file(out_path, cag::edge_list_to_string(model.graph));
            emit(j, compact);
        } else if (cmd_delta->parsed()) {
            cag::DeltaReport report = cag::delta_sup(input_graph(load_input(in_path)), dopts);
            emit(delta_json(report), compact);
            if (report.saturated) return 5;
        } else if (cmd_rho->parsed()) {
            cag::CoverResult r = cag::rho(need_family(load_input(in_path), "rho"));
            emit(json{{"rho", r.rho}, {"witness", r.witness_labels}}, compact);
        } else if (cmd_classify->parsed()) {
            cag::ArcModel model = cag::build(need_family(load_input(in_path), "classify"));
            // rho and delta never saturate on the cycle cap; emit them
            // even when a property check has to be refused.
            json j{{"rho", cag::rho(model.family).rho},
                   {"proper", cag::is_proper(model.family)},
                   {"delta", cag::delta_sup(model.graph, dopts).delta.str()}};
            try {
                cag::CircularReport report = cag::verify_main_bounds(model, dopts, copts);
                j["bounds"] = {{"lower", report.lower.str()}, {"upper", report.upper.str()}};
                j["flags"] = {
                    {"zero_property", cag::tri_state_name(report.zero_property)},
                    {"three_quarter_property", cag::tri_state_name(report.three_quarter_property)},
                    {"rho_property", cag::tri_state_name(report.rho_prop)}};
                if (!cag::covers_circle(model.family)) {
                    cag::IntervalClass c = cag::interval_property(cag::to_interval(model), copts);
                    j["interval"] = {{"property", cag::interval_property_name(c.property)},
                                     {"predicted_delta", c.predicted_delta.str()}};
                } else {
                    j["interval"] = nullptr;
                }
            } catch (const cag::saturation_error& e) {
                j["refused"] = e.what();
                emit(j, compact);
                return 5;
            }
            emit(j, compact);
        } else if (cmd_verify->parsed()) {
            cag::ArcModel model = cag::build(need_family(load_input(in_path), "verify"));
            std::vector<CheckRow> rows = run_verification(model, dopts, copts);
            bool ok = true, conclusive = true;
            json checks = json::array();
            for (const CheckRow& row : rows) {
                checks.push_back({{"name", row.name}, {"status", row.status}, {"detail", row.detail}});
                ok = ok && row.status != "fail";
                conclusive = conclusive && row.status != "inconclusive";
            }
            emit(json{{"ok", ok}, {"checks", checks}}, compact);
            if (!ok) return 4;
            if (!conclusive) return 5;
        } else if (cmd_gen->parsed()) {
            cag::FamilySpec spec;
            spec.name = gen_name;
            spec.seed = seed;
            for (const std::string& kv : gen_params) {
                size_t eq = kv.find('=');
                if (eq == std::string::npos) throw cag::input_error("--param expects key=value");
                spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            cag::Generated gen = cag::generate(spec);
            std::string payload =
                gen.family ? cag::arc_family_to_string(*gen.family) : cag::edge_list_to_string(*gen.graph);
            if (!out_path.empty()) {
                write_file(out_path, payload);
            } else {
                std::cout << payload;
            }
            json j{{"kind", gen.family ? "arcs" : "graph"},
                   {"size", gen.family ? gen.family->size() : static_cast<size_t>(gen.graph->n())}};
            if (!out_path.empty()) {
                j["written"] = out_path;
                emit(j, compact);
            }
        } else if (cmd_complement->parsed()) {
            cag::UnitGraph comp = cag::complement(input_graph(load_input(in_path)));
            if (!out_path.empty()) write_file(out_path, cag::edge_list_to_string(comp));
            else std::cout << cag::edge_list_to_string(comp);
            if (!out_path.empty()) emit(json{{"n", comp.n()}, {"m", comp.m()}}, compact);
        } else if (cmd_line->parsed()) {
            cag::LineModel lm = cag::line_graph(input_graph(load_input(in_path)));
            if (!out_path.empty()) write_file(out_path, cag::edge_list_to_string(lm.line));
            else std::cout << cag::edge_list_to_string(lm.line);
            if (!out_path.empty()) emit(json{{"n", lm.line.n()}, {"m", lm.line.m()}}, compact);
        } else if (cmd_oracle->parsed()) {
            Input input = load_input(in_path);
            json j;
            if (input.family) {
                j["rho_oracle"] = cag::rho_oracle(*input.family);
                j["delta_oracle"] = cag::delta_oracle(cag::build(*input.family).graph, dopts).str();
            } else {
                j["delta_oracle"] = cag::delta_oracle(*input.graph, dopts).str();
            }
            emit(j, compact);
        }
    } catch (const cag::bound_violation_error& e) {
        std::cerr << "bound violation (library bug): " << e.what() << "\n";
        return 4;
    } catch (const cag::size_limit_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const cag::saturation_error& e) {
        std::cerr << "saturated: " << e.what() << "\n";
        return 5;
    } catch (const cag::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
