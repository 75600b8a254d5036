#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "reeb/gen.hpp"
#include "reeb/graph.hpp"
#include "reeb/io.hpp"
#include "reeb/mesh.hpp"
#include "reeb/orient.hpp"
#include "reeb/plan.hpp"
#include "reeb/realize.hpp"
#include "reeb/surface.hpp"
#include "reeb/verify.hpp"

using nlohmann::json;
using namespace reeb;

namespace {

OrientedMultigraph load_graph(const std::string& path) {
    return parse_graph(read_file(path));
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    return read_file(path);
}

json verdict_to_json(const RealizabilityVerdict& v) {
    json j;
    j["realizable"] = v.realizable;
    j["function_class"] = to_string(v.function_class);
    if (v.obstruction) j["obstruction"] = to_string(*v.obstruction);
    if (v.obstruction == Obstruction::GenusTooSmall) j["genus_deficit"] = v.genus_deficit;
    if (v.t0) j["t0"] = *v.t0;
    if (v.r0) j["r0"] = *v.r0;
    return j;
}

void print_verdict(const RealizabilityVerdict& v, bool as_json) {
    if (as_json) {
        std::cout << verdict_to_json(v).dump(2) << "\n";
        return;
    }
    if (v.realizable) {
        std::cout << "realizable (" << to_string(v.function_class) << ")";
        if (v.t0) std::cout << ", padding t0 = " << *v.t0;
        if (v.r0) std::cout << ", padding r0 = " << *v.r0;
        std::cout << "\n";
    } else {
        std::cout << "not realizable: " << to_string(*v.obstruction);
        if (v.obstruction == Obstruction::GenusTooSmall)
            std::cout << " (deficit " << v.genus_deficit << ")";
        std::cout << "\n";
    }
}

std::vector<double> load_field(const TriMesh& m, const std::string& spec) {
    if (spec == "x" || spec == "y" || spec == "z") {
        std::vector<double> out;
        int axis = spec == "x" ? 0 : spec == "y" ? 1 : 2;
        for (const auto& p : m.positions) out.push_back(p[axis]);
        return out;
    }
    std::istringstream in(read_file(spec));
    std::vector<double> out;
    double v;
    while (in >> v) out.push_back(v);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reeb-graph realizability toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string graph_path, surface_spec, mode = "finite", plan_path = "-";
    std::string expect_path, off_path, field_spec = "z";
    int dim = 2, max_genus = 6, steps = 12;
    std::uint64_t seed = 0;

    auto* c_check = app.add_subcommand("check-orient", "test a graph for a good orientation");
    c_check->add_option("--graph", graph_path)->required();

    auto* c_orient = app.add_subcommand("orient", "search reorientations for a good one");
    c_orient->add_option("--graph", graph_path)->required();

    auto* c_betti = app.add_subcommand("betti", "first Betti number");
    c_betti->add_option("--graph", graph_path)->required();

    auto* c_rn = app.add_subcommand("reeb-number", "Reeb number of a surface");
    c_rn->add_option("--surface", surface_spec)->required();

    auto* c_realize = app.add_subcommand("realize", "decide realizability on a surface");
    c_realize->add_option("--graph", graph_path)->required();
    c_realize->add_option("--surface", surface_spec);
    c_realize->add_option("--dim", dim);
    c_realize->add_option("--mode", mode)->check(CLI::IsMember({"finite", "morse", "any-n"}));

    auto* c_synth = app.add_subcommand("synth", "build a surface plan witness");
    c_synth->add_option("--graph", graph_path)->required();
    c_synth->add_option("--surface", surface_spec);
    c_synth->add_option("--dim", dim);
    c_synth->add_option("--mode", mode)->check(CLI::IsMember({"finite", "morse", "any-n"}));

    auto* c_verify = app.add_subcommand("verify", "replay a plan and check it");
    c_verify->add_option("--plan", plan_path, "plan JSON, - for stdin");
    c_verify->add_option("--expect", expect_path)->required();

    auto* c_mesh = app.add_subcommand("mesh-reeb", "Reeb graph of a triangulated surface");
    c_mesh->add_option("--off", off_path)->required();
    c_mesh->add_option("--field", field_spec, "x|y|z or a sidecar value file");

    auto* c_table = app.add_subcommand("table", "realizability matrix over genus ranges");
    c_table->add_option("--graph", graph_path)->required();
    c_table->add_option("--max-genus", max_genus);

    auto* c_gen = app.add_subcommand("gen-graph", "random graph with a good orientation");
    c_gen->add_option("--seed", seed);
    c_gen->add_option("--steps", steps);

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough(); // lets trailing --json reach the parent parser

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_check->parsed()) {
            OrientationVerdict v = check_good(load_graph(graph_path));
            if (as_json) {
                json j;
                j["good"] = v.good();
                if (v.status == OrientationStatus::OrientedCycle) {
                    j["status"] = "oriented-cycle";
                    j["cycle_edges"] = v.cycle_edges;
                } else if (v.status == OrientationStatus::BadVertex) {
                    j["status"] = "bad-vertex";
                    j["bad_vertex"] = v.bad_vertex;
                } else {
                    j["status"] = "good";
                }
                std::cout << j.dump(2) << "\n";
            } else if (v.good()) {
                std::cout << "good orientation\n";
            } else if (v.status == OrientationStatus::OrientedCycle) {
                std::cout << "oriented cycle through edges:";
                for (const auto& e : v.cycle_edges) std::cout << " " << e;
                std::cout << "\n";
            } else {
                std::cout << "bad vertex " << v.bad_vertex << " (all-in or all-out)\n";
            }
            return v.good() ? 0 : 1;
        }

        if (c_orient->parsed()) {
            auto oriented = find_good_orientation(load_graph(graph_path));
            if (!oriented) {
                std::cout << (as_json ? "{\"good\":false}\n"
                                      : "no good orientation exists\n");
                return 1;
            }
            if (as_json)
                std::cout << graph_to_json(*oriented).dump(2) << "\n";
            else
                std::cout << to_dot(*oriented);
            return 0;
        }

        if (c_betti->parsed()) {
            int b = betti1(load_graph(graph_path));
            if (as_json)
                std::cout << json{{"betti1", b}}.dump() << "\n";
            else
                std::cout << b << "\n";
            return 0;
        }

        if (c_rn->parsed()) {
            int r = reeb_number(SurfaceDescriptor::parse(surface_spec));
            if (as_json)
                std::cout << json{{"reeb_number", r}}.dump() << "\n";
            else
                std::cout << r << "\n";
            return 0;
        }

        if (c_realize->parsed()) {
            OrientedMultigraph g = load_graph(graph_path);
            RealizabilityVerdict v;
            if (mode == "any-n") {
                // any good orientation suffices on some manifold of dimension n >= 2
                v.realizable = check_good(g).good();
                v.function_class = v.realizable ? FunctionClass::Morse : FunctionClass::None;
                if (!v.realizable) v.obstruction = Obstruction::NoGoodOrientation;
            } else {
                if (surface_spec.empty())
                    throw std::invalid_argument("mode " + mode + " needs --surface");
                SurfaceDescriptor s = SurfaceDescriptor::parse(surface_spec);
                v = mode == "morse" ? decide_morse(g, s) : decide_finite(g, s);
            }
            print_verdict(v, as_json);
            return v.realizable ? 0 : 1;
        }

        if (c_synth->parsed()) {
            OrientedMultigraph g = load_graph(graph_path);
            SurfacePlan p;
            if (mode == "any-n") {
                p = synthesize_any_n(g, dim);
            } else {
                if (surface_spec.empty())
                    throw std::invalid_argument("mode " + mode + " needs --surface");
                p = synthesize(g, SurfaceDescriptor::parse(surface_spec),
                               mode == "morse" ? SynthMode::Morse : SynthMode::Finite);
            }
            std::cout << plan_to_json(p).dump(2) << "\n";
            return 0;
        }

        if (c_verify->parsed()) {
            SurfacePlan p = plan_from_json(json::parse(read_input(plan_path)));
            OrientedMultigraph expected = load_graph(expect_path);
            VerifyReport rep = verify_plan(p, expected);
            if (as_json) {
                json j;
                j["pass"] = rep.pass();
                j["iso"] = bool(rep.iso);
                j["chi_ok"] = rep.chi_ok;
                j["surface_ok"] = rep.surface_ok;
                j["census_ok"] = rep.census_ok;
                j["degree_law_ok"] = rep.degree_law_ok;
                j["reconstructed"] = graph_to_json(rep.reconstructed);
                if (!rep.details.empty()) j["details"] = rep.details;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (rep.pass() ? "plan verifies" : "plan FAILS verification") << "\n";
                if (!rep.details.empty()) std::cout << rep.details << "\n";
            }
            return rep.pass() ? 0 : 1;
        }

        if (c_mesh->parsed()) {
            TriMesh m = parse_off(read_file(off_path));
            set_field_values(m, load_field(m, field_spec));
            m = perturb_simple(m);
            MeshReebResult res = mesh_reeb(m);
            SurfaceLawReport rep = check_surface_laws(m, res);
            if (as_json) {
                json j;
                j["surface"] = rep.surface.spell();
                j["betti1"] = rep.beta1;
                j["graph"] = graph_to_json(res.graph);
                j["raw"] = graph_to_json(res.raw);
                j["census"] = {{"k0", res.k0}, {"k1", res.k1}, {"k2", res.k2}};
                j["multisaddle_count"] = res.multisaddle_count;
                j["saddle_degrees"] = rep.saddle_degrees;
                j["raw_saddle_degrees"] = rep.raw_saddle_degrees;
                j["laws_pass"] = rep.pass();
                j["log"] = res.log;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << to_dot(res.graph);
                std::cout << "surface " << rep.surface.spell() << ", betti1 " << rep.beta1
                          << ", census k0=" << res.k0 << " k1=" << res.k1 << " k2=" << res.k2
                          << ", laws " << (rep.pass() ? "hold" : "VIOLATED") << "\n";
                for (const auto& line : res.log) std::cout << line << "\n";
            }
            return rep.pass() ? 0 : 1;
        }

        if (c_table->parsed()) {
            OrientedMultigraph g = load_graph(graph_path);
            json rows = json::array();
            std::vector<SurfaceDescriptor> surfaces;
            for (int gg = 0; gg <= max_genus; ++gg) surfaces.push_back({true, gg});
            for (int gg = 1; gg <= max_genus; ++gg) surfaces.push_back({false, gg});
            if (!as_json)
                std::cout << "surface  finite  morse\n";
            for (const SurfaceDescriptor& s : surfaces) {
                RealizabilityVerdict f = decide_finite(g, s);
                RealizabilityVerdict mo = decide_morse(g, s);
                if (as_json) {
                    rows.push_back({{"surface", s.spell()},
                                    {"finite", verdict_to_json(f)},
                                    {"morse", verdict_to_json(mo)}});
                } else {
                    std::cout << s.spell() << "\t " << (f.realizable ? "yes" : "no") << "\t "
                              << (mo.realizable ? "yes" : "no") << "\n";
                }
            }
            if (as_json) std::cout << rows.dump(2) << "\n";
            return 0;
        }

        if (c_gen->parsed()) {
            GenOptions opt;
            opt.seed = seed;
            opt.steps = steps;
            OrientedMultigraph g = random_good_graph(opt);
            if (as_json)
                std::cout << graph_to_json(g).dump(2) << "\n";
            else
                std::cout << to_dot(g);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
