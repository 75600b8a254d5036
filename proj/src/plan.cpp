#include "reeb/plan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "reeb/io.hpp"
#include "reeb/realize.hpp"
#include "reeb/verify.hpp"

namespace reeb {

int Block::chi() const {
    switch (kind) {
        case BlockKind::CapMin:
        case BlockKind::CapMax:
            return 1;
        case BlockKind::Interior:
            return chi_block(k_minus, k_plus, t, r);
        case BlockKind::DegenerateDeg2:
            return 0; // cylinder
        case BlockKind::SaekiC:
            return 2 - (k_minus + k_plus);
    }
    return 0;
}

std::map<int, int> expected_census(const Block& b, int dimension) {
    std::map<int, int> c;
    switch (b.kind) {
        case BlockKind::CapMin:
            c[0] = 1;
            break;
        case BlockKind::CapMax:
            c[dimension] = 1;
            break;
        case BlockKind::Interior:
            if (b.r > 0) {
                c[1] = b.k_minus + b.k_plus + b.r - 2;
            } else {
                if (b.k_minus + b.t - 1 > 0) c[1] += b.k_minus + b.t - 1;
                if (b.k_plus + b.t - 1 > 0) c[dimension - 1] += b.k_plus + b.t - 1;
            }
            break;
        case BlockKind::DegenerateDeg2:
        case BlockKind::SaekiC:
            break;
    }
    return c;
}

namespace {

struct BlockSpec {
    BlockKind kind;
    int t = 0, r = 0;
};

std::string block_id(const std::string& vertex) { return "B." + vertex; }

// The ports mirror the incidence lists: lower_ports follow the sorted
// in-edge ids, upper_ports the sorted out-edge ids.
SurfacePlan assemble(const OrientedMultigraph& g, int dimension, const std::string& mode,
                     std::optional<SurfaceDescriptor> target,
                     const std::map<std::string, BlockSpec>& specs, bool flip_cotree) {
    SurfacePlan p;
    p.dimension = dimension;
    p.mode = mode;
    p.target = target;
    p.source = g;

    auto layers = acyclic_layers(g);
    for (const auto& [v, l] : layers) p.level.values[v] = static_cast<double>(l);
    double min_gap = 1e300;
    for (const Edge& e : g.edges())
        min_gap = std::min(min_gap, p.level.values[e.dst] - p.level.values[e.src]);
    p.level.epsilon = g.edges().empty() ? 1.0 / 3.0 : min_gap / 3.0;

    // distinct critical values: spread vertices sharing a layer by a
    // sub-epsilon offset, keeping every tube gap >= 2*epsilon
    std::map<int, std::vector<std::string>> by_layer;
    for (const auto& [v, l] : layers) by_layer[l].push_back(v);
    std::map<std::string, double> cv;
    for (auto& [l, vs] : by_layer) {
        std::sort(vs.begin(), vs.end());
        int m = static_cast<int>(vs.size());
        for (int j = 0; j < m; ++j)
            cv[vs[j]] = l + p.level.epsilon * j / m;
    }

    std::map<std::string, int> lower_used, upper_used;
    for (const std::string& v : g.vertices()) {
        const BlockSpec& spec = specs.at(v);
        DegreeProfile prof = degree_profile(g, v);
        Block b;
        b.id = block_id(v);
        b.kind = spec.kind;
        b.vertex = v;
        b.critical_value = cv[v];
        b.k_minus = prof.deg_in;
        b.k_plus = prof.deg_out;
        b.t = spec.t;
        b.r = spec.r;
        for (int i = 0; i < prof.deg_in; ++i)
            b.lower_ports.push_back(b.id + ".lo" + std::to_string(i));
        for (int i = 0; i < prof.deg_out; ++i)
            b.upper_ports.push_back(b.id + ".up" + std::to_string(i));
        b.degenerate = spec.kind == BlockKind::DegenerateDeg2;
        b.infinite = spec.kind == BlockKind::SaekiC;
        b.critical_points = expected_census(b, dimension);
        p.blocks.push_back(b);
    }

    std::map<std::string, const Block*> block_of;
    for (const Block& b : p.blocks) block_of[b.vertex] = &b;

    // spanning tree over edges in sorted order; first cotree edge may carry
    // the orientation-reversing gluing
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        if (parent[x].empty() || parent[x] == x) return parent[x] = x;
        return parent[x] = find(parent[x]);
    };
    bool flipped = false;

    for (const Edge& e : g.edges()) {
        Tube t;
        t.edge_id = e.id;
        t.lower_port = block_of[e.src]->upper_ports[upper_used[e.src]++];
        t.upper_port = block_of[e.dst]->lower_ports[lower_used[e.dst]++];
        t.sign = 1;
        std::string a = find(e.src), b = find(e.dst);
        if (a == b) {
            if (flip_cotree && !flipped) {
                t.sign = -1;
                flipped = true;
            }
        } else {
            parent[a] = b;
        }
        p.tubes.push_back(t);
    }
    if (flip_cotree && !flipped)
        throw std::logic_error("no cotree edge available for orientation-reversing gluing");

    validate_plan(p);
    return p;
}

std::string first_padding_site(const OrientedMultigraph& g, bool require_interior) {
    for (const std::string& v : g.vertices()) {
        DegreeProfile p = degree_profile(g, v);
        if (p.deg() < 2) continue;
        if (require_interior && (p.deg_in == 0 || p.deg_out == 0)) continue;
        return v;
    }
    return {};
}

std::string first_degree2_vertex(const OrientedMultigraph& g) {
    for (const std::string& v : g.vertices())
        if (degree_profile(g, v).deg() == 2) return v;
    return {};
}

} // namespace

SurfacePlan synthesize(const OrientedMultigraph& g, const SurfaceDescriptor& target,
                       SynthMode mode) {
    validate(target);
    int b = betti1(g);

    if (mode == SynthMode::Morse) {
        RealizabilityVerdict v = decide_morse(g, target);
        if (!v.realizable)
            throw std::runtime_error("not realizable: " + to_string(*v.obstruction));

        std::map<std::string, BlockSpec> specs;
        int d2 = delta2(g);
        int pad = target.orientable ? target.genus - b - std::max(d2 - 1, 0)
                                    : target.genus - 2 * b - std::max(d2 - 1, 0);
        if (d2 == 0) pad = target.orientable ? target.genus - b : target.genus - 2 * b;
        std::string designated =
            d2 >= 1 ? first_degree2_vertex(g)
                    : (pad > 0 ? first_padding_site(g, true) : std::string{});

        bool any_r = false;
        for (const std::string& v : g.vertices()) {
            DegreeProfile prof = degree_profile(g, v);
            BlockSpec spec{BlockKind::Interior};
            if (prof.deg() == 1) {
                spec.kind = prof.deg_in == 0 ? BlockKind::CapMin : BlockKind::CapMax;
            } else if (v == designated && pad > 0) {
                if (target.orientable)
                    spec.t = pad;
                else
                    spec.r = pad;
            } else if (prof.deg_in == 1 && prof.deg_out == 1) {
                if (target.orientable)
                    spec.t = 1;
                else
                    spec.r = 1;
            }
            any_r = any_r || spec.r > 0;
            specs[v] = spec;
        }
        bool flip = !target.orientable && !any_r;
        return assemble(g, 2, "morse", target, specs, flip);
    }

    RealizabilityVerdict v = decide_acyclic_orientation(g, target);
    if (!v.realizable)
        throw std::runtime_error("not realizable: " + to_string(*v.obstruction));

    int pad = target.orientable ? target.genus - b : target.genus - 2 * b;
    std::string designated;
    if (pad > 0) {
        designated = first_padding_site(g, true);
        if (designated.empty())
            throw std::runtime_error(
                "no padding site with both in- and out-edges; subdivide an edge first");
    }

    std::map<std::string, BlockSpec> specs;
    bool any_r = false;
    for (const std::string& w : g.vertices()) {
        DegreeProfile prof = degree_profile(g, w);
        BlockSpec spec{BlockKind::Interior};
        if (prof.deg() == 1) {
            spec.kind = prof.deg_in == 0 ? BlockKind::CapMin : BlockKind::CapMax;
        } else if (prof.deg_in == 0 || prof.deg_out == 0) {
            spec.kind = BlockKind::SaekiC;
        } else if (w == designated) {
            if (target.orientable)
                spec.t = pad;
            else
                spec.r = pad;
        } else if (prof.deg_in == 1 && prof.deg_out == 1) {
            spec.kind = BlockKind::DegenerateDeg2;
        }
        any_r = any_r || spec.r > 0;
        specs[w] = spec;
    }
    bool flip = !target.orientable && !any_r;
    return assemble(g, 2, "finite", target, specs, flip);
}

SurfacePlan synthesize_any_n(const OrientedMultigraph& g, int dimension) {
    if (dimension < 2)
        throw std::invalid_argument("dimension must be >= 2");
    OrientationVerdict o = check_good(g);
    if (!o.good())
        throw NotGoodError(o, "not realizable: no-good-orientation");

    std::map<std::string, BlockSpec> specs;
    for (const std::string& v : g.vertices()) {
        DegreeProfile prof = degree_profile(g, v);
        if (prof.deg() == 0)
            throw std::invalid_argument("isolated vertex");
        BlockSpec spec{BlockKind::Interior, 1, 0};
        if (prof.deg() == 1) {
            spec.kind = prof.deg_in == 0 ? BlockKind::CapMin : BlockKind::CapMax;
            spec.t = 0;
        }
        specs[v] = spec;
    }
    return assemble(g, dimension, "any-n", std::nullopt, specs, false);
}

PlanSummary plan_summary(const SurfacePlan& p) {
    PlanSummary s;
    for (const Block& b : p.blocks) {
        if (b.degenerate) ++s.degenerate_count;
        if (b.infinite) s.has_infinite = true;
        for (const auto& [idx, cnt] : b.critical_points) s.census[idx] += cnt;
    }
    if (p.dimension == 2) {
        int chi = 0;
        for (const Block& b : p.blocks) chi += b.chi();
        s.chi = chi;
        s.orientable = orientability_of(p);
        s.surface = surface_from_chi(chi, s.orientable);
    }
    return s;
}

void validate_plan(const SurfacePlan& p) {
    if (p.dimension < 2) throw std::invalid_argument("plan dimension must be >= 2");

    std::map<std::string, const Block*> by_lower, by_upper;
    std::set<std::string> block_ids, block_vertices;
    for (const Block& b : p.blocks) {
        if (!block_ids.insert(b.id).second)
            throw std::invalid_argument("duplicate block id " + b.id);
        if (!p.source.has_vertex(b.vertex) || !block_vertices.insert(b.vertex).second)
            throw std::invalid_argument("blocks must be in bijection with source vertices");
        for (const std::string& port : b.lower_ports)
            if (!by_lower.emplace(port, &b).second || by_upper.count(port))
                throw std::invalid_argument("duplicate port " + port);
        for (const std::string& port : b.upper_ports)
            if (!by_upper.emplace(port, &b).second || by_lower.count(port))
                throw std::invalid_argument("duplicate port " + port);
    }
    if (block_vertices.size() != p.source.vertices().size())
        throw std::invalid_argument("blocks must be in bijection with source vertices");

    std::set<std::string> used_ports, tube_edges;
    for (const Tube& t : p.tubes) {
        const Edge& e = p.source.edge(t.edge_id); // throws on unknown edge
        if (!tube_edges.insert(t.edge_id).second)
            throw std::invalid_argument("duplicate tube for edge " + t.edge_id);
        auto lo = by_upper.find(t.lower_port);
        auto hi = by_lower.find(t.upper_port);
        if (lo == by_upper.end())
            throw std::invalid_argument("tube lower port " + t.lower_port +
                                        " is not an upper port of any block");
        if (hi == by_lower.end())
            throw std::invalid_argument("tube upper port " + t.upper_port +
                                        " is not a lower port of any block");
        if (lo->second->vertex != e.src || hi->second->vertex != e.dst)
            throw std::invalid_argument("tube " + t.edge_id +
                                        " does not follow its source edge");
        if (!used_ports.insert(t.lower_port).second || !used_ports.insert(t.upper_port).second)
            throw std::invalid_argument("port used by two tubes");
        if (lo->second->critical_value + p.level.epsilon >
            hi->second->critical_value - p.level.epsilon + 1e-9)
            throw std::invalid_argument("tube " + t.edge_id + " violates value ordering");
        if (t.sign != 1 && t.sign != -1)
            throw std::invalid_argument("tube sign must be +1 or -1");
        if (t.sign == -1 && p.dimension != 2)
            throw std::invalid_argument("orientation-reversing tube needs n = 2");
    }
    if (tube_edges.size() != p.source.edges().size())
        throw std::invalid_argument("tubes must be in bijection with source edges");
    if (used_ports.size() != by_lower.size() + by_upper.size())
        throw std::invalid_argument("unused port in plan");

    for (const Block& b : p.blocks) {
        if (b.r > 0 && (p.dimension != 2 || b.t != 0))
            throw std::invalid_argument("cross handles need n = 2 and t = 0");
        if (b.kind == BlockKind::Interior && b.t == 0 && b.r == 0 && b.k_minus < 2 &&
            b.k_plus < 2)
            throw std::invalid_argument("t = 0 interior block needs k- or k+ >= 2");
    }
}

std::string to_string(BlockKind k) {
    switch (k) {
        case BlockKind::CapMin: return "cap-min";
        case BlockKind::CapMax: return "cap-max";
        case BlockKind::Interior: return "interior";
        case BlockKind::DegenerateDeg2: return "degenerate-deg2";
        case BlockKind::SaekiC: return "saeki-c";
    }
    return "?";
}

namespace {

BlockKind kind_from_string(const std::string& s) {
    if (s == "cap-min") return BlockKind::CapMin;
    if (s == "cap-max") return BlockKind::CapMax;
    if (s == "interior") return BlockKind::Interior;
    if (s == "degenerate-deg2") return BlockKind::DegenerateDeg2;
    if (s == "saeki-c") return BlockKind::SaekiC;
    throw std::invalid_argument("unknown block kind: " + s);
}

} // namespace

nlohmann::json plan_to_json(const SurfacePlan& p) {
    nlohmann::json j;
    j["dimension"] = p.dimension;
    j["mode"] = p.mode;
    if (p.target) j["target"] = p.target->spell();
    j["level"] = {{"values", p.level.values}, {"epsilon", p.level.epsilon}};
    j["source"] = graph_to_json(p.source);
    j["blocks"] = nlohmann::json::array();
    for (const Block& b : p.blocks) {
        nlohmann::json jb{{"id", b.id},
                          {"kind", to_string(b.kind)},
                          {"vertex", b.vertex},
                          {"critical_value", b.critical_value},
                          {"k_minus", b.k_minus},
                          {"k_plus", b.k_plus},
                          {"t", b.t},
                          {"r", b.r},
                          {"lower_ports", b.lower_ports},
                          {"upper_ports", b.upper_ports}};
        if (b.degenerate)
            jb["critical_points"] = "degenerate";
        else if (b.infinite)
            jb["critical_points"] = "infinite";
        else {
            nlohmann::json c = nlohmann::json::object();
            for (const auto& [idx, cnt] : b.critical_points) c[std::to_string(idx)] = cnt;
            jb["critical_points"] = c;
        }
        j["blocks"].push_back(jb);
    }
    j["tubes"] = nlohmann::json::array();
    for (const Tube& t : p.tubes)
        j["tubes"].push_back({{"edge", t.edge_id},
                              {"lower_port", t.lower_port},
                              {"upper_port", t.upper_port},
                              {"sign", t.sign}});
    return j;
}

SurfacePlan plan_from_json(const nlohmann::json& j) {
    SurfacePlan p;
    p.dimension = j.at("dimension").get<int>();
    p.mode = j.at("mode").get<std::string>();
    if (j.contains("target"))
        p.target = SurfaceDescriptor::parse(j.at("target").get<std::string>());
    p.level.values = j.at("level").at("values").get<std::map<std::string, double>>();
    p.level.epsilon = j.at("level").at("epsilon").get<double>();
    p.source = graph_from_json(j.at("source"));
    for (const auto& jb : j.at("blocks")) {
        Block b;
        b.id = jb.at("id").get<std::string>();
        b.kind = kind_from_string(jb.at("kind").get<std::string>());
        b.vertex = jb.at("vertex").get<std::string>();
        b.critical_value = jb.at("critical_value").get<double>();
        b.k_minus = jb.at("k_minus").get<int>();
        b.k_plus = jb.at("k_plus").get<int>();
        b.t = jb.at("t").get<int>();
        b.r = jb.at("r").get<int>();
        b.lower_ports = jb.at("lower_ports").get<std::vector<std::string>>();
        b.upper_ports = jb.at("upper_ports").get<std::vector<std::string>>();
        const auto& cp = jb.at("critical_points");
        if (cp.is_string() && cp.get<std::string>() == "degenerate")
            b.degenerate = true;
        else if (cp.is_string() && cp.get<std::string>() == "infinite")
            b.infinite = true;
        else
            for (const auto& [key, val] : cp.items())
                b.critical_points[std::stoi(key)] = val.get<int>();
        p.blocks.push_back(b);
    }
    for (const auto& jt : j.at("tubes")) {
        Tube t;
        t.edge_id = jt.at("edge").get<std::string>();
        t.lower_port = jt.at("lower_port").get<std::string>();
        t.upper_port = jt.at("upper_port").get<std::string>();
        t.sign = jt.at("sign").get<int>();
        p.tubes.push_back(t);
    }
    return p;
}

} // namespace reeb
