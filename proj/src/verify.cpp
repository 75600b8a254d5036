#include "reeb/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reeb {

namespace {

struct Lifeline {
    std::string birth_block;
    std::string edge_id;
};

void check_port_shape(const Block& b) {
    size_t lo = b.lower_ports.size(), up = b.upper_ports.size();
    switch (b.kind) {
        case BlockKind::CapMin:
            if (lo != 0 || up != 1) throw std::invalid_argument("cap-min needs exactly one upper port");
            break;
        case BlockKind::CapMax:
            if (lo != 1 || up != 0) throw std::invalid_argument("cap-max needs exactly one lower port");
            break;
        case BlockKind::DegenerateDeg2:
            if (lo != 1 || up != 1) throw std::invalid_argument("degenerate block needs one port per side");
            break;
        case BlockKind::Interior:
            if (lo < 1 || up < 1) throw std::invalid_argument("interior block needs ports on both sides");
            break;
        case BlockKind::SaekiC:
            if ((lo == 0) == (up == 0)) throw std::invalid_argument("saeki-c block is one-sided");
            break;
    }
}

} // namespace

OrientedMultigraph sweep_reeb(const SurfacePlan& p) {
    validate_plan(p);
    for (const Block& b : p.blocks) check_port_shape(b);

    std::vector<const Block*> order;
    for (const Block& b : p.blocks) order.push_back(&b);
    std::sort(order.begin(), order.end(), [](const Block* a, const Block* b) {
        if (a->critical_value != b->critical_value) return a->critical_value < b->critical_value;
        return a->id < b->id; // shared values processed in id order
    });

    std::map<std::string, const Tube*> tube_at_lower; // keyed by port on the lower block
    for (const Tube& t : p.tubes) tube_at_lower[t.lower_port] = &t;

    std::map<std::string, Lifeline> live; // keyed by the awaiting block's lower port
    std::vector<Edge> edges;
    std::vector<std::string> vertices;

    for (const Block* b : order) {
        vertices.push_back(b->id);
        // consume every circle arriving from below through one vertex
        for (const std::string& port : b->lower_ports) {
            auto it = live.find(port);
            if (it == live.end())
                throw std::runtime_error("no live circle at port " + port + " of block " + b->id);
            edges.push_back({it->second.edge_id, it->second.birth_block, b->id});
            live.erase(it);
        }
        // emit one circle per upper port into its tube
        for (const std::string& port : b->upper_ports) {
            const Tube* t = tube_at_lower.at(port);
            live[t->upper_port] = {b->id, t->edge_id};
        }
    }
    if (!live.empty())
        throw std::runtime_error("sweep finished with live circles remaining");

    return OrientedMultigraph::make(std::move(vertices), std::move(edges));
}

bool orientability_of(const SurfacePlan& p) {
    if (p.dimension != 2)
        throw std::invalid_argument("orientability check is unsupported for n > 2");
    for (const Block& b : p.blocks)
        if (b.r > 0) return false;

    std::map<std::string, int> sign_of_edge;
    for (const Tube& t : p.tubes) sign_of_edge[t.edge_id] = t.sign;

    // spanning tree in sorted edge order; cotree edges close independent cycles
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return parent[x] = x;
        return parent[x] = find(it->second);
    };
    std::map<std::string, std::vector<std::pair<std::string, int>>> tree; // v -> (w, sign)
    std::vector<const Edge*> cotree;
    for (const Edge& e : p.source.edges()) {
        std::string a = find(e.src), b = find(e.dst);
        int s = sign_of_edge.at(e.id);
        if (a == b) {
            cotree.push_back(&e);
        } else {
            parent[a] = b;
            tree[e.src].push_back({e.dst, s});
            tree[e.dst].push_back({e.src, s});
        }
    }

    // sign product along the tree path to the root of each component
    std::map<std::string, int> to_root;
    for (const std::string& v : p.source.vertices()) {
        if (to_root.count(v)) continue;
        to_root[v] = 1;
        std::vector<std::string> stack{v};
        while (!stack.empty()) {
            std::string u = stack.back();
            stack.pop_back();
            for (const auto& [w, s] : tree[u])
                if (!to_root.count(w)) {
                    to_root[w] = to_root[u] * s;
                    stack.push_back(w);
                }
        }
    }

    for (const Edge* e : cotree) {
        int cycle_sign = sign_of_edge.at(e->id) * to_root.at(e->src) * to_root.at(e->dst);
        if (cycle_sign == -1) return false;
    }
    return true;
}

VerifyReport verify_plan(const SurfacePlan& p, const OrientedMultigraph& expected) {
    VerifyReport rep;
    std::ostringstream details;

    rep.reconstructed = sweep_reeb(p);
    rep.iso = is_isomorphic(rep.reconstructed, expected);
    if (!rep.iso) details << "reconstructed graph is not isomorphic to the expected graph; ";

    std::set<double> values;
    for (const Block& b : p.blocks)
        if (!values.insert(b.critical_value).second)
            details << "warning: shared critical value " << b.critical_value
                    << " (processed in block-id order); ";

    bool morse = true;
    rep.census_ok = true;
    for (const Block& b : p.blocks) {
        if (b.degenerate || b.infinite) morse = false;
        if (b.degenerate || b.infinite) {
            if (!b.critical_points.empty()) {
                rep.census_ok = false;
                details << "block " << b.id << " carries a census despite its marker; ";
            }
            continue;
        }
        if (b.critical_points != expected_census(b, p.dimension)) {
            rep.census_ok = false;
            details << "block " << b.id << " census does not match its handle counts; ";
        }
    }

    PlanSummary summary = plan_summary(p);
    if (p.dimension == 2) {
        int chi = *summary.chi;
        rep.chi_ok = true;
        if (morse) {
            int alt = 0;
            for (const auto& [idx, cnt] : summary.census) alt += (idx % 2 == 0 ? cnt : -cnt);
            if (alt != chi) {
                rep.chi_ok = false;
                details << "block-sum chi " << chi << " != index census chi " << alt << "; ";
            }
        }
        if (summary.has_infinite) details << "chi unchecked (infinite block); ";
        if (p.target && chi != euler_characteristic(*p.target)) {
            rep.chi_ok = false;
            details << "chi " << chi << " does not match target " << p.target->spell() << "; ";
        }
        rep.surface_ok = !p.target || (summary.surface && *summary.surface == *p.target);
        if (!rep.surface_ok) details << "recovered surface differs from target; ";
    } else {
        rep.chi_ok = true;
        rep.surface_ok = true;
    }

    rep.degree_law_ok = true;
    for (const Block& b : p.blocks) {
        DegreeProfile prof = degree_profile(rep.reconstructed, b.id);
        if (b.kind == BlockKind::CapMin || b.kind == BlockKind::CapMax) {
            if (prof.deg() != 1) {
                rep.degree_law_ok = false;
                details << "extremum block " << b.id << " has degree " << prof.deg() << "; ";
            }
        } else if (b.kind == BlockKind::DegenerateDeg2) {
            if (prof.deg() != 2) {
                rep.degree_law_ok = false;
                details << "degenerate block " << b.id << " has degree " << prof.deg() << "; ";
            }
        } else if (b.kind == BlockKind::Interior && morse && p.dimension == 2) {
            int points = 0;
            for (const auto& [idx, cnt] : b.critical_points) points += cnt;
            if (points == 1) {
                // a lone index-1 point: degree 3, or 2 at a cross handle
                bool ok = prof.deg() == 3 || (prof.deg() == 2 && b.r > 0);
                if (!ok) {
                    rep.degree_law_ok = false;
                    details << "index-1 block " << b.id << " has degree " << prof.deg() << "; ";
                }
            }
        }
    }

    rep.details = details.str();
    return rep;
}

} // namespace reeb
