#include "reeb/orient.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace reeb {

namespace {

// DFS cycle search; returns the edge ids of one directed cycle.
std::optional<std::vector<std::string>> find_directed_cycle(const OrientedMultigraph& g) {
    enum Color { White, Gray, Black };
    std::map<std::string, Color> color;
    for (const std::string& v : g.vertices()) color[v] = White;

    std::map<std::string, std::vector<const Edge*>> out;
    for (const Edge& e : g.edges()) out[e.src].push_back(&e);

    std::vector<const Edge*> path;
    std::optional<std::vector<std::string>> result;

    std::function<bool(const std::string&)> visit = [&](const std::string& v) {
        color[v] = Gray;
        for (const Edge* e : out[v]) {
            if (color[e->dst] == Gray) {
                // close the cycle: suffix of path from e->dst, plus e
                std::vector<std::string> cyc;
                bool in_cycle = false;
                for (const Edge* pe : path) {
                    if (pe->src == e->dst) in_cycle = true;
                    if (in_cycle) cyc.push_back(pe->id);
                }
                cyc.push_back(e->id);
                result = cyc;
                return true;
            }
            if (color[e->dst] == White) {
                path.push_back(e);
                if (visit(e->dst)) return true;
                path.pop_back();
            }
        }
        color[v] = Black;
        return false;
    };

    for (const std::string& v : g.vertices())
        if (color[v] == White && visit(v)) break;
    return result;
}

} // namespace

OrientationVerdict check_good(const OrientedMultigraph& g) {
    if (auto cyc = find_directed_cycle(g)) {
        OrientationVerdict v;
        v.status = OrientationStatus::OrientedCycle;
        v.cycle_edges = *cyc;
        return v;
    }
    for (const std::string& v : g.vertices()) {
        DegreeProfile p = degree_profile(g, v);
        if (p.deg() >= 2 && (p.deg_in == 0 || p.deg_out == 0)) {
            OrientationVerdict verdict;
            verdict.status = OrientationStatus::BadVertex;
            verdict.bad_vertex = v;
            return verdict;
        }
    }
    return {};
}

namespace {

struct OrientSearch {
    const OrientedMultigraph& g;
    std::vector<Edge> oriented;           // decided prefix, in sorted-edge order
    std::map<std::string, int> in_dec, out_dec, undec, deg;

    explicit OrientSearch(const OrientedMultigraph& graph) : g(graph) {
        for (const std::string& v : g.vertices()) {
            DegreeProfile p = degree_profile(g, v);
            deg[v] = p.deg();
            undec[v] = p.deg();
            in_dec[v] = out_dec[v] = 0;
        }
    }

    bool feasible(const std::string& v) const {
        if (deg.at(v) < 2) return true;
        return in_dec.at(v) + undec.at(v) >= 1 && out_dec.at(v) + undec.at(v) >= 1;
    }

    // would adding src->dst close a directed cycle in the decided prefix?
    bool creates_cycle(const std::string& src, const std::string& dst) const {
        std::set<std::string> seen{dst};
        std::vector<std::string> stack{dst};
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            if (v == src) return true;
            for (const Edge& e : oriented)
                if (e.src == v && seen.insert(e.dst).second) stack.push_back(e.dst);
        }
        return false;
    }

    bool search(size_t i) {
        if (i == g.edges().size()) {
            auto cand = OrientedMultigraph::make(g.vertices(), oriented);
            return check_good(cand).good();
        }
        const Edge& e = g.edges()[i];
        // forward first: lexicographically smallest flip set wins
        for (bool flip : {false, true}) {
            std::string s = flip ? e.dst : e.src;
            std::string d = flip ? e.src : e.dst;
            if (creates_cycle(s, d)) continue;
            oriented.push_back({e.id, s, d});
            --undec[e.src];
            --undec[e.dst];
            ++out_dec[s];
            ++in_dec[d];
            bool ok = feasible(e.src) && feasible(e.dst) && search(i + 1);
            if (ok) return true;
            oriented.pop_back();
            ++undec[e.src];
            ++undec[e.dst];
            --out_dec[s];
            --in_dec[d];
        }
        return false;
    }
};

} // namespace

std::optional<OrientedMultigraph> find_good_orientation(const OrientedMultigraph& g,
                                                        bool ignore_directions) {
    if (!ignore_directions) {
        if (check_good(g).good()) return g;
        return std::nullopt;
    }
    OrientSearch s(g);
    if (s.search(0)) return OrientedMultigraph::make(g.vertices(), s.oriented);
    return std::nullopt;
}

std::map<std::string, int> acyclic_layers(const OrientedMultigraph& g) {
    std::map<std::string, int> indeg, layer;
    for (const std::string& v : g.vertices()) indeg[v] = 0;
    for (const Edge& e : g.edges()) ++indeg[e.dst];

    std::vector<std::string> queue;
    for (const std::string& v : g.vertices())
        if (indeg[v] == 0) {
            queue.push_back(v);
            layer[v] = 0;
        }
    size_t done = 0;
    while (done < queue.size()) {
        std::string v = queue[done++];
        for (const Edge& e : g.edges()) {
            if (e.src != v) continue;
            layer[e.dst] = std::max(layer.count(e.dst) ? layer[e.dst] : 0, layer[v] + 1);
            if (--indeg[e.dst] == 0) queue.push_back(e.dst);
        }
    }
    if (done != g.vertices().size())
        throw std::invalid_argument("directed cycle");
    return layer;
}

LevelFunction level_function(const OrientedMultigraph& g) {
    OrientationVerdict verdict = check_good(g);
    if (!verdict.good())
        throw NotGoodError(verdict, "orientation is not good");

    auto layers = acyclic_layers(g);
    LevelFunction lf;
    for (const auto& [v, l] : layers) lf.values[v] = static_cast<double>(l);

    double min_gap = std::numeric_limits<double>::infinity();
    for (const Edge& e : g.edges())
        min_gap = std::min(min_gap, lf.values[e.dst] - lf.values[e.src]);
    lf.epsilon = g.edges().empty() ? 1.0 / 3.0 : min_gap / 3.0;
    return lf;
}

namespace {

std::string fresh(const std::string& base, std::set<std::string>& taken) {
    std::string cand = base;
    for (int i = 0; taken.count(cand); ++i) cand = base + "_" + std::to_string(i);
    taken.insert(cand);
    return cand;
}

} // namespace

OrientedMultigraph resolve_simple(const OrientedMultigraph& g, bool orientable_target) {
    OrientationVerdict verdict = check_good(g);
    if (!verdict.good())
        throw NotGoodError(verdict, "resolve_simple needs a good orientation");

    std::set<std::string> vnames(g.vertices().begin(), g.vertices().end());
    std::set<std::string> enames;
    std::map<std::string, Edge> edges; // mutable endpoints
    for (const Edge& e : g.edges()) {
        edges[e.id] = e;
        enames.insert(e.id);
    }
    std::vector<std::string> vertices = g.vertices();
    std::set<std::string> removed;

    for (const std::string& v : g.vertices()) {
        DegreeProfile p = degree_profile(g, v);
        int kin = p.deg_in, kout = p.deg_out;
        if (p.deg() <= 1) continue;
        if ((kin == 1 && kout == 2) || (kin == 2 && kout == 1)) continue;
        if (kin == 1 && kout == 1) continue; // handled by the smoothing pass

        std::vector<std::string> ins = g.in_edges(v), outs = g.out_edges(v);

        // merge chain: reduce kin inputs to one stream
        std::string stream; // vertex currently holding the stream
        if (kin >= 2) {
            std::string prev;
            for (int j = 0; j + 1 < kin; ++j) {
                std::string m = fresh(v + "_m" + std::to_string(j + 1), vnames);
                vertices.push_back(m);
                if (j == 0) {
                    edges[ins[0]].dst = m;
                    edges[ins[1]].dst = m;
                } else {
                    std::string link = fresh(v + "_im" + std::to_string(j), enames);
                    edges[link] = {link, prev, m};
                    edges[ins[j + 1]].dst = m;
                }
                prev = m;
            }
            stream = prev;
        }

        // split chain: fan the stream out to kout outputs
        if (kout >= 2) {
            std::string prev;
            for (int j = 0; j + 1 < kout; ++j) {
                std::string s = fresh(v + "_s" + std::to_string(j + 1), vnames);
                vertices.push_back(s);
                if (j == 0) {
                    if (stream.empty()) {
                        edges[ins[0]].dst = s; // kin == 1
                    } else {
                        std::string link = fresh(v + "_b", enames);
                        edges[link] = {link, stream, s};
                    }
                } else {
                    std::string link = fresh(v + "_is" + std::to_string(j), enames);
                    edges[link] = {link, prev, s};
                }
                edges[outs[j]].src = s;
                if (j + 2 == kout) edges[outs[j + 1]].src = s;
                prev = s;
            }
        } else {
            edges[outs[0]].src = stream; // kin >= 2 here
        }
        removed.insert(v);
    }

    // smooth degree-2 pass-through vertices
    if (orientable_target) {
        for (const std::string& v : g.vertices()) {
            DegreeProfile p = degree_profile(g, v);
            if (p.deg_in != 1 || p.deg_out != 1) continue;
            std::string ein, eout;
            for (const auto& [id, e] : edges) {
                if (e.dst == v) ein = id;
                if (e.src == v) eout = id;
            }
            edges[ein].dst = edges[eout].dst;
            edges.erase(eout);
            removed.insert(v);
        }
    }

    std::vector<std::string> vs;
    for (const std::string& v : vertices)
        if (!removed.count(v)) vs.push_back(v);
    std::vector<Edge> es;
    for (const auto& [id, e] : edges) es.push_back(e);
    return OrientedMultigraph::make(std::move(vs), std::move(es));
}

} // namespace reeb
