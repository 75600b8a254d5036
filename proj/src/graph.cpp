#include "reeb/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace reeb {

OrientedMultigraph OrientedMultigraph::make(std::vector<std::string> vertices,
                                            std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("duplicate vertex id");
    if (vertices.empty())
        throw std::invalid_argument("graph needs at least one vertex");

    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i].id == edges[i + 1].id)
            throw std::invalid_argument("duplicate edge id: " + edges[i].id);

    auto known = [&](const std::string& v) {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    };
    for (const Edge& e : edges) {
        if (!known(e.src) || !known(e.dst))
            throw std::invalid_argument("edge " + e.id + " has unknown endpoint");
        if (e.src == e.dst)
            throw std::invalid_argument("self-loop at " + e.src);
    }

    // connectivity over the underlying undirected multigraph
    std::map<std::string, std::vector<std::string>> adj;
    for (const Edge& e : edges) {
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
    }
    std::set<std::string> seen{vertices.front()};
    std::vector<std::string> stack{vertices.front()};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        for (const std::string& w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != vertices.size())
        throw std::invalid_argument("not connected");

    OrientedMultigraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    return g;
}

bool OrientedMultigraph::has_vertex(const std::string& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

const Edge& OrientedMultigraph::edge(const std::string& id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, const std::string& s) { return e.id < s; });
    if (it == edges_.end() || it->id != id)
        throw std::invalid_argument("unknown edge id: " + id);
    return *it;
}

std::vector<std::string> OrientedMultigraph::in_edges(const std::string& v) const {
    std::vector<std::string> out;
    for (const Edge& e : edges_)
        if (e.dst == v) out.push_back(e.id);
    return out;
}

std::vector<std::string> OrientedMultigraph::out_edges(const std::string& v) const {
    std::vector<std::string> out;
    for (const Edge& e : edges_)
        if (e.src == v) out.push_back(e.id);
    return out;
}

int betti1(const OrientedMultigraph& g) {
    return static_cast<int>(g.edges().size()) - static_cast<int>(g.vertices().size()) + 1;
}

DegreeProfile degree_profile(const OrientedMultigraph& g, const std::string& v) {
    if (!g.has_vertex(v))
        throw std::invalid_argument("unknown vertex id: " + v);
    DegreeProfile p;
    for (const Edge& e : g.edges()) {
        if (e.dst == v) ++p.deg_in;
        if (e.src == v) ++p.deg_out;
    }
    return p;
}

int delta2(const OrientedMultigraph& g) {
    int n = 0;
    for (const std::string& v : g.vertices())
        if (degree_profile(g, v).deg() == 2) ++n;
    return n;
}

namespace {

using MultMap = std::map<std::pair<std::string, std::string>, int>;

MultMap multiplicities(const OrientedMultigraph& g) {
    MultMap m;
    for (const Edge& e : g.edges()) ++m[{e.src, e.dst}];
    return m;
}

int mult(const MultMap& m, const std::string& u, const std::string& v) {
    auto it = m.find({u, v});
    return it == m.end() ? 0 : it->second;
}

bool extend(const std::vector<std::string>& order, size_t pos,
            const MultMap& m1, const MultMap& m2,
            const std::map<std::string, std::vector<std::string>>& candidates,
            VertexBijection& phi, std::set<std::string>& used) {
    if (pos == order.size()) return true;
    const std::string& v = order[pos];
    for (const std::string& c : candidates.at(v)) {
        if (used.count(c)) continue;
        bool ok = true;
        for (const auto& [u, cu] : phi) {
            if (mult(m1, u, v) != mult(m2, cu, c) || mult(m1, v, u) != mult(m2, c, cu)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        phi[v] = c;
        used.insert(c);
        if (extend(order, pos + 1, m1, m2, candidates, phi, used)) return true;
        phi.erase(v);
        used.erase(c);
    }
    return false;
}

} // namespace

std::optional<VertexBijection> is_isomorphic(const OrientedMultigraph& g1,
                                             const OrientedMultigraph& g2) {
    if (g1.vertices().size() != g2.vertices().size()) return std::nullopt;
    if (g1.edges().size() != g2.edges().size()) return std::nullopt;

    std::map<std::pair<int, int>, std::vector<std::string>> classes2;
    for (const std::string& w : g2.vertices()) {
        DegreeProfile p = degree_profile(g2, w);
        classes2[{p.deg_in, p.deg_out}].push_back(w);
    }
    std::map<std::string, std::vector<std::string>> candidates;
    for (const std::string& v : g1.vertices()) {
        DegreeProfile p = degree_profile(g1, v);
        auto it = classes2.find({p.deg_in, p.deg_out});
        if (it == classes2.end()) return std::nullopt;
        candidates[v] = it->second;
    }
    // class-size census must agree
    std::map<std::pair<int, int>, int> census1;
    for (const std::string& v : g1.vertices()) {
        DegreeProfile p = degree_profile(g1, v);
        ++census1[{p.deg_in, p.deg_out}];
    }
    for (const auto& [key, vs] : classes2)
        if (census1[key] != static_cast<int>(vs.size())) return std::nullopt;

    // most-constrained-first, ties by id
    std::vector<std::string> order = g1.vertices();
    std::stable_sort(order.begin(), order.end(),
                     [&](const std::string& a, const std::string& b) {
                         return candidates[a].size() < candidates[b].size();
                     });

    MultMap m1 = multiplicities(g1), m2 = multiplicities(g2);
    VertexBijection phi;
    std::set<std::string> used;
    if (extend(order, 0, m1, m2, candidates, phi, used)) return phi;
    return std::nullopt;
}

namespace {

std::string fresh_id(const std::string& base, const std::set<std::string>& taken) {
    if (!taken.count(base)) return base;
    for (int i = 0;; ++i) {
        std::string cand = base + "_" + std::to_string(i);
        if (!taken.count(cand)) return cand;
    }
}

} // namespace

OrientedMultigraph subdivide_edge(const OrientedMultigraph& g, const std::string& e) {
    const Edge& old = g.edge(e);
    std::set<std::string> vtaken(g.vertices().begin(), g.vertices().end());
    std::set<std::string> etaken;
    for (const Edge& ed : g.edges()) etaken.insert(ed.id);

    std::string mid = fresh_id(e + "_v", vtaken);
    std::string lo = fresh_id(e + "_a", etaken);
    etaken.insert(lo);
    std::string hi = fresh_id(e + "_b", etaken);

    std::vector<std::string> vs = g.vertices();
    vs.push_back(mid);
    std::vector<Edge> es;
    for (const Edge& ed : g.edges())
        if (ed.id != e) es.push_back(ed);
    es.push_back({lo, old.src, mid});
    es.push_back({hi, mid, old.dst});
    return OrientedMultigraph::make(std::move(vs), std::move(es));
}

OrientedMultigraph gamma0() {
    return OrientedMultigraph::make({"s", "t"}, {{"e", "s", "t"}});
}

bool is_gamma0(const OrientedMultigraph& g) {
    return g.vertices().size() == 2 && g.edges().size() == 1;
}

} // namespace reeb
