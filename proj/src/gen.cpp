#include "reeb/gen.hpp"

#include <random>
#include <string>
#include <vector>

#include "reeb/orient.hpp"

namespace reeb {

namespace {

std::string fresh_vertex(const OrientedMultigraph& g, int& counter) {
    std::string v;
    do {
        v = "w" + std::to_string(counter++);
    } while (g.has_vertex(v));
    return v;
}

std::string fresh_edge(const OrientedMultigraph& g, int& counter) {
    for (;;) {
        std::string id = "f" + std::to_string(counter++);
        bool taken = false;
        for (const Edge& e : g.edges())
            if (e.id == id) taken = true;
        if (!taken) return id;
    }
}

} // namespace

OrientedMultigraph random_good_graph(const GenOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    OrientedMultigraph g = gamma0();
    int vcounter = 0, ecounter = 0;

    int accepted = 0, attempts = 0;
    while (accepted < opt.steps && attempts < opt.steps * 20) {
        ++attempts;
        int kind = static_cast<int>(rng() % 3);

        if (kind == 0) { // subdivide a random edge
            if (static_cast<int>(g.vertices().size()) >= opt.max_vertices) continue;
            const Edge& e = g.edges()[rng() % g.edges().size()];
            g = subdivide_edge(g, e.id);
            ++accepted;
            continue;
        }

        std::vector<std::string> verts = g.vertices();
        std::vector<Edge> edges = g.edges();

        if (kind == 1) { // attach a leaf above or below a random vertex
            if (static_cast<int>(verts.size()) >= opt.max_vertices) continue;
            std::string v = verts[rng() % verts.size()];
            std::string w = fresh_vertex(g, vcounter);
            std::string id = fresh_edge(g, ecounter);
            bool upward = rng() % 2 == 0;
            verts.push_back(w);
            edges.push_back(upward ? Edge{id, v, w} : Edge{id, w, v});
        } else { // close a cycle with a level-respecting edge
            if (betti1(g) >= opt.max_beta1) continue;
            std::map<std::string, int> layer = acyclic_layers(g);
            std::string u = verts[rng() % verts.size()];
            std::string v = verts[rng() % verts.size()];
            if (u == v || layer[u] >= layer[v]) continue;
            edges.push_back({fresh_edge(g, ecounter), u, v});
        }

        OrientedMultigraph candidate = OrientedMultigraph::make(std::move(verts), std::move(edges));
        if (check_good(candidate).good()) {
            g = std::move(candidate);
            ++accepted;
        }
    }
    return g;
}

} // namespace reeb
