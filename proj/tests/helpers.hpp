#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "reeb/graph.hpp"
#include "reeb/orient.hpp"

namespace helpers {

using reeb::Edge;
using reeb::OrientedMultigraph;

// m -> a, a -> b (twice), b -> M: the Reeb graph of the torus height function
inline OrientedMultigraph torus_graph() {
    return OrientedMultigraph::make({"m", "a", "b", "M"},
                                    {{"e0", "m", "a"},
                                     {"e1", "a", "b"},
                                     {"e2", "a", "b"},
                                     {"e3", "b", "M"}});
}

// two vertices joined by three parallel edges, all a -> b
inline OrientedMultigraph theta_graph() {
    return OrientedMultigraph::make({"a", "b"},
                                    {{"e0", "a", "b"}, {"e1", "a", "b"}, {"e2", "a", "b"}});
}

inline OrientedMultigraph path_graph(int edges) {
    std::vector<std::string> vs;
    std::vector<Edge> es;
    for (int i = 0; i <= edges; ++i) vs.push_back("p" + std::to_string(i));
    for (int i = 0; i < edges; ++i)
        es.push_back({"e" + std::to_string(i), vs[i], vs[i + 1]});
    return OrientedMultigraph::make(std::move(vs), std::move(es));
}

// cycle-space rank by Gaussian elimination over GF(2); independent of the
// |E| - |V| + 1 formula
inline int cycle_rank_gf2(const OrientedMultigraph& g) {
    std::map<std::string, int> vidx;
    for (const auto& v : g.vertices()) vidx[v] = static_cast<int>(vidx.size());
    // incidence matrix rows = vertices, columns = edges, entries mod 2;
    // cycle space dimension = |E| - rank
    int nv = static_cast<int>(vidx.size());
    int ne = static_cast<int>(g.edges().size());
    std::vector<std::vector<int>> m(nv, std::vector<int>(ne, 0));
    for (int e = 0; e < ne; ++e) {
        m[vidx[g.edges()[e].src]][e] ^= 1;
        m[vidx[g.edges()[e].dst]][e] ^= 1;
    }
    int rank = 0;
    for (int col = 0; col < ne && rank < nv; ++col) {
        int pivot = -1;
        for (int row = rank; row < nv; ++row)
            if (m[row][col]) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int row = 0; row < nv; ++row)
            if (row != rank && m[row][col])
                for (int c = 0; c < ne; ++c) m[row][c] ^= m[rank][c];
        ++rank;
    }
    return ne - rank;
}

// exhaustive isomorphism oracle: try every vertex permutation
inline bool iso_bruteforce(const OrientedMultigraph& g1, const OrientedMultigraph& g2) {
    if (g1.vertices().size() != g2.vertices().size()) return false;
    if (g1.edges().size() != g2.edges().size()) return false;
    std::vector<std::string> v1 = g1.vertices(), v2 = g2.vertices();
    std::sort(v2.begin(), v2.end());
    auto multiset_of = [](const OrientedMultigraph& g,
                          const std::map<std::string, std::string>& phi) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const Edge& e : g.edges()) out.push_back({phi.at(e.src), phi.at(e.dst)});
        std::sort(out.begin(), out.end());
        return out;
    };
    std::map<std::string, std::string> id;
    for (const auto& v : v2) id[v] = v;
    auto target = multiset_of(g2, id);
    do {
        std::map<std::string, std::string> phi;
        for (size_t i = 0; i < v1.size(); ++i) phi[v1[i]] = v2[i];
        if (multiset_of(g1, phi) == target) return true;
    } while (std::next_permutation(v2.begin(), v2.end()));
    return false;
}

// all 2^|E| orientations of the underlying undirected multigraph
inline std::vector<OrientedMultigraph> all_orientations(const OrientedMultigraph& g) {
    std::vector<OrientedMultigraph> out;
    int ne = static_cast<int>(g.edges().size());
    for (int mask = 0; mask < (1 << ne); ++mask) {
        std::vector<Edge> edges;
        for (int i = 0; i < ne; ++i) {
            Edge e = g.edges()[i];
            if (mask & (1 << i)) std::swap(e.src, e.dst);
            edges.push_back(e);
        }
        out.push_back(OrientedMultigraph::make(g.vertices(), std::move(edges)));
    }
    return out;
}

inline bool good_orientation_exists_bruteforce(const OrientedMultigraph& g) {
    for (const auto& o : all_orientations(g))
        if (reeb::check_good(o).good()) return true;
    return false;
}

} // namespace helpers

#endif
