#ifndef REEB_GRAPH_HPP
#define REEB_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reeb {

struct Edge {
    std::string id;
    std::string src;
    std::string dst;

    bool operator==(const Edge&) const = default;
};

struct DegreeProfile {
    int deg_in = 0;
    int deg_out = 0;

    int deg() const { return deg_in + deg_out; }
    bool operator==(const DegreeProfile&) const = default;
};

// Finite connected oriented multigraph. Parallel edges allowed, self-loops
// rejected (a level function is strictly monotone on edges). Vertices and
// edges are kept sorted by id so every traversal is reproducible.
class OrientedMultigraph {
public:
    static OrientedMultigraph make(std::vector<std::string> vertices,
                                   std::vector<Edge> edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const std::string& v) const;
    const Edge& edge(const std::string& id) const;

    // Edge ids incident to v, sorted.
    std::vector<std::string> in_edges(const std::string& v) const;
    std::vector<std::string> out_edges(const std::string& v) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

using VertexBijection = std::map<std::string, std::string>;

// |E| - |V| + 1 (graph is connected by construction).
int betti1(const OrientedMultigraph& g);

DegreeProfile degree_profile(const OrientedMultigraph& g, const std::string& v);

// Number of vertices of degree 2.
int delta2(const OrientedMultigraph& g);

// Oriented-multigraph isomorphism by backtracking over vertices, with
// (deg_in, deg_out) classes as the initial partition. Deterministic for a
// fixed input ordering.
std::optional<VertexBijection> is_isomorphic(const OrientedMultigraph& g1,
                                             const OrientedMultigraph& g2);

// Replace edge e by two edges through a fresh degree-2 vertex, keeping the
// orientation of both halves.
OrientedMultigraph subdivide_edge(const OrientedMultigraph& g, const std::string& e);

// The two-vertex one-edge graph, realizable only on the sphere.
OrientedMultigraph gamma0();
bool is_gamma0(const OrientedMultigraph& g);

} // namespace reeb

#endif
