#include "reeb/mesh.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "reeb/orient.hpp"

namespace reeb {

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) lines.push_back(line);
    }
    return lines;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

TriMesh parse_off(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.empty())
        throw std::invalid_argument("empty OFF input");

    size_t li = 0;
    std::istringstream header(lines[li++]);
    std::string magic;
    header >> magic;
    if (magic != "OFF")
        throw std::invalid_argument("missing OFF header");
    long nv = -1, nf = -1, ne = -1;
    if (!(header >> nv >> nf >> ne)) {
        if (li >= lines.size())
            throw std::invalid_argument("missing OFF counts");
        std::istringstream counts(lines[li++]);
        if (!(counts >> nv >> nf >> ne))
            throw std::invalid_argument("bad OFF counts");
    }
    if (nv < 0 || nf < 0)
        throw std::invalid_argument("bad OFF counts");

    TriMesh m;
    for (long i = 0; i < nv; ++i) {
        if (li >= lines.size())
            throw std::invalid_argument("truncated OFF vertex list");
        std::istringstream vs(lines[li++]);
        std::array<double, 3> p{};
        if (!(vs >> p[0] >> p[1] >> p[2]))
            throw std::invalid_argument("bad OFF vertex line");
        m.positions.push_back(p);
    }
    for (long i = 0; i < nf; ++i) {
        if (li >= lines.size())
            throw std::invalid_argument("truncated OFF face list");
        std::istringstream fs(lines[li++]);
        int k;
        if (!(fs >> k))
            throw std::invalid_argument("bad OFF face line");
        if (k != 3)
            throw std::invalid_argument("non-triangle face");
        std::array<int, 3> t{};
        if (!(fs >> t[0] >> t[1] >> t[2]))
            throw std::invalid_argument("bad OFF face line");
        for (int v : t)
            if (v < 0 || v >= nv)
                throw std::invalid_argument("face index out of range");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw std::invalid_argument("degenerate face");
        m.triangles.push_back(t);
    }
    return m;
}

void set_field_axis(TriMesh& m, int axis) {
    if (axis < 0 || axis > 2)
        throw std::invalid_argument("axis must be 0, 1 or 2");
    m.field.clear();
    for (const auto& p : m.positions) m.field.push_back(p[axis]);
}

void set_field_values(TriMesh& m, std::vector<double> values) {
    if (values.size() != m.positions.size())
        throw std::invalid_argument("field size does not match vertex count");
    m.field = std::move(values);
}

void validate_mesh(const TriMesh& m) {
    if (m.positions.empty() || m.triangles.empty())
        throw std::invalid_argument("empty mesh");

    std::set<std::array<int, 3>> face_sets;
    for (auto t : m.triangles) {
        std::sort(t.begin(), t.end());
        if (!face_sets.insert(t).second)
            throw std::invalid_argument("non-manifold duplicate face");
    }

    std::map<EdgeKey, int> edge_count;
    for (const auto& t : m.triangles)
        for (int i = 0; i < 3; ++i) ++edge_count[key(t[i], t[(i + 1) % 3])];
    for (const auto& [e, c] : edge_count) {
        if (c == 1) throw std::invalid_argument("boundary edge");
        if (c > 2) throw std::invalid_argument("non-manifold edge");
    }

    // vertex links must be single cycles
    int nv = static_cast<int>(m.positions.size());
    std::vector<std::vector<EdgeKey>> link(nv);
    for (const auto& t : m.triangles)
        for (int i = 0; i < 3; ++i)
            link[t[i]].push_back(key(t[(i + 1) % 3], t[(i + 2) % 3]));
    for (int v = 0; v < nv; ++v) {
        if (link[v].empty()) throw std::invalid_argument("not connected");
        std::map<int, int> touch;
        for (const auto& [a, b] : link[v]) {
            ++touch[a];
            ++touch[b];
        }
        for (const auto& [w, c] : touch)
            if (c != 2) throw std::invalid_argument("non-manifold vertex link");
        // connectivity of the link
        std::map<int, std::vector<int>> adj;
        for (const auto& [a, b] : link[v]) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::set<int> seen{adj.begin()->first};
        std::vector<int> stack{adj.begin()->first};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != touch.size()) throw std::invalid_argument("non-manifold vertex link");
    }

    // surface connectivity
    Dsu dsu(nv);
    for (const auto& t : m.triangles) {
        dsu.unite(t[0], t[1]);
        dsu.unite(t[1], t[2]);
    }
    int root = dsu.find(0);
    for (int v = 0; v < nv; ++v)
        if (dsu.find(v) != root) throw std::invalid_argument("not connected");
}

bool mesh_orientable(const TriMesh& m) {
    // propagate triangle orientations across shared edges
    std::map<EdgeKey, std::vector<int>> tris_of_edge;
    for (size_t i = 0; i < m.triangles.size(); ++i) {
        const auto& t = m.triangles[i];
        for (int j = 0; j < 3; ++j)
            tris_of_edge[key(t[j], t[(j + 1) % 3])].push_back(static_cast<int>(i));
    }
    auto uses_directed = [&](int tri, int a, int b) {
        const auto& t = m.triangles[tri];
        for (int j = 0; j < 3; ++j)
            if (t[j] == a && t[(j + 1) % 3] == b) return true;
        return false;
    };

    std::vector<int> sign(m.triangles.size(), 0);
    for (size_t seed = 0; seed < m.triangles.size(); ++seed) {
        if (sign[seed] != 0) continue;
        sign[seed] = 1;
        std::vector<int> stack{static_cast<int>(seed)};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            const auto& t = m.triangles[cur];
            for (int j = 0; j < 3; ++j) {
                int a = t[j], b = t[(j + 1) % 3];
                for (int other : tris_of_edge[key(a, b)]) {
                    if (other == cur) continue;
                    // compatible orientations traverse a shared edge oppositely
                    int expect = uses_directed(other, a, b) ? -sign[cur] : sign[cur];
                    if (sign[other] == 0) {
                        sign[other] = expect;
                        stack.push_back(other);
                    } else if (sign[other] != expect) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

int mesh_chi(const TriMesh& m) {
    std::set<EdgeKey> edges;
    for (const auto& t : m.triangles)
        for (int j = 0; j < 3; ++j) edges.insert(key(t[j], t[(j + 1) % 3]));
    return static_cast<int>(m.positions.size()) - static_cast<int>(edges.size()) +
           static_cast<int>(m.triangles.size());
}

SurfaceDescriptor mesh_surface(const TriMesh& m) {
    return surface_from_chi(mesh_chi(m), mesh_orientable(m));
}

namespace {

// (value, index) lexicographic order: the single perturbation rule
struct FieldOrder {
    const TriMesh& m;
    bool operator()(int a, int b) const {
        if (m.field[a] != m.field[b]) return m.field[a] < m.field[b];
        return a < b;
    }
};

int count_components(const std::vector<int>& nodes, const std::vector<EdgeKey>& arcs) {
    if (nodes.empty()) return 0;
    std::map<int, int> idx;
    for (size_t i = 0; i < nodes.size(); ++i) idx[nodes[i]] = static_cast<int>(i);
    Dsu dsu(static_cast<int>(nodes.size()));
    for (const auto& [a, b] : arcs)
        if (idx.count(a) && idx.count(b)) dsu.unite(idx[a], idx[b]);
    std::set<int> roots;
    for (size_t i = 0; i < nodes.size(); ++i) roots.insert(dsu.find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

} // namespace

std::vector<PLCriticality> classify_vertices(const TriMesh& m) {
    if (m.field.size() != m.positions.size())
        throw std::invalid_argument("mesh has no field");
    int nv = static_cast<int>(m.positions.size());
    FieldOrder below{m};

    std::vector<std::vector<EdgeKey>> link(nv);
    for (const auto& t : m.triangles)
        for (int i = 0; i < 3; ++i)
            link[t[i]].push_back(key(t[(i + 1) % 3], t[(i + 2) % 3]));

    std::vector<PLCriticality> out(nv);
    for (int v = 0; v < nv; ++v) {
        std::set<int> neighbors;
        for (const auto& [a, b] : link[v]) {
            neighbors.insert(a);
            neighbors.insert(b);
        }
        std::vector<int> lower, upper;
        for (int u : neighbors) (below(u, v) ? lower : upper).push_back(u);
        std::vector<EdgeKey> lower_arcs, upper_arcs;
        for (const auto& [a, b] : link[v]) {
            if (below(a, v) && below(b, v)) lower_arcs.push_back({a, b});
            if (below(v, a) && below(v, b)) upper_arcs.push_back({a, b});
        }
        int lc = count_components(lower, lower_arcs);
        int uc = count_components(upper, upper_arcs);
        PLCriticality c;
        if (lc == 0 && uc >= 1) {
            c.cls = VertexClass::Minimum;
        } else if (uc == 0 && lc >= 1) {
            c.cls = VertexClass::Maximum;
        } else if (lc == 1 && uc == 1) {
            c.cls = VertexClass::Regular;
        } else if (lc >= 2 && lc == uc) {
            c.cls = VertexClass::Saddle;
            c.multiplicity = lc - 1;
        } else {
            c.cls = VertexClass::Degenerate;
        }
        out[v] = c;
    }
    return out;
}

TriMesh perturb_simple(const TriMesh& m) {
    if (m.field.size() != m.positions.size())
        throw std::invalid_argument("mesh has no field");
    std::set<double> distinct(m.field.begin(), m.field.end());
    if (distinct.size() == m.field.size()) return m;

    std::vector<int> order(m.field.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), FieldOrder{m});
    TriMesh out = m;
    for (size_t rank = 0; rank < order.size(); ++rank)
        out.field[order[rank]] = static_cast<double>(rank);
    return out;
}

MeshReebResult mesh_reeb(const TriMesh& m) {
    validate_mesh(m);
    if (m.field.size() != m.positions.size())
        throw std::invalid_argument("mesh has no field");

    int nv = static_cast<int>(m.positions.size());
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), FieldOrder{m});
    std::vector<int> rank(nv);
    for (int i = 0; i < nv; ++i) rank[order[i]] = i;

    MeshReebResult res;
    res.classes = classify_vertices(m);

    // mesh edges, each knowing its rank span
    std::map<EdgeKey, int> edge_index;
    std::vector<EdgeKey> mesh_edges;
    for (const auto& t : m.triangles)
        for (int j = 0; j < 3; ++j) {
            EdgeKey k = key(t[j], t[(j + 1) % 3]);
            if (edge_index.emplace(k, static_cast<int>(mesh_edges.size())).second)
                mesh_edges.push_back(k);
        }
    int ne = static_cast<int>(mesh_edges.size());
    auto lo_rank = [&](int e) { return std::min(rank[mesh_edges[e].first], rank[mesh_edges[e].second]); };
    auto hi_rank = [&](int e) { return std::max(rank[mesh_edges[e].first], rank[mesh_edges[e].second]); };

    // lower/upper star edges per vertex
    std::vector<std::vector<int>> star_down(nv), star_up(nv);
    for (int e = 0; e < ne; ++e) {
        int a = mesh_edges[e].first, b = mesh_edges[e].second;
        int top = rank[a] > rank[b] ? a : b;
        int bot = top == a ? b : a;
        star_down[top].push_back(e);
        star_up[bot].push_back(e);
    }

    // token DSU over (gap, contour) pairs
    std::vector<int> token_parent;
    std::map<std::pair<int, int>, int> token_id;
    auto token = [&](int gap, int root_edge) {
        auto it = token_id.find({gap, root_edge});
        if (it != token_id.end()) return it->second;
        int id = static_cast<int>(token_parent.size());
        token_parent.push_back(id);
        token_id[{gap, root_edge}] = id;
        return id;
    };
    std::function<int(int)> tfind = [&](int x) {
        while (token_parent[x] != x) x = token_parent[x] = token_parent[token_parent[x]];
        return x;
    };
    auto tunite = [&](int a, int b) { token_parent[tfind(a)] = tfind(b); };

    std::vector<std::pair<int, int>> births, deaths; // (token, mesh vertex)

    auto contour_roots = [&](const std::vector<int>& star, const std::vector<int>& roots) {
        std::vector<int> out;
        for (int e : star)
            if (roots[e] >= 0) out.push_back(roots[e]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    std::vector<int> prev_roots(ne, -1), cur_roots(ne, -1);

    for (int i = 0; i < nv; ++i) {
        int v = order[i];
        int gap = i; // between order[i] and order[i+1]

        cur_roots.assign(ne, -1);
        if (i < nv - 1) {
            Dsu dsu(ne);
            for (const auto& t : m.triangles) {
                int x = t[0], y = t[1], z = t[2];
                if (rank[x] > rank[y]) std::swap(x, y);
                if (rank[y] > rank[z]) std::swap(y, z);
                if (rank[x] > rank[y]) std::swap(x, y);
                if (rank[x] <= gap && gap < rank[y])
                    dsu.unite(edge_index.at(key(x, y)), edge_index.at(key(x, z)));
                else if (rank[y] <= gap && gap < rank[z])
                    dsu.unite(edge_index.at(key(y, z)), edge_index.at(key(x, z)));
            }
            for (int e = 0; e < ne; ++e)
                if (lo_rank(e) <= gap && gap < hi_rank(e)) cur_roots[e] = dsu.find(e);
        }

        std::vector<int> in_comps = contour_roots(star_down[v], prev_roots);
        std::vector<int> out_comps = contour_roots(star_up[v], cur_roots);

        if (res.classes[v].cls == VertexClass::Regular) {
            if (in_comps.size() != 1 || out_comps.size() != 1)
                throw std::logic_error("regular vertex with branching contours");
            tunite(token(gap - 1, in_comps[0]), token(gap, out_comps[0]));
        } else {
            for (int c : in_comps) deaths.push_back({token(gap - 1, c), v});
            for (int c : out_comps) births.push_back({token(gap, c), v});
        }

        // contours passing the level away from v
        std::set<int> incident_below(in_comps.begin(), in_comps.end());
        for (int e = 0; e < ne; ++e)
            if (prev_roots[e] >= 0 && cur_roots[e] >= 0 && !incident_below.count(prev_roots[e]))
                tunite(token(gap - 1, prev_roots[e]), token(gap, cur_roots[e]));

        std::swap(prev_roots, cur_roots);
    }

    // assemble the raw graph: one vertex per non-regular mesh vertex,
    // one edge per contour class
    std::map<int, int> birth_of, death_of;
    for (const auto& [tok, v] : births) {
        int c = tfind(tok);
        if (birth_of.count(c) && birth_of[c] != v)
            throw std::logic_error("contour class with two birth vertices");
        birth_of[c] = v;
    }
    for (const auto& [tok, v] : deaths) {
        int c = tfind(tok);
        if (death_of.count(c) && death_of[c] != v)
            throw std::logic_error("contour class with two death vertices");
        death_of[c] = v;
    }
    if (birth_of.size() != death_of.size())
        throw std::logic_error("unbalanced contour classes");

    std::vector<std::string> vertices;
    for (int i = 0; i < nv; ++i)
        if (res.classes[order[i]].cls != VertexClass::Regular)
            vertices.push_back("v" + std::to_string(order[i]));
    std::vector<Edge> edges;
    int eid = 0;
    for (const auto& [c, bv] : birth_of) {
        auto it = death_of.find(c);
        if (it == death_of.end())
            throw std::logic_error("contour class without a death vertex");
        edges.push_back({"e" + std::to_string(eid++), "v" + std::to_string(bv),
                         "v" + std::to_string(it->second)});
    }
    res.raw = OrientedMultigraph::make(std::move(vertices), std::move(edges));

    for (int v = 0; v < nv; ++v) {
        const PLCriticality& c = res.classes[v];
        switch (c.cls) {
            case VertexClass::Minimum: ++res.k0; break;
            case VertexClass::Maximum: ++res.k2; break;
            case VertexClass::Saddle:
                res.k1 += c.multiplicity;
                if (c.multiplicity >= 2) {
                    ++res.multisaddle_count;
                    res.log.push_back("multi-saddle at vertex " + std::to_string(v) +
                                     " (multiplicity " + std::to_string(c.multiplicity) +
                                     ") unfolded into simple saddles");
                }
                break;
            case VertexClass::Degenerate:
                throw std::runtime_error("degenerate vertex class; perturb the field first");
            case VertexClass::Regular: break;
        }
    }

    // unfold multi-saddles; keep genuine degree-2 cross saddles
    res.graph = resolve_simple(res.raw, /*orientable_target=*/false);
    return res;
}

SurfaceLawReport check_surface_laws(const TriMesh& m, const MeshReebResult& r) {
    SurfaceLawReport rep;
    rep.surface = mesh_surface(m);
    rep.beta1 = betti1(r.graph);
    rep.beta1_ok = rep.surface.orientable ? rep.beta1 == rep.surface.genus
                                          : rep.beta1 <= rep.surface.genus / 2;

    auto degrees = [](const OrientedMultigraph& g) {
        std::vector<std::pair<DegreeProfile, std::string>> out;
        for (const std::string& v : g.vertices()) out.push_back({degree_profile(g, v), v});
        return out;
    };

    rep.extrema_ok = true;
    rep.saddle_degrees_ok = true;
    int k0 = 0, k1 = 0, k2 = 0;
    for (const auto& [p, v] : degrees(r.graph)) {
        if (p.deg_in == 0 && p.deg_out == 1) {
            ++k0;
        } else if (p.deg_in == 1 && p.deg_out == 0) {
            ++k2;
        } else if (p.deg() <= 1) {
            rep.extrema_ok = false;
        } else {
            ++k1;
            rep.saddle_degrees.push_back(p.deg());
            bool ok = rep.surface.orientable ? p.deg() == 3 : (p.deg() == 2 || p.deg() == 3);
            if (!ok) rep.saddle_degrees_ok = false;
        }
    }
    for (const auto& [p, v] : degrees(r.raw))
        if (p.deg() >= 2) rep.raw_saddle_degrees.push_back(p.deg());
    std::sort(rep.saddle_degrees.begin(), rep.saddle_degrees.end());
    std::sort(rep.raw_saddle_degrees.begin(), rep.raw_saddle_degrees.end());

    int deg_sum = 0;
    for (const auto& [p, v] : degrees(r.graph)) deg_sum += p.deg();
    int e2 = 2 * static_cast<int>(r.graph.edges().size());
    rep.handshake_ok = deg_sum == e2;
    rep.degree_sum_ok = rep.surface.orientable ? e2 == k0 + 3 * k1 + k2 : e2 <= k0 + 3 * k1 + k2;
    rep.euler_ok = mesh_chi(m) == r.k0 - r.k1 + r.k2;
    rep.good_orientation_ok = check_good(r.graph).good();
    return rep;
}

} // namespace reeb
