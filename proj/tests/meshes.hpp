#ifndef TESTS_MESHES_HPP
#define TESTS_MESHES_HPP

#include <cmath>
#include <vector>

#include "reeb/mesh.hpp"

namespace meshes {

using reeb::TriMesh;

inline TriMesh octahedron() {
    TriMesh m;
    m.positions = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    m.triangles = {{4, 0, 2}, {4, 2, 1}, {4, 1, 3}, {4, 3, 0},
                   {5, 2, 0}, {5, 1, 2}, {5, 3, 1}, {5, 0, 3}};
    return m;
}

// N x N grid on the standard embedded torus, shifted by dx along x.
// Consistent triangle winding, so the mesh is orientable.
inline TriMesh torus_grid(int n, double dx = 0.0, double big = 2.0, double small = 0.7) {
    TriMesh m;
    const double tau = 6.283185307179586;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double u = tau * i / n, v = tau * j / n;
            m.positions.push_back({(big + small * std::cos(v)) * std::cos(u) + dx,
                                   (big + small * std::cos(v)) * std::sin(u),
                                   small * std::sin(v)});
        }
    auto at = [n](int i, int j) { return ((i % n + n) % n) * n + ((j % n + n) % n); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a = at(i, j), b = at(i + 1, j), c = at(i, j + 1), d = at(i + 1, j + 1);
            m.triangles.push_back({a, b, d});
            m.triangles.push_back({a, d, c});
        }
    return m;
}

// x tilted slightly off-axis: four nondegenerate critical points on a torus
inline void tilted_height(TriMesh& m) {
    m.field.clear();
    for (const auto& p : m.positions)
        m.field.push_back(p[0] + 0.02 * p[2] + 0.007 * p[1]);
}

// two holed torus grids glued along their boundary triangles (chi = -2)
inline TriMesh genus2_mesh(int n = 12) {
    TriMesh a = torus_grid(n);
    TriMesh b = torus_grid(n, /*dx=*/2 * (2.0 + 0.7) + 1.0);

    // drop one triangle in a generic cell of each torus
    int cell = 2 * ((n / 4) * n + n / 4); // first triangle of cell (n/4, n/4)
    std::array<int, 3> hole_a = a.triangles[cell];
    std::array<int, 3> hole_b = b.triangles[cell];
    a.triangles.erase(a.triangles.begin() + cell);
    b.triangles.erase(b.triangles.begin() + cell);

    TriMesh out = a;
    // identify the boundary cycles with reversed order to keep orientability;
    // the three glued vertices of b are dropped, the rest appended
    std::vector<int> remap(b.positions.size(), -1);
    remap[hole_b[0]] = hole_a[0];
    remap[hole_b[1]] = hole_a[2];
    remap[hole_b[2]] = hole_a[1];
    for (size_t i = 0; i < b.positions.size(); ++i) {
        if (remap[i] >= 0) continue;
        remap[i] = static_cast<int>(out.positions.size());
        out.positions.push_back(b.positions[i]);
    }
    for (const auto& t : b.triangles)
        out.triangles.push_back({remap[t[0]], remap[t[1]], remap[t[2]]});
    return out;
}

// N x N grid on the flat Klein bottle: x wraps, the top row glues to the
// bottom row with a flip. Positions are chart coordinates; the field is set
// directly (no embedding needed).
inline TriMesh klein_mesh(int n = 10) {
    TriMesh m;
    const double tau = 6.283185307179586;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.positions.push_back({double(i), double(j), 0.0});
            m.field.push_back(std::sin(tau * j / n) + 0.11 * std::cos(tau * i / n) +
                              0.013 * j);
        }
    auto at = [n](int i, int j) {
        i = (i % n + n) % n;
        if (j == n) return ((n - i) % n) * n; // flip onto row 0
        return i * n + j;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a = at(i, j), b = at(i + 1, j), c = at(i, j + 1), d = at(i + 1, j + 1);
            m.triangles.push_back({a, b, d});
            m.triangles.push_back({a, d, c});
        }
    return m;
}

} // namespace meshes

#endif
