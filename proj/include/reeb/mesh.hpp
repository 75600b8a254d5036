#ifndef REEB_MESH_HPP
#define REEB_MESH_HPP

#include <array>
#include <string>
#include <vector>

#include "reeb/graph.hpp"
#include "reeb/surface.hpp"

namespace reeb {

// Triangulated closed surface with a per-vertex scalar field.
struct TriMesh {
    std::vector<std::array<double, 3>> positions;
    std::vector<std::array<int, 3>> triangles;
    std::vector<double> field; // one value per vertex
};

// ASCII OFF with triangle faces. The field is left empty; fill it from a
// coordinate axis or a sidecar file afterwards.
TriMesh parse_off(const std::string& text);

void set_field_axis(TriMesh& m, int axis);
void set_field_values(TriMesh& m, std::vector<double> values);

// Closed connected 2-manifold checks; throws "non-triangle face",
// "boundary edge", "non-manifold ..." or "not connected".
void validate_mesh(const TriMesh& m);

bool mesh_orientable(const TriMesh& m);
int mesh_chi(const TriMesh& m);
SurfaceDescriptor mesh_surface(const TriMesh& m);

enum class VertexClass { Regular, Minimum, Maximum, Saddle, Degenerate };

struct PLCriticality {
    VertexClass cls = VertexClass::Regular;
    int multiplicity = 0; // lower-link arc count minus one, saddles only
};

// Lower/upper-link classification under the (value, index) tie-break order.
std::vector<PLCriticality> classify_vertices(const TriMesh& m);

// Pairwise-distinct field by index-ordered tie-breaking; identity when the
// values are already distinct.
TriMesh perturb_simple(const TriMesh& m);

struct MeshReebResult {
    OrientedMultigraph raw;   // one vertex per non-regular mesh vertex
    OrientedMultigraph graph; // multi-saddles unfolded into merge/split chains
    std::vector<PLCriticality> classes;
    int k0 = 0, k1 = 0, k2 = 0; // critical census, saddle multiplicities summed
    int multisaddle_count = 0;
    std::vector<std::string> log;
};

// Level-set sweep in increasing field order; contours tracked with a
// union-find over the active cross-section edges.
MeshReebResult mesh_reeb(const TriMesh& m);

struct SurfaceLawReport {
    SurfaceDescriptor surface;
    int beta1 = 0;
    bool beta1_ok = false;          // = g orientable, <= g/2 non-orientable
    bool saddle_degrees_ok = false; // {3} orientable, {2,3} non-orientable
    bool extrema_ok = false;
    bool handshake_ok = false;      // 2|E| = sum of degrees
    bool euler_ok = false;          // V - E + F = k0 - k1 + k2
    bool degree_sum_ok = false;     // 2|E| = k0+3k1+k2, <= when non-orientable
    bool good_orientation_ok = false;
    std::vector<int> raw_saddle_degrees;
    std::vector<int> saddle_degrees;

    bool pass() const {
        return beta1_ok && saddle_degrees_ok && extrema_ok && handshake_ok && euler_ok &&
               degree_sum_ok && good_orientation_ok;
    }
};

SurfaceLawReport check_surface_laws(const TriMesh& m, const MeshReebResult& r);

} // namespace reeb

#endif
