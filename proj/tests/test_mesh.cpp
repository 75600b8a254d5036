#include <doctest.h>

#include <sstream>

#include "reeb/mesh.hpp"
#include "reeb/orient.hpp"

#include "helpers.hpp"
#include "meshes.hpp"

using namespace reeb;

namespace {

std::string off_text(const TriMesh& m) {
    std::ostringstream out;
    out << "OFF\n" << m.positions.size() << " " << m.triangles.size() << " 0\n";
    for (const auto& p : m.positions) out << p[0] << " " << p[1] << " " << p[2] << "\n";
    for (const auto& t : m.triangles) out << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
    return out.str();
}

} // namespace

TEST_CASE("off parsing") {
    TriMesh oct = meshes::octahedron();
    TriMesh back = parse_off(off_text(oct));
    CHECK(back.positions.size() == 6);
    CHECK(back.triangles.size() == 8);
    CHECK(back.triangles == oct.triangles);

    CHECK_THROWS_WITH(parse_off("OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n"),
                      doctest::Contains("non-triangle face"));
    CHECK_THROWS(parse_off("PLY\n"));
    CHECK_THROWS(parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n"));            // truncated
    CHECK_THROWS(parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 5\n")); // bad index
    // comments and counts on the header line are accepted
    CHECK_NOTHROW(parse_off("# comment\nOFF 3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n"));
}

TEST_CASE("mesh validation") {
    CHECK_NOTHROW(validate_mesh(meshes::octahedron()));
    CHECK_NOTHROW(validate_mesh(meshes::torus_grid(8)));
    CHECK_NOTHROW(validate_mesh(meshes::genus2_mesh()));
    CHECK_NOTHROW(validate_mesh(meshes::klein_mesh()));

    TriMesh open_disk;
    open_disk.positions = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    open_disk.triangles = {{0, 1, 2}};
    CHECK_THROWS_WITH(validate_mesh(open_disk), doctest::Contains("boundary edge"));

    TriMesh doubled = meshes::octahedron();
    doubled.triangles.push_back(doubled.triangles.front());
    CHECK_THROWS_WITH(validate_mesh(doubled), doctest::Contains("non-manifold"));

    TriMesh fan = meshes::octahedron();
    fan.triangles.push_back({4, 0, 5}); // third triangle on an existing edge pattern
    CHECK_THROWS_WITH(validate_mesh(fan), doctest::Contains("non-manifold"));
}

TEST_CASE("surface recognition") {
    CHECK(mesh_chi(meshes::octahedron()) == 2);
    CHECK(mesh_orientable(meshes::octahedron()));
    CHECK(mesh_surface(meshes::octahedron()) == SurfaceDescriptor{true, 0});

    CHECK(mesh_chi(meshes::torus_grid(8)) == 0);
    CHECK(mesh_surface(meshes::torus_grid(8)) == SurfaceDescriptor{true, 1});

    CHECK(mesh_chi(meshes::genus2_mesh()) == -2);
    CHECK(mesh_orientable(meshes::genus2_mesh()));
    CHECK(mesh_surface(meshes::genus2_mesh()) == SurfaceDescriptor{true, 2});

    CHECK(mesh_chi(meshes::klein_mesh()) == 0);
    CHECK_FALSE(mesh_orientable(meshes::klein_mesh()));
    CHECK(mesh_surface(meshes::klein_mesh()) == SurfaceDescriptor{false, 2});
}

TEST_CASE("perturbation") {
    TriMesh m = meshes::octahedron();
    m.field = {1, 1, 1, 1, 1, 1};
    TriMesh p = perturb_simple(m);
    for (size_t i = 1; i < p.field.size(); ++i) CHECK(p.field[i - 1] < p.field[i]);

    TriMesh distinct = meshes::octahedron();
    distinct.field = {3, 1, 4, 2, 6, 5};
    CHECK(perturb_simple(distinct).field == distinct.field);

    // tie-breaking leaves the criticality classes unchanged (the classifier
    // itself uses the lexicographic comparator)
    TriMesh torus = meshes::torus_grid(8);
    set_field_axis(torus, 2); // symmetric height with many ties
    auto before = classify_vertices(torus);
    auto after = classify_vertices(perturb_simple(torus));
    for (size_t i = 0; i < before.size(); ++i) {
        CHECK(before[i].cls == after[i].cls);
        CHECK(before[i].multiplicity == after[i].multiplicity);
    }
}

TEST_CASE("octahedron reeb graph") {
    TriMesh m = meshes::octahedron();
    set_field_axis(m, 2);
    m = perturb_simple(m);
    auto classes = classify_vertices(m);
    int minima = 0, maxima = 0, regular = 0;
    for (const auto& c : classes) {
        if (c.cls == VertexClass::Minimum) ++minima;
        if (c.cls == VertexClass::Maximum) ++maxima;
        if (c.cls == VertexClass::Regular) ++regular;
    }
    CHECK(minima == 1);
    CHECK(maxima == 1);
    CHECK(regular == 4);

    MeshReebResult res = mesh_reeb(m);
    CHECK(betti1(res.graph) == 0);
    CHECK(is_isomorphic(res.raw, gamma0()).has_value());
    SurfaceLawReport rep = check_surface_laws(m, res);
    INFO(rep.surface.spell());
    CHECK(rep.pass());
}

TEST_CASE("torus reeb graph is the torus graph") {
    TriMesh m = meshes::torus_grid(16);
    meshes::tilted_height(m);
    m = perturb_simple(m);
    MeshReebResult res = mesh_reeb(m);
    CHECK(betti1(res.graph) == 1);
    CHECK(is_isomorphic(res.graph, helpers::torus_graph()).has_value());
    CHECK(res.k0 == 1);
    CHECK(res.k1 == 2);
    CHECK(res.k2 == 1);
    SurfaceLawReport rep = check_surface_laws(m, res);
    INFO(rep.surface.spell());
    CHECK(rep.pass());
    CHECK(rep.beta1 == 1);
    CHECK(rep.saddle_degrees == std::vector<int>{3, 3});
}

TEST_CASE("genus-2 mesh") {
    TriMesh m = meshes::genus2_mesh();
    meshes::tilted_height(m);
    m = perturb_simple(m);
    MeshReebResult res = mesh_reeb(m);
    CHECK(betti1(res.graph) == 2);
    SurfaceLawReport rep = check_surface_laws(m, res);
    INFO(rep.surface.spell());
    CHECK(rep.pass());
    CHECK(mesh_chi(m) == res.k0 - res.k1 + res.k2);
}

TEST_CASE("klein bottle mesh") {
    TriMesh m = perturb_simple(meshes::klein_mesh());
    MeshReebResult res = mesh_reeb(m);
    CHECK(betti1(res.graph) <= 1);
    SurfaceLawReport rep = check_surface_laws(m, res);
    INFO(rep.surface.spell());
    CHECK(rep.pass());
    for (int d : rep.saddle_degrees) CHECK((d == 2 || d == 3));
    // non-orientable census bound (saddles may drop to degree 2)
    CHECK(res.k0 + 3 * res.k1 + res.k2 >= 2 * static_cast<int>(res.graph.edges().size()));
}

TEST_CASE("reeb output laws hold for every mesh") {
    std::vector<TriMesh> cases;
    {
        TriMesh m = meshes::octahedron();
        set_field_axis(m, 0);
        cases.push_back(m);
    }
    {
        TriMesh m = meshes::torus_grid(10);
        meshes::tilted_height(m);
        cases.push_back(m);
    }
    {
        TriMesh m = meshes::torus_grid(9);
        set_field_axis(m, 2); // degenerate direction: circles of ties
        cases.push_back(m);
    }
    cases.push_back(meshes::klein_mesh());
    for (TriMesh& m : cases) {
        m = perturb_simple(m);
        MeshReebResult res = mesh_reeb(m);
        CHECK(check_good(res.raw).good());
        CHECK(check_good(res.graph).good());
        CHECK(betti1(res.graph) <= reeb_number(mesh_surface(m)));
        CHECK(mesh_chi(m) == res.k0 - res.k1 + res.k2);
        CHECK(betti1(res.raw) == betti1(res.graph)); // unfolding preserves cycles
    }
}
