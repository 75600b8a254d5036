#ifndef REEB_PLAN_HPP
#define REEB_PLAN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "reeb/graph.hpp"
#include "reeb/orient.hpp"
#include "reeb/surface.hpp"

namespace reeb {

enum class BlockKind { CapMin, CapMax, Interior, DegenerateDeg2, SaekiC };

// One vertex-neighborhood cobordism. Interior blocks carry a single
// critical value with (k_plus + t - 1) critical points of index n-1 and
// (k_minus + t - 1) of index 1; r > 0 (surfaces only, t = 0) swaps the
// tube pairs for k_minus + k_plus + r - 2 index-1 cross handles.
struct Block {
    std::string id;
    BlockKind kind = BlockKind::Interior;
    std::string vertex;
    double critical_value = 0.0;
    int k_minus = 0, k_plus = 0, t = 0, r = 0;
    std::vector<std::string> lower_ports; // one per incoming edge
    std::vector<std::string> upper_ports; // one per outgoing edge
    std::map<int, int> critical_points;   // index -> count
    bool degenerate = false;              // single degenerate point, chi = 0
    bool infinite = false;                // one-sided, infinitely many critical points

    int chi() const; // n = 2 contribution
};

// Cylinder over an edge. lower_port sits on the lower block (an upper port
// of that block), upper_port on the upper block. sign = -1 is an
// orientation-reversing gluing, surfaces only.
struct Tube {
    std::string edge_id;
    std::string lower_port;
    std::string upper_port;
    int sign = 1;
};

struct SurfacePlan {
    int dimension = 2;
    std::string mode; // finite | morse | any-n
    std::optional<SurfaceDescriptor> target;
    std::vector<Block> blocks;
    std::vector<Tube> tubes;
    LevelFunction level;
    OrientedMultigraph source;
};

enum class SynthMode { Finite, Morse };

// Witness construction for a surface target. Throws when the
// corresponding realizability verdict is negative, echoing the obstruction.
SurfacePlan synthesize(const OrientedMultigraph& g, const SurfaceDescriptor& target,
                       SynthMode mode);

// Dimension-n construction: caps at degree-1 vertices, t = 1 interior
// blocks elsewhere. Requires a good orientation.
SurfacePlan synthesize_any_n(const OrientedMultigraph& g, int dimension);

struct PlanSummary {
    std::optional<int> chi;                  // n = 2 only
    std::optional<SurfaceDescriptor> surface;
    std::map<int, int> census;               // critical index -> count
    int degenerate_count = 0;
    bool has_infinite = false;
    bool orientable = true;                  // n = 2 only
};

PlanSummary plan_summary(const SurfacePlan& p);

// Structural invariants: port/tube bijections, value ordering, sign rules.
// Throws on violation.
void validate_plan(const SurfacePlan& p);

// Expected per-block critical-point census for the given dimension.
std::map<int, int> expected_census(const Block& b, int dimension);

nlohmann::json plan_to_json(const SurfacePlan& p);
SurfacePlan plan_from_json(const nlohmann::json& j);

std::string to_string(BlockKind k);

} // namespace reeb

#endif
