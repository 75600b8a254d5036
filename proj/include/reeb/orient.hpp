#ifndef REEB_ORIENT_HPP
#define REEB_ORIENT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reeb/graph.hpp"

namespace reeb {

enum class OrientationStatus { Good, OrientedCycle, BadVertex };

// A good orientation comes from a function strictly monotone on edges with
// extrema only at degree-1 vertices: no directed cycle, and every vertex of
// degree >= 2 has both an incoming and an outgoing edge.
struct OrientationVerdict {
    OrientationStatus status = OrientationStatus::Good;
    std::vector<std::string> cycle_edges; // witness directed closed walk
    std::string bad_vertex;               // deg >= 2 vertex with all-in or all-out

    bool good() const { return status == OrientationStatus::Good; }
};

struct LevelFunction {
    std::map<std::string, double> values;
    double epsilon = 0.0; // 1/3 of the smallest edge gap
};

class NotGoodError : public std::runtime_error {
public:
    NotGoodError(const OrientationVerdict& v, const std::string& what)
        : std::runtime_error(what), verdict(v) {}
    OrientationVerdict verdict;
};

OrientationVerdict check_good(const OrientedMultigraph& g);

// Search reorientations of the underlying undirected multigraph for one
// passing check_good; returns the lexicographically smallest flip set under
// sorted edge order. With ignore_directions = false the given orientation is
// the only candidate.
std::optional<OrientedMultigraph> find_good_orientation(const OrientedMultigraph& g,
                                                        bool ignore_directions = true);

// Longest-path layering from the sources, epsilon by the 1/3-min-gap rule.
// Throws NotGoodError when the orientation is not good.
LevelFunction level_function(const OrientedMultigraph& g);

// Integer layers for any acyclic orientation (no goodness requirement);
// used by the synthesizer for the not-good acyclic route.
std::map<std::string, int> acyclic_layers(const OrientedMultigraph& g);

// Replace every vertex with profile outside {degree 1, (1,2), (2,1)} by a
// local tree of merge vertices (2 in, 1 out) followed by split vertices
// (1 in, 2 out). Degree-2 pass-through vertices are smoothed away when
// orientable_target is set and kept otherwise (they are admissible for
// index-1 points on non-orientable surfaces). Preserves betti1 and goodness.
OrientedMultigraph resolve_simple(const OrientedMultigraph& g,
                                  bool orientable_target = true);

} // namespace reeb

#endif
