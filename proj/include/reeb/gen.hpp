#ifndef REEB_GEN_HPP
#define REEB_GEN_HPP

#include <cstdint>

#include "reeb/graph.hpp"

namespace reeb {

struct GenOptions {
    std::uint64_t seed = 0;
    int steps = 12; // accepted mutations
    int max_vertices = 20;
    int max_beta1 = 5;
};

// Random graph with a good orientation, grown from the two-vertex graph by
// edge subdivisions, leaf attachments and level-respecting edge insertions.
// Mutations that would break goodness are rejected, so every output passes
// check_good. Deterministic for a fixed seed.
OrientedMultigraph random_good_graph(const GenOptions& opt);

} // namespace reeb

#endif
