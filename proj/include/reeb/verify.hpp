#ifndef REEB_VERIFY_HPP
#define REEB_VERIFY_HPP

#include <optional>
#include <string>

#include "reeb/graph.hpp"
#include "reeb/plan.hpp"

namespace reeb {

struct VerifyReport {
    OrientedMultigraph reconstructed;
    std::optional<VertexBijection> iso;
    bool chi_ok = false;
    bool surface_ok = false;
    bool census_ok = false;
    bool degree_law_ok = false;
    std::string details;

    bool pass() const { return iso && chi_ok && surface_ok && census_ok && degree_law_ok; }
};

// Replay the plan bottom-up as level-set events, tracking circle lifelines
// through tubes, and reconstruct the Reeb graph. Independent of how the
// plan was produced.
OrientedMultigraph sweep_reeb(const SurfacePlan& p);

VerifyReport verify_plan(const SurfacePlan& p, const OrientedMultigraph& expected);

// Non-orientable iff some block has cross handles or some independent cycle
// of the source graph has tube-sign product -1. n = 2 only.
bool orientability_of(const SurfacePlan& p);

} // namespace reeb

#endif
