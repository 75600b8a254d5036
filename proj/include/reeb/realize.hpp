#ifndef REEB_REALIZE_HPP
#define REEB_REALIZE_HPP

#include <optional>
#include <string>

#include "reeb/graph.hpp"
#include "reeb/orient.hpp"
#include "reeb/surface.hpp"

namespace reeb {

enum class FunctionClass { FiniteCritical, Morse, HomeomorphicOnly, None };

enum class Obstruction {
    NoGoodOrientation,
    BettiExceedsReebNumber,
    GenusTooSmall,
    Gamma0NeedsSphere,
    OrientedCycle,
};

struct RealizabilityVerdict {
    bool realizable = false;
    FunctionClass function_class = FunctionClass::None;
    std::optional<Obstruction> obstruction;
    int genus_deficit = 0;          // with GenusTooSmall
    std::optional<int> t0;          // orientable padding
    std::optional<int> r0;          // non-orientable padding (cross handles)
};

// Finite-critical-point realizability: Gamma_0 only on the sphere; otherwise
// a good orientation plus betti1 <= reeb_number decides it.
RealizabilityVerdict decide_finite(const OrientedMultigraph& g, const SurfaceDescriptor& s);

// Morse realizability: genus >= betti1 + delta2 (orientable) or
// genus >= 2*betti1 + delta2 (non-orientable).
RealizabilityVerdict decide_morse(const OrientedMultigraph& g, const SurfaceDescriptor& s);

// Acyclic but not necessarily good orientations: realizable up to
// orientation-preserving homeomorphism when betti1 <= reeb_number; upgraded
// to isomorphism when some vertex has both in- and out-edges.
RealizabilityVerdict decide_acyclic_orientation(const OrientedMultigraph& g,
                                                const SurfaceDescriptor& s);

std::string to_string(FunctionClass c);
std::string to_string(Obstruction o);

} // namespace reeb

#endif
