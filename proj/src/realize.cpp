#include "reeb/realize.hpp"

#include <stdexcept>

namespace reeb {

namespace {

void check_decidable(const OrientedMultigraph& g) {
    for (const std::string& v : g.vertices())
        if (degree_profile(g, v).deg() == 0)
            throw std::invalid_argument("isolated vertex: not a Reeb graph of a "
                                        "finite-critical-point function");
}

RealizabilityVerdict gamma0_gate(const SurfaceDescriptor& s, FunctionClass on_sphere) {
    RealizabilityVerdict v;
    if (s == SurfaceDescriptor{true, 0}) {
        v.realizable = true;
        v.function_class = on_sphere;
    } else {
        v.obstruction = Obstruction::Gamma0NeedsSphere;
    }
    return v;
}

void attach_finite_padding(RealizabilityVerdict& v, const OrientedMultigraph& g,
                           const SurfaceDescriptor& s) {
    int b = betti1(g);
    if (s.orientable) {
        if (s.genus - b > 0) v.t0 = s.genus - b;
    } else {
        if (s.genus - 2 * b > 0) v.r0 = s.genus - 2 * b;
    }
}

} // namespace

RealizabilityVerdict decide_finite(const OrientedMultigraph& g, const SurfaceDescriptor& s) {
    check_decidable(g);
    validate(s);
    if (is_gamma0(g)) return gamma0_gate(s, FunctionClass::FiniteCritical);

    RealizabilityVerdict v;
    if (!check_good(g).good()) {
        v.obstruction = Obstruction::NoGoodOrientation;
        return v;
    }
    if (betti1(g) > reeb_number(s)) {
        v.obstruction = Obstruction::BettiExceedsReebNumber;
        return v;
    }
    v.realizable = true;
    v.function_class = FunctionClass::FiniteCritical;
    attach_finite_padding(v, g, s);
    return v;
}

RealizabilityVerdict decide_morse(const OrientedMultigraph& g, const SurfaceDescriptor& s) {
    check_decidable(g);
    validate(s);
    if (is_gamma0(g)) return gamma0_gate(s, FunctionClass::Morse);

    RealizabilityVerdict v;
    if (!check_good(g).good()) {
        v.obstruction = Obstruction::NoGoodOrientation;
        return v;
    }
    int b = betti1(g), d2 = delta2(g);
    int min_genus = s.orientable ? b + d2 : 2 * b + d2;
    if (s.genus < min_genus) {
        v.obstruction = Obstruction::GenusTooSmall;
        v.genus_deficit = min_genus - s.genus;
        return v;
    }
    v.realizable = true;
    v.function_class = FunctionClass::Morse;
    if (s.genus > min_genus) {
        if (s.orientable)
            v.t0 = d2 >= 1 ? s.genus - b - d2 + 1 : s.genus - b;
        else
            v.r0 = d2 >= 1 ? s.genus - 2 * b - d2 + 1 : s.genus - 2 * b;
    }
    return v;
}

RealizabilityVerdict decide_acyclic_orientation(const OrientedMultigraph& g,
                                                const SurfaceDescriptor& s) {
    check_decidable(g);
    validate(s);
    OrientationVerdict o = check_good(g);
    if (o.status == OrientationStatus::OrientedCycle) {
        RealizabilityVerdict v;
        v.obstruction = Obstruction::OrientedCycle;
        return v;
    }
    if (o.good()) return decide_finite(g, s);

    RealizabilityVerdict v;
    if (betti1(g) > reeb_number(s)) {
        v.obstruction = Obstruction::BettiExceedsReebNumber;
        return v;
    }
    v.realizable = true;
    v.function_class = FunctionClass::HomeomorphicOnly;
    for (const std::string& w : g.vertices()) {
        DegreeProfile p = degree_profile(g, w);
        if (p.deg_in >= 1 && p.deg_out >= 1) {
            v.function_class = FunctionClass::FiniteCritical;
            break;
        }
    }
    attach_finite_padding(v, g, s);
    return v;
}

std::string to_string(FunctionClass c) {
    switch (c) {
        case FunctionClass::FiniteCritical: return "finite-critical";
        case FunctionClass::Morse: return "morse";
        case FunctionClass::HomeomorphicOnly: return "homeomorphic-only";
        case FunctionClass::None: return "none";
    }
    return "?";
}

std::string to_string(Obstruction o) {
    switch (o) {
        case Obstruction::NoGoodOrientation: return "no-good-orientation";
        case Obstruction::BettiExceedsReebNumber: return "betti-exceeds-reeb-number";
        case Obstruction::GenusTooSmall: return "genus-too-small";
        case Obstruction::Gamma0NeedsSphere: return "gamma0-needs-sphere";
        case Obstruction::OrientedCycle: return "oriented-cycle";
    }
    return "?";
}

} // namespace reeb
