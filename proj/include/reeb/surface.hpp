#ifndef REEB_SURFACE_HPP
#define REEB_SURFACE_HPP

#include <string>

namespace reeb {

// Closed-surface identity. Orientable: Sigma_g (g >= 0, g = 0 is the
// sphere). Non-orientable: S_g (g >= 1, connected sum of g projective
// planes).
struct SurfaceDescriptor {
    bool orientable = true;
    int genus = 0;

    bool operator==(const SurfaceDescriptor&) const = default;

    // CLI/JSON spelling: "<genus>+" orientable, "<genus>-" non-orientable.
    std::string spell() const;
    static SurfaceDescriptor parse(const std::string& text);
};

void validate(const SurfaceDescriptor& s);

int euler_characteristic(const SurfaceDescriptor& s);

// Maximal number of cycles over Reeb graphs of finite-critical-point
// functions: g for Sigma_g, floor(g/2) for S_g.
int reeb_number(const SurfaceDescriptor& s);

// Inverse of euler_characteristic.
SurfaceDescriptor surface_from_chi(int chi, bool orientable);

// Euler characteristic of a vertex-neighborhood block with k_minus lower
// and k_plus upper boundary circles, t tube pairs and r cross handles:
// 2 - (k_minus + k_plus + 2t) - r. r > 0 only with t = 0.
int chi_block(int k_minus, int k_plus, int t, int r);

} // namespace reeb

#endif
