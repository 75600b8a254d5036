#include "reeb/surface.hpp"

#include <stdexcept>

namespace reeb {

std::string SurfaceDescriptor::spell() const {
    return std::to_string(genus) + (orientable ? "+" : "-");
}

SurfaceDescriptor SurfaceDescriptor::parse(const std::string& text) {
    if (text.size() < 2)
        throw std::invalid_argument("surface spelling must be <genus><+|->: " + text);
    char tag = text.back();
    if (tag != '+' && tag != '-')
        throw std::invalid_argument("surface spelling must end in + or -: " + text);
    int g;
    try {
        size_t pos = 0;
        g = std::stoi(text.substr(0, text.size() - 1), &pos);
        if (pos != text.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad genus in surface spelling: " + text);
    }
    SurfaceDescriptor s{tag == '+', g};
    validate(s);
    return s;
}

void validate(const SurfaceDescriptor& s) {
    if (s.genus < 0)
        throw std::invalid_argument("negative genus");
    if (!s.orientable && s.genus < 1)
        throw std::invalid_argument("non-orientable surface needs genus >= 1");
}

int euler_characteristic(const SurfaceDescriptor& s) {
    validate(s);
    return s.orientable ? 2 - 2 * s.genus : 2 - s.genus;
}

int reeb_number(const SurfaceDescriptor& s) {
    validate(s);
    return s.orientable ? s.genus : s.genus / 2;
}

SurfaceDescriptor surface_from_chi(int chi, bool orientable) {
    if (chi > 2)
        throw std::invalid_argument("no closed surface with chi > 2");
    if (orientable) {
        if ((2 - chi) % 2 != 0)
            throw std::invalid_argument("odd chi for orientable surface");
        return SurfaceDescriptor{true, (2 - chi) / 2};
    }
    if (chi > 1)
        throw std::invalid_argument("no non-orientable closed surface with chi > 1");
    return SurfaceDescriptor{false, 2 - chi};
}

int chi_block(int k_minus, int k_plus, int t, int r) {
    if (k_minus < 1 || k_plus < 1)
        throw std::invalid_argument("interior block needs k_minus >= 1 and k_plus >= 1");
    if (t < 0 || r < 0)
        throw std::invalid_argument("negative handle count");
    if (r > 0 && t > 0)
        throw std::invalid_argument("cross handles only on a t = 0 block");
    return 2 - (k_minus + k_plus + 2 * t) - r;
}

} // namespace reeb
