#include <doctest.h>

#include "reeb/surface.hpp"

using namespace reeb;

TEST_CASE("surface spelling round trip") {
    CHECK(SurfaceDescriptor::parse("2+") == SurfaceDescriptor{true, 2});
    CHECK(SurfaceDescriptor::parse("3-") == SurfaceDescriptor{false, 3});
    CHECK(SurfaceDescriptor{true, 0}.spell() == "0+");
    CHECK(SurfaceDescriptor{false, 1}.spell() == "1-");
    for (int g = 0; g <= 10; ++g) {
        SurfaceDescriptor s{true, g};
        CHECK(SurfaceDescriptor::parse(s.spell()) == s);
        if (g >= 1) {
            SurfaceDescriptor t{false, g};
            CHECK(SurfaceDescriptor::parse(t.spell()) == t);
        }
    }
    CHECK_THROWS(SurfaceDescriptor::parse("2"));
    CHECK_THROWS(SurfaceDescriptor::parse("x+"));
    CHECK_THROWS(SurfaceDescriptor::parse("0-")); // no non-orientable genus 0
    CHECK_THROWS(SurfaceDescriptor::parse("-1+"));
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic({true, 0}) == 2);
    CHECK(euler_characteristic({true, 2}) == -2);
    CHECK(euler_characteristic({false, 2}) == 0); // Klein bottle
    CHECK(euler_characteristic({false, 3}) == -1);
}

TEST_CASE("reeb number") {
    CHECK(reeb_number({true, 2}) == 2);
    CHECK(reeb_number({false, 3}) == 1);
    CHECK(reeb_number({true, 0}) == 0);
    for (int g = 0; g <= 10; ++g) CHECK(reeb_number({true, g}) == g);
    for (int g = 1; g <= 10; ++g) CHECK(reeb_number({false, g}) == g / 2);
}

TEST_CASE("reeb number via chi") {
    // floor(k/2) for chi = 2 - k, both orientabilities
    for (int g = 0; g <= 10; ++g) {
        SurfaceDescriptor s{true, g};
        CHECK(reeb_number(s) == (2 - euler_characteristic(s)) / 2);
    }
    for (int g = 1; g <= 10; ++g) {
        SurfaceDescriptor s{false, g};
        CHECK(reeb_number(s) == (2 - euler_characteristic(s)) / 2);
    }
}

TEST_CASE("surface from chi") {
    CHECK(surface_from_chi(2, true) == SurfaceDescriptor{true, 0});
    CHECK(surface_from_chi(-2, true) == SurfaceDescriptor{true, 2});
    CHECK(surface_from_chi(-1, false) == SurfaceDescriptor{false, 3});
    CHECK_THROWS_WITH(surface_from_chi(-1, true), doctest::Contains("odd chi"));
    CHECK_THROWS(surface_from_chi(4, true));
    CHECK_THROWS(surface_from_chi(2, false));
}

TEST_CASE("surface from chi inverts euler characteristic") {
    for (int g = 0; g <= 8; ++g) {
        SurfaceDescriptor s{true, g};
        CHECK(surface_from_chi(euler_characteristic(s), true) == s);
    }
    for (int g = 1; g <= 8; ++g) {
        SurfaceDescriptor s{false, g};
        CHECK(surface_from_chi(euler_characteristic(s), false) == s);
    }
}

TEST_CASE("block euler characteristic") {
    CHECK(chi_block(1, 2, 0, 0) == -1); // pair of pants
    CHECK(chi_block(1, 1, 1, 0) == -2);
    CHECK(chi_block(1, 1, 0, 2) == -2);
    CHECK_THROWS(chi_block(0, 1, 0, 0));
    CHECK_THROWS(chi_block(1, 0, 0, 0));
    CHECK_THROWS(chi_block(1, 1, 1, 1)); // cross handles only on the t = 0 surface
}

TEST_CASE("block chi formula over a range") {
    for (int km = 1; km <= 4; ++km)
        for (int kp = 1; kp <= 4; ++kp) {
            for (int t = 0; t <= 3; ++t)
                CHECK(chi_block(km, kp, t, 0) == 2 - (km + kp + 2 * t));
            for (int r = 1; r <= 3; ++r)
                CHECK(chi_block(km, kp, 0, r) == 2 - (km + kp) - r);
        }
}
