#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "circnear/ferrero.hpp"
#include "oracles.hpp"

using namespace circnear;

namespace {
auto z61 = PrimeField::make(61);
}

TEST_CASE("build_phi") {
    const auto phi = build_phi(z61, 11);
    CHECK(phi.order() == 4);
    CHECK(phi.elements() == std::vector<Residue>{1, 11, 60, 50});
    CHECK(build_phi(z61, 9).order() == 5);
    const auto minus_one = build_phi(z61, 60);
    CHECK(minus_one.elements() == std::vector<Residue>{1, 60});

    CHECK_THROWS_AS(build_phi(z61, 0), std::domain_error);
    CHECK_THROWS_AS(build_phi(z61, 1), std::domain_error);
    CHECK_THROWS_AS(build_phi(z61, 62), std::domain_error);  // 62 = 1 mod 61
}

TEST_CASE("orbits of <11> in Z_61") {
    const auto phi = build_phi(z61, 11);
    CHECK(phi.orbit(0).elements == std::vector<Residue>{0});
    CHECK(phi.orbit(0).representative == 0);
    CHECK(phi.orbit(1).elements == std::vector<Residue>{1, 11, 50, 60});
    CHECK(phi.orbit(6).elements == std::vector<Residue>{5, 6, 55, 56});
    CHECK(phi.orbit(6).representative == 5);
    CHECK(phi.contains(50));
    CHECK_FALSE(phi.contains(2));
    CHECK_FALSE(phi.contains(0));
}

TEST_CASE("orbit_partition") {
    CHECK(build_phi(z61, 11).orbit_partition().size() == 16);
    CHECK(build_phi(z61, 9).orbit_partition().size() == 13);

    for (std::uint64_t p : {7u, 13u, 31u, 61u, 73u}) {
        auto field = PrimeField::make(p);
        for (Residue g = 2; g < p; ++g) {
            const auto phi = build_phi(field, g);
            const auto k = phi.order();
            const auto parts = phi.orbit_partition();
            REQUIRE(parts.size() == 1 + (p - 1) / k);
            CHECK(phi.generator() == g);

            std::vector<int> cover(p, 0);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                const auto& o = parts[i];
                if (i > 0) CHECK(parts[i - 1].representative < o.representative);
                CHECK(o.representative == o.elements.front());
                CHECK(o.elements.size() == (o.representative == 0 ? 1 : k));
                CHECK(oracle::widen(o.elements) == oracle::orbit(oracle::subgroup(g, p), o.representative, p));
                for (Residue x : o.elements) {
                    ++cover[x];
                    CHECK(phi.orbit(x) == o);  // same orbit from any member
                }
                // phi * O = O setwise
                for (Residue e : phi.elements()) {
                    std::vector<Residue> image;
                    for (Residue x : o.elements) image.push_back(field->mul(e, x));
                    std::sort(image.begin(), image.end());
                    CHECK(image == o.elements);
                }
            }
            for (int c : cover) CHECK(c == 1);
        }
    }
}

TEST_CASE("is_ferrero_pair") {
    CHECK(is_ferrero_pair(build_phi(z61, 11)));
    CHECK(is_ferrero_pair(build_phi(z61, 60)));
    CHECK(is_ferrero_pair(build_phi(z61, 9)));
    auto z13 = PrimeField::make(13);
    for (Residue g = 2; g < 13; ++g) CHECK(is_ferrero_pair(build_phi(z13, g)));
}
