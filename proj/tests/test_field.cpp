#include <doctest.h>

#include <stdexcept>

#include "circnear/field.hpp"
#include "oracles.hpp"

using namespace circnear;

TEST_CASE("is_prime") {
    CHECK(is_prime(61));
    CHECK_FALSE(is_prime(60));
    CHECK(is_prime(2));
    CHECK_THROWS_AS(is_prime(1), std::domain_error);
    CHECK_THROWS_AS(is_prime(0), std::domain_error);

    for (std::uint64_t n = 2; n < 5000; ++n) CHECK(is_prime(n) == oracle::trial_division_prime(n));
    CHECK(is_prime(2147483647ull));
    CHECK_FALSE(is_prime(2147483649ull));
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(18446744073709551557ull));
}

TEST_CASE("PrimeField rejects bad moduli") {
    CHECK_THROWS_AS(PrimeField(60), std::domain_error);
    CHECK_THROWS_AS(PrimeField(2), std::domain_error);
    CHECK_THROWS_AS(PrimeField(kMaxModulus + 11), std::domain_error);
    CHECK_NOTHROW(PrimeField(3));
}

TEST_CASE("arithmetic in Z_61") {
    const PrimeField f(61);
    CHECK(f.inv(2) == 31);
    CHECK(f.inv(2) == oracle::extended_euclid_inverse(2, 61));
    CHECK(f.pow(11, 2) == 60);
    CHECK(f.pow(11, 2) == 11 * 11 % 61);
    CHECK(f.add(17, 0) == 17);
    CHECK(f.sub(3, 5) == 59);
    CHECK(f.neg(0) == 0);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);

    const auto x = f.element(11);
    CHECK((x * x).value() == 60);
    CHECK((x + f.element(0)) == x);
    CHECK(f.element(-1).value() == 60);
    CHECK((f.element(2).inv()).value() == 31);
    CHECK((f.element(5) / f.element(5)).value() == 1);
    CHECK_THROWS_AS(f.element(0).inv(), std::domain_error);
}

TEST_CASE("elements of different fields do not mix") {
    const PrimeField f61(61), f13(13);
    CHECK_THROWS_AS(f61.element(3) + f13.element(3), std::domain_error);
    CHECK_THROWS_AS(f61.element(3) * f13.element(3), std::domain_error);
    CHECK_THROWS_AS(f61.element(3) - f13.element(3), std::domain_error);
}

TEST_CASE("inverse and order laws hold for every residue") {
    for (std::uint64_t p : {3u, 5u, 13u, 61u, 97u, 199u}) {
        const PrimeField f(p);
        for (Residue x = 1; x < p; ++x) {
            CHECK(f.mul(x, f.inv(x)) == 1);
            const auto k = f.mult_order(x);
            CHECK(k == oracle::iterate_order(x, p));
            CHECK((p - 1) % k == 0);
        }
        CHECK_THROWS_AS(f.mult_order(0), std::domain_error);
    }
}

TEST_CASE("mult_order examples") {
    const PrimeField f(61);
    CHECK(f.mult_order(11) == 4);
    CHECK(f.mult_order(9) == 5);
    CHECK(f.mult_order(1) == 1);
    CHECK(f.mult_order(13) == 3);
}

TEST_CASE("primitive_root is the smallest generator") {
    CHECK(PrimeField(61).primitive_root() == 2);
    CHECK(PrimeField(5).primitive_root() == 2);
    CHECK(PrimeField(3).primitive_root() == 2);
    for (std::uint64_t p = 3; p < 400; ++p) {
        if (!oracle::trial_division_prime(p)) continue;
        CHECK(PrimeField(p).primitive_root() == oracle::smallest_primitive_root(p));
    }
}

TEST_CASE("discrete_log") {
    const PrimeField f(61);
    CHECK(f.discrete_log(2, 11) == 15);
    CHECK(f.discrete_log(2, 11) == oracle::exhaustive_log(2, 11, 61));
    CHECK(f.discrete_log(2, 1) == 0);
    CHECK(f.discrete_log(2, 2) == 1);
    CHECK_THROWS_AS(f.discrete_log(2, 0), std::domain_error);
    CHECK_THROWS_AS(f.discrete_log(11, 5), std::domain_error);  // 11 has order 4

    // Bijection onto [0, p-2], for the canonical root and another one.
    for (Residue base : {Residue{2}, Residue{6}}) {
        REQUIRE(f.mult_order(base) == 60);
        std::vector<int> seen(60, 0);
        for (Residue x = 1; x < 61; ++x) {
            const auto e = f.discrete_log(base, x);
            REQUIRE(e < 60);
            CHECK(f.pow(base, e) == x);
            CHECK(e == oracle::exhaustive_log(base, x, 61));
            ++seen[e];
        }
        for (int s : seen) CHECK(s == 1);
    }
}
