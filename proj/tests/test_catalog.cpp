#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "circnear/catalog.hpp"
#include "circnear/geometry.hpp"

using namespace circnear;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const char* name) : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("canonical_generator") {
    const PrimeField f(61);
    CHECK(canonical_generator(f, 4) == Residue{11});
    CHECK(canonical_generator(f, 5) == Residue{9});
    CHECK(canonical_generator(f, 3) == Residue{13});
    CHECK(canonical_generator(f, 60) == Residue{2});
    CHECK_FALSE(canonical_generator(f, 7));
}

TEST_CASE("scan record JSON lines round-trip") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        ScanRecord r;
        r.p = rng() % 1000;
        r.g = rng() % 1000;
        r.k = rng() % 20;
        r.circular = rng() % 2;
        r.even = rng() % 2;
        if (rng() % 2) r.non_group = rng() % 2;
        if (rng() % 2) r.disk_size = rng() % 100;
        if (rng() % 2) r.bibd = BibdParams{rng() % 9, rng() % 9, rng() % 9, rng() % 9, rng() % 9};
        r.timestamp = "2026-01-01T00:00:00Z";
        const auto back = ScanRecord::from_json_line(r.to_json_line());
        CHECK(back.to_json_line() == r.to_json_line());
        CHECK(back.bibd == r.bibd);
    }
    CHECK_THROWS_AS(ScanRecord::from_json_line("{\"p\": 3"), std::invalid_argument);
    CHECK_THROWS_AS(ScanRecord::from_json_line("{\"p\": 3}"), std::invalid_argument);
}

TEST_CASE("scan finds Z_61 with order 4") {
    ScanOptions opts;
    opts.p_min = 5;
    opts.p_max = 100;
    opts.order = 4;
    const auto result = scan(opts);
    bool found = false;
    for (const auto& r : result.records) {
        CHECK(r.k == 4);
        if (r.p == 61) {
            found = true;
            CHECK(r.circular);
            CHECK(r.g == 11);
            CHECK(r.disk_size == std::size_t{9});
            CHECK(r.non_group == true);
            CHECK(r.bibd == BibdParams{61, 915, 9, 135, 18});
        }
        if (r.circular && r.even) CHECK(r.disk_size == r.k * r.k / 2 + 1);
    }
    CHECK(found);
    CHECK(result.computed == result.records.size());
}

TEST_CASE("scan cache makes re-runs idempotent") {
    TempFile tmp("circnear_test_cache.jsonl");
    ScanOptions opts;
    opts.p_min = 5;
    opts.p_max = 40;
    std::size_t first_count = 0;
    {
        ScanCache cache(tmp.path);
        const auto first = scan(opts, &cache);
        CHECK(first.computed == first.records.size());
        CHECK(first.computed > 0);
        first_count = first.records.size();
    }
    ScanCache reloaded(tmp.path);
    CHECK(reloaded.records().size() == first_count);
    const auto second = scan(opts, &reloaded);
    CHECK(second.computed == 0);
    CHECK(second.records.size() == first_count);

    std::ifstream in(tmp.path);
    std::size_t lines = 0;
    for (std::string l; std::getline(in, l);) ++lines;
    CHECK(lines == first_count);

    opts.p_min = 100;
    opts.p_max = 5;
    CHECK_THROWS_AS(scan(opts), std::invalid_argument);
}

TEST_CASE("unwritable cache path is reported") {
    ScanCache cache("/proc/circnear-not-writable/scan.jsonl");
    ScanOptions opts;
    opts.p_min = 5;
    opts.p_max = 7;
    CHECK_THROWS_AS(scan(opts, &cache), std::runtime_error);
}

TEST_CASE("the circularity pre-filter never rejects a circular pair") {
    for (std::uint64_t p = 5; p <= 50; ++p) {
        if (!is_prime(p)) continue;
        auto field = PrimeField::make(p);
        for (std::size_t k = 2; k < p; ++k) {
            if ((p - 1) % k != 0) continue;
            const auto rec = scan_pair(p, k, false);
            const auto phi = build_phi(field, *canonical_generator(*field, k));
            CHECK_MESSAGE(rec.circular == is_circular(phi).circular, "p=", p, " k=", k);
        }
    }
}

TEST_CASE("conjecture rows") {
    const auto odd = conjecture_rows(5, 80, true);
    REQUIRE_FALSE(odd.empty());
    for (const auto& r : odd) {
        CHECK(r.k % 2 == 1);
        CHECK(r.n == r.k / 2);
        CHECK(r.matches == (r.m_size == 2 * r.n));
    }
    const auto all = conjecture_rows(5, 80, false);
    CHECK(all.size() > odd.size());
    CHECK_THROWS_AS(conjecture_rows(9, 5, true), std::invalid_argument);
}
