#pragma once

/**
 * @file catalog.hpp
 * @brief Scanning primes for circular pairs, the line-delimited JSON cache of
 * scan records, and the odd-order tangent-radius experiment.
 */

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "circnear/designs.hpp"

namespace circnear {

struct ScanRecord {
    Residue p = 0;
    Residue g = 0;
    std::size_t k = 0;
    bool circular = false;
    bool even = false;
    /// D(1;0) minus 0 is not a multiplicative group. Circular pairs only.
    std::optional<bool> non_group;
    std::optional<std::size_t> disk_size;
    std::optional<BibdParams> bibd;
    std::string timestamp;

    std::string to_json_line() const;
    /// Throws std::invalid_argument on malformed input.
    static ScanRecord from_json_line(const std::string& line);
};

/// Smallest g of multiplicative order k, or nullopt if k does not divide p-1.
std::optional<Residue> canonical_generator(const PrimeField& field, std::size_t k);

/// One record for Phi of order k in Z_p. Disk data and the disk-design check
/// are filled in for circular pairs when verify_designs is set.
ScanRecord scan_pair(Residue p, std::size_t k, bool verify_designs = true);

/// Append-only cache keyed by (p, k).
class ScanCache {
public:
    /// Loads existing records; a missing file is an empty cache.
    explicit ScanCache(std::filesystem::path path);

    const std::filesystem::path& path() const noexcept { return path_; }
    bool contains(Residue p, std::size_t k) const { return keys_.count({p, k}) != 0; }
    const std::vector<ScanRecord>& records() const noexcept { return records_; }
    /// Throws std::runtime_error if the file cannot be written.
    void append(const ScanRecord& r);

private:
    std::filesystem::path path_;
    std::vector<ScanRecord> records_;
    std::set<std::pair<Residue, std::size_t>> keys_;
};

struct ScanOptions {
    std::uint64_t p_min = 5;
    std::uint64_t p_max = 100;
    std::optional<std::size_t> order;  ///< nullopt = every subgroup order >= 2
    bool verify_designs = true;
    unsigned threads = 0;              ///< 0 = hardware concurrency
};

struct ScanResult {
    std::vector<ScanRecord> records;   ///< sorted by (p, k), cached ones included
    std::size_t computed = 0;          ///< records not served from the cache
};

/// Throws std::invalid_argument if p_min > p_max.
ScanResult scan(const ScanOptions& options, ScanCache* cache = nullptr);

struct ConjectureRow {
    Residue p;
    Residue g;
    std::size_t k;
    std::size_t n;          ///< floor(k / 2)
    std::size_t m_size;     ///< tangent radius classes for a = 1, b = 0
    bool matches;           ///< m_size == 2n
    bool translation_invariant;
    bool union_formula_holds;   ///< D(1;0) equals the opposite-family union
    std::size_t overlapping_pairs;
};

/// One row per circular pair in range (only odd orders when odd_only).
std::vector<ConjectureRow> conjecture_rows(std::uint64_t p_min, std::uint64_t p_max, bool odd_only);

}  // namespace circnear
