#pragma once

/**
 * @file designs.hpp
 * @brief Incidence structures built from circles or disks, and BIBD checks.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "circnear/geometry.hpp"

namespace circnear {

struct BibdParams {
    std::size_t v = 0;
    std::size_t b = 0;
    std::size_t k = 0;
    std::size_t r = 0;
    std::size_t lambda = 0;

    /// v*r == b*k and lambda*(v-1) == r*(k-1)
    bool satisfies_identities() const noexcept { return v * r == b * k && lambda * (v - 1) == r * (k - 1); }
    bool operator==(const BibdParams&) const = default;
};

/// Points 0..v-1 and a list of distinct, nonempty blocks in lexicographic
/// order of their ascending point lists. Pair counts are tabulated on
/// construction.
class Design {
public:
    /// Sorts and deduplicates. Throws std::invalid_argument for v < 2, an empty
    /// block, or a point outside [0, v).
    Design(std::size_t v, std::vector<PointSet> blocks);

    std::size_t v() const noexcept { return v_; }
    const std::vector<PointSet>& blocks() const noexcept { return blocks_; }
    std::size_t replication(Residue x) const { return replication_.at(x); }
    /// Blocks containing both x and y. Throws std::domain_error for x == y.
    std::size_t pair_count(Residue x, Residue y) const;

private:
    std::size_t v_;
    std::vector<PointSet> blocks_;
    std::vector<std::uint32_t> replication_;
    std::vector<std::uint32_t> pairs_;  // upper triangle
};

inline std::size_t pair_count(const Design& d, Residue x, Residue y) { return d.pair_count(x, y); }

/// Blocks = all circles.
Design circle_design(const PhiGroup& phi);

/// Blocks = all distinct disks D(a;b), a != 0. Disks come from disk(), so
/// even-order groups use the fast construction.
Design disk_design(const PhiGroup& phi);

struct BibdVerification {
    std::optional<BibdParams> params;
    std::string failure;            ///< empty on success
    std::vector<Residue> witness;   ///< block index, point, or point pair
    bool ok() const noexcept { return params.has_value(); }
};

/// Checks constant block size, replication and pair count, then both counting
/// identities. The first failure in canonical order is reported.
BibdVerification verify_bibd(const Design& d);

/// Closed-form parameters of the disk design for p prime and |Phi| = 2n:
/// (p, p(p-1)/2n, 2n^2+1, (p-1)(2n^2+1)/2n, n(2n^2+1)). Throws
/// std::domain_error unless 2n divides p-1 and every entry is integral.
BibdParams disk_design_parameters(std::uint64_t p, std::uint64_t n);

/// v x b 0/1 matrix; rows are points, columns follow blocks().
Eigen::MatrixXi incidence_matrix(const Design& d);

/// N * N^T == (r - lambda) I + lambda J
bool satisfies_gram_identity(const Eigen::MatrixXi& incidence, const BibdParams& params);

/// {"v", "phi": {"p", "g"}, "blocks", "params": {...} | null}
std::string design_to_json(const Design& d, Residue p, Residue g, const std::optional<BibdParams>& params);

/// Header "point,0,1,...,b-1", then one row per point.
void write_incidence_csv(std::ostream& out, const Design& d);

}  // namespace circnear
