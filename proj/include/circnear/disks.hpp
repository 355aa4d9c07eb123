#pragma once

/**
 * @file disks.hpp
 * @brief Disks and interior parts of circles.
 *
 * The disk D(a;b) is the union of every circle that passes through the
 * center b and meets the circle Phi(a)+b in exactly one point. The interior
 * part is D(a;b) minus Phi(a)+b.
 *
 * disk_bruteforce() evaluates that definition directly and is the reference
 * for everything else here. For |Phi| = 2n even, disk_fast() builds the disk
 * as the points of the family E^r_r translated by b with r = a/2, and
 * disk_orbit_decomposition() names its n+1 orbits explicitly.
 */

#include <stdexcept>
#include <vector>

#include "circnear/geometry.hpp"

namespace circnear {

/// Raised when a fast path is asked for on an odd-order group.
class unsupported_precondition : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Disk {
    Residue radius_rep;
    Residue center;
    PointSet points;
    /// Orbit representatives o_i with points = (union of Phi(o_i)) + center,
    /// ascending. Only a complete description when the disk is a union of
    /// orbits about its center (always the case for even |Phi|).
    std::vector<Residue> orbit_reps;

    bool contains(Residue x) const;
};

/// Reference construction straight from the definition. Throws
/// std::domain_error for a == 0.
Disk disk_bruteforce(const PhiGroup& phi, Residue a, Residue b);

/// D(a;b) with Phi(a)+b removed. Throws std::domain_error for a == 0.
PointSet interior(const PhiGroup& phi, Residue a, Residue b);

/// Even-order construction. Throws unsupported_precondition for odd |Phi| and
/// std::domain_error for a == 0.
Disk disk_fast(const PhiGroup& phi, Residue a, Residue b);

/// Uses disk_fast() when |Phi| is even, disk_bruteforce() otherwise.
Disk disk(const PhiGroup& phi, Residue a, Residue b);

/// {0, class(a)} together with class((g^i + 1) * a/2) for i = 1..n-1, where
/// |Phi| = 2n and g is the stored generator. Ascending.
std::vector<Residue> disk_orbit_decomposition(const PhiGroup& phi, Residue a);

/// Setwise comparison of D(a;b) and D(a2;b2).
bool disk_equal(const PhiGroup& phi, Residue a, Residue b, Residue a2, Residue b2);

/// True iff s (which must not contain 0) contains 1 and is closed under
/// multiplication and inversion. Throws std::domain_error if 0 is in s.
bool is_multiplicative_group(const PrimeField& field, const PointSet& s);

/// Orbit classes of radii r admitting a circle Phi(r)+c through b that is
/// tangent to Phi(a)+b, each with one witnessing circle.
struct TangentRadiusSet {
    Residue radius_rep;
    Residue center;
    std::vector<Residue> classes;   ///< ascending
    std::vector<Circle> witnesses;  ///< witnesses[i] has radius class classes[i]
};

TangentRadiusSet tangent_radius_set(const PhiGroup& phi, Residue a, Residue b);

/// Union over r in the tangent classes of the points of E^r_{-r} + b. Every
/// such circle passes through b; overlapping_pairs counts the pairs of circles
/// that also share a point other than b. Used by the odd-order experiment.
struct OppositeFamilyUnion {
    PointSet points;
    std::size_t circles = 0;
    std::size_t overlapping_pairs = 0;
};

OppositeFamilyUnion opposite_family_union(const PhiGroup& phi, const TangentRadiusSet& m);

}  // namespace circnear
