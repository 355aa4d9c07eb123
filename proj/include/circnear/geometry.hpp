#pragma once

/**
 * @file geometry.hpp
 * @brief Circles Phi(a)+b, the block set of all circles, the circularity
 * decision, and families of circles with equal radius class whose centers
 * form one orbit.
 *
 * Point sets are ascending std::vector<Residue>.
 */

#include <array>
#include <optional>
#include <vector>

#include "circnear/ferrero.hpp"

namespace circnear {

using PointSet = std::vector<Residue>;

/// Phi(radius_rep) + center. (radius class, center) determines the circle
/// uniquely, so equality compares those two fields plus the modulus.
struct Circle {
    Residue modulus;
    Residue radius_rep;
    Residue center;
    PointSet points;

    bool operator==(const Circle& o) const {
        return modulus == o.modulus && radius_rep == o.radius_rep && center == o.center;
    }
    bool contains(Residue x) const;
};

/// Throws std::domain_error for a == 0.
Circle circle(const PhiGroup& phi, Residue a, Residue b);

/// Every circle, ordered by (radius representative, center).
std::vector<Circle> all_circles(const PhiGroup& phi);

struct CircularityReport {
    bool circular = false;
    /// Three distinct points lying on two distinct circles.
    std::optional<std::array<Residue, 3>> triple;
    /// Two distinct points lying on fewer than two circles.
    std::optional<std::array<Residue, 2>> pair;
};

CircularityReport is_circular(const PhiGroup& phi);

/// Largest k with (2k-3)^2 <= 4v-7, i.e. floor((3 + sqrt(4v-7)) / 2).
/// Throws std::domain_error for v < 3.
std::size_t circularity_bound(std::size_t v);

struct CircleFamily {
    Residue radius_rep;
    Residue center_orbit_rep;
    /// One circle per center g^i * c, i = 0..k-1.
    std::vector<Circle> circles;

    std::size_t size() const noexcept { return circles.size(); }
};

/// The circles Phi(r) + x for x in Phi(c). Throws std::domain_error if r or c is 0.
CircleFamily family(const PhiGroup& phi, Residue r, Residue c);

/// Setwise intersection. Throws std::domain_error for circles of different fields.
PointSet intersect(const Circle& a, const Circle& b);

struct TangencyProfile {
    std::size_t tangent = 0;   ///< other members meeting A in exactly one point
    std::size_t secant = 0;    ///< other members meeting A in exactly two points

    bool operator==(const TangencyProfile&) const = default;
};

/// Throws std::domain_error if A is not a member of F.
TangencyProfile tangency_profile(const CircleFamily& family, const Circle& member);

PointSet translate(const PrimeField& field, const PointSet& points, Residue by);
PointSet dilate(const PrimeField& field, const PointSet& points, Residue by);

}  // namespace circnear
