#pragma once

/**
 * @file nearring.hpp
 * @brief Explicit field-generated planar nearrings, double planar pairs, and
 * partner-dependent interior points.
 *
 * A ProjectionNearring on Z_p is a * b = f(a) * b, with f(0) = 0 and
 * f : Z_p^* -> Phi a map satisfying f(phi x) = phi f(x) for phi in Phi.
 * Equivalently, f(x) = x / e(x), where e(x) is a fixed representative of the
 * orbit Phi(x). The representatives are taken from
 *
 *  - the complement K = {x : x^m = 1}, m = (p-1)/|Phi|, when gcd(|Phi|, m) = 1.
 *    Then f(x) = x^t with t = 1 (mod |Phi|), t = 0 (mod m), so f is a
 *    multiplicative retraction onto Phi;
 *  - the powers w^0, ..., w^{m-1} of the primitive root w otherwise.
 *
 * Every law is checked exhaustively when a nearring is built, so construction
 * is O(p^3).
 */

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circnear/ferrero.hpp"
#include "circnear/geometry.hpp"

namespace circnear {

enum class OrbitRepresentatives { complement_subgroup, primitive_root_powers };

struct LawViolation {
    std::string law;
    std::array<Residue, 3> triple;
};

class nearring_axiom_error : public std::domain_error {
public:
    explicit nearring_axiom_error(LawViolation v);
    const LawViolation& violation() const noexcept { return violation_; }

private:
    LawViolation violation_;
};

class ProjectionNearring {
public:
    /// Builds the multiplication for Phi = <g> and verifies left
    /// distributivity, associativity, 0-symmetry and planarity. Throws
    /// nearring_axiom_error on a violated law, std::domain_error for bad g.
    static ProjectionNearring build(std::shared_ptr<const PrimeField> field, Residue g);

    const PhiGroup& phi() const noexcept { return phi_; }
    const PrimeField& field() const noexcept { return phi_.field(); }
    Residue omega() const noexcept { return phi_.field().primitive_root(); }
    OrbitRepresentatives representatives() const noexcept { return reps_; }

    /// f(a); 0 for a = 0.
    Residue multiplier(Residue a) const noexcept { return f_[a]; }
    Residue multiply(Residue a, Residue b) const noexcept { return phi_.field().mul(f_[a], b); }

    /// Number of classes of the equivalent-multiplier relation, counted from
    /// the multiplication table.
    std::size_t multiplier_classes() const noexcept { return classes_; }

    /// {n * a + b : n not equivalent to 0}, ascending.
    PointSet block(Residue a, Residue b) const;

private:
    explicit ProjectionNearring(PhiGroup phi) : phi_(std::move(phi)) {}
    std::optional<LawViolation> check_laws();

    PhiGroup phi_;
    OrbitRepresentatives reps_ = OrbitRepresentatives::primitive_root_powers;
    std::vector<Residue> f_;
    std::size_t classes_ = 0;
};

inline ProjectionNearring build_projection_nearring(std::shared_ptr<const PrimeField> field, Residue g) {
    return ProjectionNearring::build(std::move(field), g);
}

struct DoublePlanarReport {
    bool ok = false;
    std::optional<LawViolation> violation;
};

/// Exhaustive check of a*(b o c) = (a*b) o (a*c) and a o (b*c) = (a o b)*(a o c)
/// over all triples. Throws std::domain_error for nearrings on different fields.
DoublePlanarReport is_double_planar(const ProjectionNearring& star, const ProjectionNearring& circ);

/// A verified double planar nearring. first() supplies the circles, second()
/// the rays.
class DoublePlanarPair {
public:
    /// Throws nearring_axiom_error with the violating triple.
    DoublePlanarPair(ProjectionNearring first, ProjectionNearring second);

    const ProjectionNearring& first() const noexcept { return first_; }
    const ProjectionNearring& second() const noexcept { return second_; }

private:
    ProjectionNearring first_;
    ProjectionNearring second_;
};

/// Points c off the circle Phi(a)+b such that every ray {n o d + c} of the
/// partner multiplication meets the circle at most once, i.e. the circle's
/// points lie on pairwise distinct rays from c. Throws std::domain_error for
/// a == 0.
PointSet clay_interior(const DoublePlanarPair& pair, Residue a, Residue b);

struct InteriorComparison {
    struct Entry {
        Residue partner_generator;
        std::size_t partner_order;
        PointSet interior;
        std::vector<Residue> orbit_reps;     ///< Phi-orbit representatives about the center
        PointSet symmetric_difference;       ///< against the disk interior
    };
    Residue radius_rep;
    Residue center;
    PointSet disk_interior;
    std::vector<Entry> partners;
};

/// Clay interiors per partner alongside the partner-free disk interior.
InteriorComparison compare_interiors(const ProjectionNearring& nearring,
                                     const std::vector<ProjectionNearring>& partners, Residue a, Residue b);

}  // namespace circnear
