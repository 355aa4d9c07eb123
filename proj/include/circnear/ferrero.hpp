#pragma once

/**
 * @file ferrero.hpp
 * @brief The regular group Phi = <g> inside Z_p^*, acting on Z_p by
 * multiplication, and its orbits.
 *
 * Orbits are identified by their smallest residue. A point -> representative
 * table is built once per group, so orbit membership is O(1).
 */

#include <memory>
#include <vector>

#include "circnear/field.hpp"

namespace circnear {

struct Orbit {
    Residue representative;        ///< smallest residue in the orbit
    std::vector<Residue> elements; ///< ascending

    bool operator==(const Orbit&) const = default;
};

class PhiGroup {
public:
    /// The cyclic subgroup of Z_p^* generated by g. Throws std::domain_error
    /// for g in {0, 1} (mod p): those do not give a nontrivial regular group.
    static PhiGroup generated_by(std::shared_ptr<const PrimeField> field, Residue g);

    const PrimeField& field() const noexcept { return *field_; }
    const std::shared_ptr<const PrimeField>& field_ptr() const noexcept { return field_; }
    Residue modulus() const noexcept { return field_->modulus(); }
    Residue generator() const noexcept { return generator_; }
    std::size_t order() const noexcept { return elements_.size(); }
    bool even() const noexcept { return order() % 2 == 0; }

    /// g^0, g^1, ..., g^{k-1}
    const std::vector<Residue>& elements() const noexcept { return elements_; }
    bool contains(Residue x) const noexcept { return x != 0 && rep_[x] == 1; }

    /// Canonical representative of the orbit of x.
    Residue representative(Residue x) const noexcept { return rep_[x]; }
    bool same_orbit(Residue x, Residue y) const noexcept { return rep_[x] == rep_[y]; }

    /// Representatives of the nontrivial orbits, ascending.
    const std::vector<Residue>& nontrivial_representatives() const noexcept { return nontrivial_reps_; }

    Orbit orbit(Residue a) const;
    /// All orbits (trivial one first), sorted by representative.
    std::vector<Orbit> orbit_partition() const;

private:
    PhiGroup() = default;

    std::shared_ptr<const PrimeField> field_;
    Residue generator_ = 0;
    std::vector<Residue> elements_;
    std::vector<Residue> rep_;
    std::vector<Residue> nontrivial_reps_;
};

inline PhiGroup build_phi(std::shared_ptr<const PrimeField> field, Residue g) {
    return PhiGroup::generated_by(std::move(field), g);
}

/// Executes the Ferrero-pair axioms: every non-identity element is fixed point
/// free and x -> x - phi*x is a bijection of Z_p.
bool is_ferrero_pair(const PhiGroup& phi);

}  // namespace circnear
