#include "circnear/ferrero.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace circnear {

PhiGroup PhiGroup::generated_by(std::shared_ptr<const PrimeField> field, Residue g) {
    if (!field) throw std::invalid_argument("PhiGroup: null field");
    const Residue p = field->modulus();
    g %= p;
    if (g == 0 || g == 1)
        throw std::domain_error("generator must satisfy 2 <= g <= p-1, got " + std::to_string(g));

    PhiGroup phi;
    phi.field_ = std::move(field);
    phi.generator_ = g;
    Residue x = 1;
    do {
        phi.elements_.push_back(x);
        x = phi.field_->mul(x, g);
    } while (x != 1);

    // Orbit representatives: walk each unvisited point's orbit in ascending
    // order, so the first point reached is the minimum.
    constexpr Residue unset = ~Residue{0};
    phi.rep_.assign(p, unset);
    phi.rep_[0] = 0;
    for (Residue a = 1; a < p; ++a) {
        if (phi.rep_[a] != unset) continue;
        phi.nontrivial_reps_.push_back(a);
        for (Residue e : phi.elements_) phi.rep_[phi.field_->mul(e, a)] = a;
    }
    return phi;
}

Orbit PhiGroup::orbit(Residue a) const {
    a %= modulus();
    Orbit o{rep_[a], {}};
    if (a == 0) {
        o.elements = {0};
        return o;
    }
    o.elements.reserve(order());
    for (Residue e : elements_) o.elements.push_back(field_->mul(e, a));
    std::sort(o.elements.begin(), o.elements.end());
    return o;
}

std::vector<Orbit> PhiGroup::orbit_partition() const {
    std::vector<Orbit> out;
    out.reserve(nontrivial_reps_.size() + 1);
    out.push_back(orbit(0));
    for (Residue r : nontrivial_reps_) out.push_back(orbit(r));
    return out;
}

bool is_ferrero_pair(const PhiGroup& phi) {
    const PrimeField& f = phi.field();
    const Residue p = f.modulus();
    if (phi.order() < 2) return false;
    std::vector<char> hit(p);
    for (Residue e : phi.elements()) {
        if (e == 1) continue;
        std::fill(hit.begin(), hit.end(), 0);
        for (Residue x = 0; x < p; ++x) {
            const Residue image = f.mul(e, x);
            if (image == x && x != 0) return false;  // fixed point
            const Residue y = f.sub(x, image);
            if (hit[y]) return false;  // not injective, hence not surjective
            hit[y] = 1;
        }
    }
    return true;
}

}  // namespace circnear
