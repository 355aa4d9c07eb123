#include "circnear/disks.hpp"

#include <algorithm>
#include <string>

namespace circnear {

namespace {

PointSet from_mask(const std::vector<char>& mask) {
    PointSet out;
    for (Residue x = 0; x < mask.size(); ++x)
        if (mask[x]) out.push_back(x);
    return out;
}

std::vector<Residue> orbit_reps_about(const PhiGroup& phi, const PointSet& points, Residue center) {
    const PrimeField& f = phi.field();
    std::vector<Residue> reps;
    for (Residue x : points) reps.push_back(phi.representative(f.sub(x, center)));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

void require_radius(Residue a, Residue p) {
    if (a % p == 0) throw std::domain_error("radius must be nonzero");
}

// Calls visit(r, c) for each circle Phi(r)+c through b that
// meets Phi(a)+b in exactly one point; r runs over orbit representatives.
template <class Visit>
void for_each_tangent_circle_through_center(const PhiGroup& phi, Residue a, Residue b, Visit&& visit) {
    const PrimeField& f = phi.field();
    const Residue p = f.modulus();
    std::vector<char> boundary(p, 0);
    for (Residue e : phi.elements()) boundary[f.add(f.mul(e, a), b)] = 1;

    for (Residue r : phi.nontrivial_representatives()) {
        for (Residue e : phi.elements()) {
            const Residue c = f.sub(b, f.mul(e, r));  // b = e*r + c lies on Phi(r)+c
            std::size_t hits = 0;
            for (Residue y : phi.elements()) {
                hits += boundary[f.add(f.mul(y, r), c)];
                if (hits > 1) break;
            }
            if (hits == 1) visit(r, c);
        }
    }
}

}  // namespace

bool Disk::contains(Residue x) const { return std::binary_search(points.begin(), points.end(), x); }

Disk disk_bruteforce(const PhiGroup& phi, Residue a, Residue b) {
    const PrimeField& f = phi.field();
    const Residue p = f.modulus();
    require_radius(a, p);
    a %= p;
    b %= p;
    std::vector<char> mask(p, 0);
    for_each_tangent_circle_through_center(phi, a, b, [&](Residue r, Residue c) {
        for (Residue y : phi.elements()) mask[f.add(f.mul(y, r), c)] = 1;
    });
    Disk d{phi.representative(a), b, from_mask(mask), {}};
    d.orbit_reps = orbit_reps_about(phi, d.points, b);
    return d;
}

PointSet interior(const PhiGroup& phi, Residue a, Residue b) {
    const Disk d = disk(phi, a, b);
    const Circle boundary = circle(phi, a, b);
    PointSet out;
    std::set_difference(d.points.begin(), d.points.end(), boundary.points.begin(), boundary.points.end(),
                        std::back_inserter(out));
    return out;
}

Disk disk_fast(const PhiGroup& phi, Residue a, Residue b) {
    if (!phi.even())
        throw unsupported_precondition("fast disk construction requires |Phi| even, got |Phi| = " +
                                       std::to_string(phi.order()));
    const PrimeField& f = phi.field();
    const Residue p = f.modulus();
    require_radius(a, p);
    a %= p;
    b %= p;
    const Residue r = f.mul(a, f.inv(2));
    std::vector<char> mask(p, 0);
    for (Residue e : phi.elements()) {
        const Residue c = f.add(f.mul(e, r), b);
        for (Residue y : phi.elements()) mask[f.add(f.mul(y, r), c)] = 1;
    }
    Disk d{phi.representative(a), b, from_mask(mask), {}};
    d.orbit_reps = orbit_reps_about(phi, d.points, b);
    return d;
}

Disk disk(const PhiGroup& phi, Residue a, Residue b) {
    return phi.even() ? disk_fast(phi, a, b) : disk_bruteforce(phi, a, b);
}

std::vector<Residue> disk_orbit_decomposition(const PhiGroup& phi, Residue a) {
    if (!phi.even())
        throw unsupported_precondition("orbit decomposition requires |Phi| even, got |Phi| = " +
                                       std::to_string(phi.order()));
    const PrimeField& f = phi.field();
    require_radius(a, f.modulus());
    a %= f.modulus();
    const Residue r = f.mul(a, f.inv(2));
    const std::size_t n = phi.order() / 2;
    std::vector<Residue> reps{0, phi.representative(a)};
    for (std::size_t i = 1; i < n; ++i) {
        const Residue g_i = phi.elements()[i];
        reps.push_back(phi.representative(f.mul(f.add(g_i, 1), r)));
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

bool disk_equal(const PhiGroup& phi, Residue a, Residue b, Residue a2, Residue b2) {
    return disk(phi, a, b).points == disk(phi, a2, b2).points;
}

bool is_multiplicative_group(const PrimeField& field, const PointSet& s) {
    const Residue p = field.modulus();
    std::vector<char> in(p, 0);
    for (Residue x : s) {
        if (x % p == 0) throw std::domain_error("is_multiplicative_group: set contains 0");
        in[x % p] = 1;
    }
    if (!in[1]) return false;
    for (Residue x : s) {
        if (!in[field.inv(x % p)]) return false;
        for (Residue y : s)
            if (!in[field.mul(x % p, y % p)]) return false;
    }
    return true;
}

TangentRadiusSet tangent_radius_set(const PhiGroup& phi, Residue a, Residue b) {
    const Residue p = phi.modulus();
    require_radius(a, p);
    a %= p;
    b %= p;
    TangentRadiusSet m{phi.representative(a), b, {}, {}};
    for_each_tangent_circle_through_center(phi, a, b, [&](Residue r, Residue c) {
        if (!m.classes.empty() && m.classes.back() == r) return;  // reps are visited in order
        m.classes.push_back(r);
        m.witnesses.push_back(circle(phi, r, c));
    });
    return m;
}

OppositeFamilyUnion opposite_family_union(const PhiGroup& phi, const TangentRadiusSet& m) {
    const PrimeField& f = phi.field();
    std::vector<Circle> circles;
    for (Residue r : m.classes) {
        const Residue minus_r = f.neg(r);
        for (Residue e : phi.elements()) circles.push_back(circle(phi, r, f.add(f.mul(e, minus_r), m.center)));
    }
    std::vector<char> mask(f.modulus(), 0);
    OppositeFamilyUnion u;
    u.circles = circles.size();
    for (std::size_t i = 0; i < circles.size(); ++i) {
        for (Residue x : circles[i].points) mask[x] = 1;
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            for (Residue x : intersect(circles[i], circles[j])) {
                if (x != m.center) {
                    ++u.overlapping_pairs;
                    break;
                }
            }
        }
    }
    u.points = from_mask(mask);
    return u;
}

}  // namespace circnear
