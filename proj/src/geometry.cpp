#include "circnear/geometry.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "circnear/pair_index.hpp"

namespace circnear {

bool Circle::contains(Residue x) const { return std::binary_search(points.begin(), points.end(), x); }

Circle circle(const PhiGroup& phi, Residue a, Residue b) {
    const PrimeField& f = phi.field();
    a %= f.modulus();
    b %= f.modulus();
    if (a == 0) throw std::domain_error("radius must be nonzero");
    Circle c{f.modulus(), phi.representative(a), b, {}};
    c.points.reserve(phi.order());
    for (Residue e : phi.elements()) c.points.push_back(f.add(f.mul(e, a), b));
    std::sort(c.points.begin(), c.points.end());
    return c;
}

std::vector<Circle> all_circles(const PhiGroup& phi) {
    std::vector<Circle> out;
    const Residue p = phi.modulus();
    out.reserve(phi.nontrivial_representatives().size() * p);
    for (Residue r : phi.nontrivial_representatives())
        for (Residue b = 0; b < p; ++b) out.push_back(circle(phi, r, b));
    return out;
}

CircularityReport is_circular(const PhiGroup& phi) {
    const Residue p = phi.modulus();
    const auto circles = all_circles(phi);
    std::vector<std::vector<Residue>> blocks;
    blocks.reserve(circles.size());
    for (const auto& c : circles) blocks.push_back(c.points);
    const PairBlockIndex index(p, blocks);

    CircularityReport report;
    // Two distinct blocks sharing three points <=> some pair's block list has
    // two members that also share a third point.
    for (Residue x = 0; x < p && !report.triple; ++x) {
        for (Residue y = x + 1; y < p && !report.triple; ++y) {
            const auto ids = index.blocks_through(x, y);
            for (std::size_t i = 0; i < ids.size() && !report.triple; ++i) {
                for (std::size_t j = i + 1; j < ids.size() && !report.triple; ++j) {
                    PointSet common;
                    std::set_intersection(blocks[ids[i]].begin(), blocks[ids[i]].end(),
                                          blocks[ids[j]].begin(), blocks[ids[j]].end(),
                                          std::back_inserter(common));
                    for (Residue z : common) {
                        if (z != x && z != y) {
                            std::array<Residue, 3> t{x, y, z};
                            std::sort(t.begin(), t.end());
                            report.triple = t;
                            break;
                        }
                    }
                }
            }
        }
    }
    for (Residue x = 0; x < p && !report.pair; ++x)
        for (Residue y = x + 1; y < p && !report.pair; ++y)
            if (index.count(x, y) < 2) report.pair = std::array<Residue, 2>{x, y};

    report.circular = !report.triple && !report.pair;
    return report;
}

std::size_t circularity_bound(std::size_t v) {
    if (v < 3) throw std::domain_error("circularity_bound: v must be >= 3");
    const std::size_t limit = 4 * v - 7;
    std::size_t k = 2;
    while ((2 * (k + 1) - 3) * (2 * (k + 1) - 3) <= limit) ++k;
    return k;
}

CircleFamily family(const PhiGroup& phi, Residue r, Residue c) {
    const PrimeField& f = phi.field();
    r %= f.modulus();
    c %= f.modulus();
    if (r == 0 || c == 0) throw std::domain_error("family: radius and center class must be nonzero");
    CircleFamily fam{phi.representative(r), phi.representative(c), {}};
    fam.circles.reserve(phi.order());
    for (Residue e : phi.elements()) fam.circles.push_back(circle(phi, r, f.mul(e, c)));
    return fam;
}

PointSet intersect(const Circle& a, const Circle& b) {
    if (a.modulus != b.modulus)
        throw std::domain_error("intersect: circles over Z_" + std::to_string(a.modulus) + " and Z_" +
                                std::to_string(b.modulus));
    PointSet out;
    std::set_intersection(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                          std::back_inserter(out));
    return out;
}

TangencyProfile tangency_profile(const CircleFamily& fam, const Circle& member) {
    if (std::find(fam.circles.begin(), fam.circles.end(), member) == fam.circles.end())
        throw std::domain_error("tangency_profile: circle is not a member of the family");
    TangencyProfile prof;
    for (const auto& other : fam.circles) {
        if (other == member) continue;
        const auto n = intersect(member, other).size();
        if (n == 1) ++prof.tangent;
        if (n == 2) ++prof.secant;
    }
    return prof;
}

PointSet translate(const PrimeField& field, const PointSet& points, Residue by) {
    PointSet out;
    out.reserve(points.size());
    for (Residue x : points) out.push_back(field.add(x, by % field.modulus()));
    std::sort(out.begin(), out.end());
    return out;
}

PointSet dilate(const PrimeField& field, const PointSet& points, Residue by) {
    PointSet out;
    out.reserve(points.size());
    for (Residue x : points) out.push_back(field.mul(x, by % field.modulus()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace circnear
