#include "circnear/nearring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "circnear/disks.hpp"

namespace circnear {

namespace {

std::string describe(const LawViolation& v) {
    return v.law + " fails at (" + std::to_string(v.triple[0]) + ", " + std::to_string(v.triple[1]) + ", " +
           std::to_string(v.triple[2]) + ")";
}

}  // namespace

nearring_axiom_error::nearring_axiom_error(LawViolation v)
    : std::domain_error(describe(v)), violation_(std::move(v)) {}

ProjectionNearring ProjectionNearring::build(std::shared_ptr<const PrimeField> field, Residue g) {
    ProjectionNearring nr(PhiGroup::generated_by(std::move(field), g));
    const PrimeField& f = nr.field();
    const Residue p = f.modulus();
    const std::uint64_t k = nr.phi_.order();
    const std::uint64_t m = (p - 1u) / k;

    nr.f_.assign(p, 0);
    if (std::gcd(k, m) == 1) {
        nr.reps_ = OrbitRepresentatives::complement_subgroup;
        // t = 1 (mod k), t = 0 (mod m)
        std::uint64_t t = 0;
        while (t % k != 1) t += m;
        for (Residue x = 1; x < p; ++x) nr.f_[x] = f.pow(x, t);
    } else {
        nr.reps_ = OrbitRepresentatives::primitive_root_powers;
        const Residue w = f.primitive_root();
        for (Residue x = 1; x < p; ++x) nr.f_[x] = f.pow(w, m * (f.index(x) / m));
    }

    if (auto v = nr.check_laws()) throw nearring_axiom_error(*v);
    return nr;
}

std::optional<LawViolation> ProjectionNearring::check_laws() {
    const PrimeField& f = field();
    const Residue p = f.modulus();
    auto mul = [&](Residue a, Residue b) { return multiply(a, b); };

    for (Residue a = 0; a < p; ++a) {
        if (mul(0, a) != 0 || mul(a, 0) != 0) return LawViolation{"0-symmetry", {a, 0, 0}};
        for (Residue b = 0; b < p; ++b) {
            const Residue ab = mul(a, b);
            for (Residue c = 0; c < p; ++c) {
                if (mul(a, f.add(b, c)) != f.add(ab, mul(a, c))) return LawViolation{"left distributivity", {a, b, c}};
                if (mul(a, mul(b, c)) != mul(ab, c)) return LawViolation{"associativity", {a, b, c}};
            }
        }
    }

    // Equivalent multipliers, from whole rows of the table.
    std::map<std::vector<Residue>, Residue> rows;
    std::vector<Residue> row(p);
    for (Residue a = 0; a < p; ++a) {
        for (Residue n = 0; n < p; ++n) row[n] = mul(a, n);
        rows.emplace(row, a);
    }
    classes_ = rows.size();
    if (classes_ < 3) return LawViolation{"planarity: fewer than three multiplier classes", {0, 0, 0}};

    // a*x = b*x + c has exactly one solution for every c iff x -> a*x - b*x
    // is a bijection.
    std::vector<Residue> reps;
    for (const auto& [r, a] : rows) reps.push_back(a);
    std::vector<char> hit(p);
    for (Residue a : reps) {
        for (Residue b : reps) {
            if (a == b) continue;
            std::fill(hit.begin(), hit.end(), 0);
            for (Residue x = 0; x < p; ++x) {
                const Residue c = f.sub(mul(a, x), mul(b, x));
                if (hit[c]) return LawViolation{"planarity: equation not uniquely solvable", {a, b, c}};
                hit[c] = 1;
            }
        }
    }
    return std::nullopt;
}

PointSet ProjectionNearring::block(Residue a, Residue b) const {
    const PrimeField& f = field();
    PointSet out;
    for (Residue n = 1; n < f.modulus(); ++n) out.push_back(f.add(multiply(n, a), b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DoublePlanarReport is_double_planar(const ProjectionNearring& star, const ProjectionNearring& circ) {
    if (star.field().modulus() != circ.field().modulus())
        throw std::domain_error("double planar check across different fields");
    const Residue p = star.field().modulus();
    DoublePlanarReport report;
    for (Residue a = 0; a < p; ++a) {
        for (Residue b = 0; b < p; ++b) {
            const Residue a_star_b = star.multiply(a, b);
            const Residue a_circ_b = circ.multiply(a, b);
            for (Residue c = 0; c < p; ++c) {
                if (star.multiply(a, circ.multiply(b, c)) != circ.multiply(a_star_b, star.multiply(a, c))) {
                    report.violation = LawViolation{"a*(b o c) = (a*b) o (a*c)", {a, b, c}};
                    return report;
                }
                if (circ.multiply(a, star.multiply(b, c)) != star.multiply(a_circ_b, circ.multiply(a, c))) {
                    report.violation = LawViolation{"a o (b*c) = (a o b)*(a o c)", {a, b, c}};
                    return report;
                }
            }
        }
    }
    report.ok = true;
    return report;
}

DoublePlanarPair::DoublePlanarPair(ProjectionNearring first, ProjectionNearring second)
    : first_(std::move(first)), second_(std::move(second)) {
    const auto report = is_double_planar(first_, second_);
    if (!report.ok) throw nearring_axiom_error(*report.violation);
}

PointSet clay_interior(const DoublePlanarPair& pair, Residue a, Residue b) {
    const PhiGroup& phi = pair.first().phi();
    const PhiGroup& partner = pair.second().phi();
    const PrimeField& f = phi.field();
    const Circle boundary = circle(phi, a, b);

    PointSet out;
    std::vector<Residue> rays;
    for (Residue c = 0; c < f.modulus(); ++c) {
        if (boundary.contains(c)) continue;
        // The ray {n o d + c} is (Gamma(d) + c) plus c itself, so it is named
        // by the partner orbit of d.
        rays.clear();
        for (Residue x : boundary.points) rays.push_back(partner.representative(f.sub(x, c)));
        std::sort(rays.begin(), rays.end());
        if (std::adjacent_find(rays.begin(), rays.end()) == rays.end()) out.push_back(c);
    }
    return out;
}

InteriorComparison compare_interiors(const ProjectionNearring& nearring,
                                     const std::vector<ProjectionNearring>& partners, Residue a, Residue b) {
    const PhiGroup& phi = nearring.phi();
    const PrimeField& f = phi.field();
    InteriorComparison out;
    out.radius_rep = phi.representative(a % f.modulus());
    out.center = b % f.modulus();
    out.disk_interior = interior(phi, a, b);
    for (const auto& partner : partners) {
        const DoublePlanarPair pair(nearring, partner);
        InteriorComparison::Entry e;
        e.partner_generator = partner.phi().generator();
        e.partner_order = partner.phi().order();
        e.interior = clay_interior(pair, a, b);
        for (Residue x : e.interior) e.orbit_reps.push_back(phi.representative(f.sub(x, out.center)));
        std::sort(e.orbit_reps.begin(), e.orbit_reps.end());
        e.orbit_reps.erase(std::unique(e.orbit_reps.begin(), e.orbit_reps.end()), e.orbit_reps.end());
        std::set_symmetric_difference(e.interior.begin(), e.interior.end(), out.disk_interior.begin(),
                                      out.disk_interior.end(), std::back_inserter(e.symmetric_difference));
        out.partners.push_back(std::move(e));
    }
    return out;
}

}  // namespace circnear
