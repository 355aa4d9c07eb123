// circnear: inspect circular Ferrero pairs over Z_p, their disks and designs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circnear/catalog.hpp"
#include "circnear/designs.hpp"
#include "circnear/disks.hpp"
#include "circnear/nearring.hpp"

namespace {

using namespace circnear;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string set_str(const std::vector<Residue>& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
    os << '}';
    return os.str();
}

std::string params_str(const BibdParams& b) {
    std::ostringstream os;
    os << '(' << b.v << ", " << b.b << ", " << b.k << ", " << b.r << ", " << b.lambda << ')';
    return os.str();
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::shared_ptr<const PrimeField> field_for(std::uint64_t p) {
    if (p < 2) throw usage_error("p must be a prime >= 3");
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
    return PrimeField::make(p);
}

PhiGroup group_for(std::uint64_t p, std::uint64_t g) {
    auto field = field_for(p);
    if (g < 2 || g >= p) throw usage_error("generator must satisfy 2 <= g <= p-1, got " + std::to_string(g));
    return PhiGroup::generated_by(field, static_cast<Residue>(g));
}

void require_circular(const PhiGroup& phi) {
    if (!is_circular(phi).circular)
        throw std::domain_error("pair (Z_" + std::to_string(phi.modulus()) + ", <" + std::to_string(phi.generator()) +
                                ">) is not circular");
}

Residue radius_arg(const PhiGroup& phi, std::uint64_t a) {
    if (a % phi.modulus() == 0) throw std::domain_error("radius must be nonzero");
    return static_cast<Residue>(a % phi.modulus());
}

std::filesystem::path default_cache() {
    if (const char* dir = std::getenv("CIRCNEAR_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir) / "scan.jsonl";
    return std::filesystem::path(".circnear-cache") / "scan.jsonl";
}

int cmd_pair(std::uint64_t p, std::uint64_t g) {
    const PhiGroup phi = group_for(p, g);
    const auto orbits = phi.orbit_partition();
    std::cout << "p = " << p << "\ng = " << phi.generator() << "\norder = " << phi.order() << "\norbits = " << orbits.size()
              << "\norbit table:\n";
    for (const auto& o : orbits) std::cout << "  " << o.representative << ": " << set_str(o.elements) << '\n';
    std::cout << "ferrero_pair = " << bool_str(is_ferrero_pair(phi)) << '\n';
    const auto report = is_circular(phi);
    std::cout << "circular = " << bool_str(report.circular) << '\n';
    if (report.triple) std::cout << "witness_triple = " << set_str({report.triple->begin(), report.triple->end()}) << '\n';
    if (report.pair) std::cout << "witness_pair = " << set_str({report.pair->begin(), report.pair->end()}) << '\n';
    std::cout << "circularity_bound = " << circularity_bound(p) << '\n';
    return 0;
}

int cmd_disk(std::uint64_t p, std::uint64_t g, std::uint64_t a_in, std::uint64_t b_in, const std::string& method) {
    const PhiGroup phi = group_for(p, g);
    const Residue a = radius_arg(phi, a_in);
    const auto b = static_cast<Residue>(b_in % p);
    if (method == "fast" && !phi.even())
        throw unsupported_precondition("--method=fast requires |Phi| even, got " + std::to_string(phi.order()));
    require_circular(phi);

    Disk d;
    if (method == "brute") {
        d = disk_bruteforce(phi, a, b);
    } else if (method == "fast") {
        d = disk_fast(phi, a, b);
    } else if (method == "both") {
        d = disk_bruteforce(phi, a, b);
        if (phi.even()) {
            const bool match = disk_fast(phi, a, b).points == d.points;
            std::cout << "match = " << bool_str(match) << '\n';
            if (!match) throw std::runtime_error("fast and brute-force disks differ");
        }
    } else {
        d = disk(phi, a, b);
    }
    std::cout << "radius_class = " << d.radius_rep << "\ncenter = " << d.center << "\nsize = " << d.points.size()
              << "\npoints = " << set_str(d.points) << "\norbit_reps = " << set_str(d.orbit_reps) << '\n';
    if (phi.even()) std::cout << "decomposition = " << set_str(disk_orbit_decomposition(phi, a)) << '\n';
    std::cout << "interior = " << set_str(interior(phi, a, b)) << '\n';
    return 0;
}

int cmd_design(std::uint64_t p, std::uint64_t g, const std::string& blocks, const std::string& export_path,
               const std::string& format) {
    const PhiGroup phi = group_for(p, g);
    if (blocks == "disks") require_circular(phi);
    const Design d = blocks == "disks" ? disk_design(phi) : circle_design(phi);
    const auto check = verify_bibd(d);
    std::cout << "blocks = " << d.blocks().size() << '\n';
    if (check.ok()) {
        std::cout << "bibd = true\nparams (v, b, k, r, lambda) = " << params_str(*check.params) << '\n';
    } else {
        std::cout << "bibd = false\nfailure = " << check.failure << '\n';
    }
    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) throw std::runtime_error("cannot open " + export_path + " for writing");
        if (format == "csv") {
            write_incidence_csv(out, d);
        } else {
            out << design_to_json(d, phi.modulus(), phi.generator(), check.params) << '\n';
        }
        if (!out) throw std::runtime_error("write failed for " + export_path);
        std::cout << "exported = " << export_path << '\n';
    }
    return check.ok() ? 0 : 1;
}

int cmd_clay(std::uint64_t p, std::uint64_t g_phi, std::uint64_t g_partner, std::uint64_t a_in, std::uint64_t b_in) {
    const PhiGroup phi = group_for(p, g_phi);
    if (g_partner < 2 || g_partner >= p) throw usage_error("partner generator must satisfy 2 <= g <= p-1");
    const Residue a = radius_arg(phi, a_in);
    require_circular(phi);
    auto field = phi.field_ptr();
    const auto nr = ProjectionNearring::build(field, phi.generator());
    const auto partner = ProjectionNearring::build(field, static_cast<Residue>(g_partner));
    const auto cmp = compare_interiors(nr, {partner}, a, static_cast<Residue>(b_in % p));
    const auto& e = cmp.partners.front();
    std::cout << "partner = <" << e.partner_generator << "> (order " << e.partner_order << ")\n"
              << "clay_interior = " << set_str(e.interior) << "\nclay_size = " << e.interior.size()
              << "\nclay_orbit_reps = " << set_str(e.orbit_reps) << "\ndisk_interior = " << set_str(cmp.disk_interior)
              << "\ndisk_interior_size = " << cmp.disk_interior.size()
              << "\nsymmetric_difference_size = " << e.symmetric_difference.size() << '\n';
    return 0;
}

std::string opt_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_scan(std::uint64_t p_min, std::uint64_t p_max, std::optional<std::size_t> order, const std::string& cache_path,
             bool no_cache) {
    if (p_min > p_max) throw usage_error("p_min must not exceed p_max");
    ScanOptions opts;
    opts.p_min = p_min;
    opts.p_max = p_max;
    opts.order = order;
    std::optional<ScanCache> cache;
    if (!no_cache) cache.emplace(cache_path.empty() ? default_cache() : std::filesystem::path(cache_path));
    const auto result = scan(opts, cache ? &*cache : nullptr);
    std::cout << "p,g,k,circular,even,non_group,disk_size,bibd\n";
    for (const auto& r : result.records) {
        std::cout << r.p << ',' << r.g << ',' << r.k << ',' << bool_str(r.circular) << ',' << bool_str(r.even) << ','
                  << (r.non_group ? bool_str(*r.non_group) : "-") << ',' << opt_str(r.disk_size) << ','
                  << (r.bibd ? "\"" + params_str(*r.bibd) + "\"" : std::string("-")) << '\n';
    }
    std::cerr << "computed " << result.computed << " new record(s), " << result.records.size() - result.computed
              << " from cache" << (cache ? " (" + cache->path().string() + ")" : std::string{}) << '\n';
    return 0;
}

int cmd_conjecture(std::uint64_t p_min, std::uint64_t p_max, bool odd_only, bool details) {
    if (p_min > p_max) throw usage_error("p_min must not exceed p_max");
    const auto rows = conjecture_rows(p_min, p_max, odd_only);
    std::cout << "p,g,k,n,M_size,matches";
    if (details) std::cout << ",translation_invariant,union_formula,overlapping_pairs";
    std::cout << '\n';
    std::size_t flagged = 0;
    for (const auto& r : rows) {
        std::cout << r.p << ',' << r.g << ',' << r.k << ',' << r.n << ',' << r.m_size << ',' << bool_str(r.matches);
        if (details)
            std::cout << ',' << bool_str(r.translation_invariant) << ',' << bool_str(r.union_formula_holds) << ','
                      << r.overlapping_pairs;
        std::cout << '\n';
        flagged += !r.matches;
    }
    std::cerr << rows.size() << " row(s), " << flagged << " flagged (M_size != 2n)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circular Ferrero pairs over Z_p: circles, disks, designs"};
    app.require_subcommand(1);

    std::uint64_t p = 0, g = 0, g2 = 0, a = 0, b = 0, p_min = 0, p_max = 0;
    std::string method = "auto", blocks = "circles", export_path, format = "json", cache_path;
    std::size_t order = 0;
    bool all_orders = false, no_cache = false, odd_only = false, details = false;

    auto* pair = app.add_subcommand("pair", "order, orbits, Ferrero and circularity checks");
    pair->add_option("p", p, "prime modulus")->required();
    pair->add_option("g", g, "generator of Phi")->required();

    auto* dsk = app.add_subcommand("disk", "disk, orbit decomposition and interior of Phi(a)+b");
    dsk->add_option("p", p)->required();
    dsk->add_option("g", g)->required();
    dsk->add_option("a", a, "radius")->required();
    dsk->add_option("b", b, "center")->required();
    dsk->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "fast", "both"}));

    auto* des = app.add_subcommand("design", "build and verify the circle or disk design");
    des->add_option("p", p)->required();
    des->add_option("g", g)->required();
    des->add_option("--blocks", blocks)->check(CLI::IsMember({"circles", "disks"}));
    des->add_option("--export", export_path, "output file");
    des->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* clay = app.add_subcommand("clay", "partner-dependent interior points of Phi(a)+b");
    clay->add_option("p", p)->required();
    clay->add_option("g_phi", g)->required();
    clay->add_option("g_partner", g2)->required();
    clay->add_option("a", a)->required();
    clay->add_option("b", b)->required();

    auto* scn = app.add_subcommand("scan", "catalog subgroup orders over a prime range");
    scn->add_option("p_min", p_min)->required();
    scn->add_option("p_max", p_max)->required();
    auto* order_opt = scn->add_option("--order", order, "only this subgroup order");
    auto* all_opt = scn->add_flag("--all-orders", all_orders, "every subgroup order (default)");
    order_opt->excludes(all_opt);
    scn->add_option("--cache", cache_path, "cache file (default $CIRCNEAR_CACHE_DIR/scan.jsonl)");
    scn->add_flag("--no-cache", no_cache);

    auto* conj = app.add_subcommand("conjecture", "tangent radius class counts for circular pairs");
    conj->add_option("p_min", p_min)->required();
    conj->add_option("p_max", p_max)->required();
    conj->add_flag("--odd-only", odd_only);
    conj->add_flag("--details", details, "translation check and opposite-family union columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*pair) return cmd_pair(p, g);
        if (*dsk) return cmd_disk(p, g, a, b, method);
        if (*des) return cmd_design(p, g, blocks, export_path, format);
        if (*clay) return cmd_clay(p, g, g2, a, b);
        if (*scn) return cmd_scan(p_min, p_max, order_opt->count() ? std::optional(order) : std::nullopt, cache_path, no_cache);
        if (*conj) return cmd_conjecture(p_min, p_max, odd_only, details);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
