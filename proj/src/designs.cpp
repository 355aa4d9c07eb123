#include "circnear/designs.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include <json.hpp>

#include "circnear/disks.hpp"

namespace circnear {

namespace {

struct PointSetHash {
    std::size_t operator()(const PointSet& s) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (Residue x : s) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

std::size_t tri_index(std::size_t v, Residue x, Residue y) {
    if (x > y) std::swap(x, y);
    return std::size_t{x} * v - std::size_t{x} * (x + 1) / 2 + (y - x - 1);
}

}  // namespace

Design::Design(std::size_t v, std::vector<PointSet> blocks) : v_(v) {
    if (v < 2) throw std::invalid_argument("design needs at least two points");
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("design block is empty");
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        if (b.back() >= v)
            throw std::invalid_argument("design point " + std::to_string(b.back()) + " outside [0, v)");
    }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    blocks_ = std::move(blocks);

    replication_.assign(v, 0);
    pairs_.assign(v * (v - 1) / 2, 0);
    for (const auto& b : blocks_) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            ++replication_[b[i]];
            for (std::size_t j = i + 1; j < b.size(); ++j) ++pairs_[tri_index(v_, b[i], b[j])];
        }
    }
}

std::size_t Design::pair_count(Residue x, Residue y) const {
    if (x == y) throw std::domain_error("pair_count: points must be distinct");
    if (x >= v_ || y >= v_) throw std::out_of_range("pair_count: point outside design");
    return pairs_[tri_index(v_, x, y)];
}

Design circle_design(const PhiGroup& phi) {
    std::vector<PointSet> blocks;
    for (auto& c : all_circles(phi)) blocks.push_back(std::move(c.points));
    return Design(phi.modulus(), std::move(blocks));
}

Design disk_design(const PhiGroup& phi) {
    // D(a;b) depends on a only through the circle Phi(a)+b, so one radius per
    // orbit covers every block.
    std::unordered_set<PointSet, PointSetHash> seen;
    const Residue p = phi.modulus();
    for (Residue a : phi.nontrivial_representatives())
        for (Residue b = 0; b < p; ++b) seen.insert(disk(phi, a, b).points);
    return Design(p, std::vector<PointSet>(seen.begin(), seen.end()));
}

BibdVerification verify_bibd(const Design& d) {
    BibdVerification out;
    const auto& blocks = d.blocks();
    if (blocks.empty()) {
        out.failure = "design has no blocks";
        return out;
    }
    const std::size_t k = blocks.front().size();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != k) {
            out.failure = "block " + std::to_string(i) + " has size " + std::to_string(blocks[i].size()) +
                          ", expected " + std::to_string(k);
            out.witness = {static_cast<Residue>(i)};
            return out;
        }
    }
    const std::size_t r = d.replication(0);
    for (Residue x = 0; x < d.v(); ++x) {
        if (d.replication(x) != r) {
            out.failure = "point " + std::to_string(x) + " lies on " + std::to_string(d.replication(x)) +
                          " blocks, expected " + std::to_string(r);
            out.witness = {x};
            return out;
        }
    }
    const std::size_t lambda = d.pair_count(0, 1);
    for (Residue x = 0; x < d.v(); ++x) {
        for (Residue y = x + 1; y < d.v(); ++y) {
            if (d.pair_count(x, y) != lambda) {
                out.failure = "pair {" + std::to_string(x) + "," + std::to_string(y) + "} lies on " +
                              std::to_string(d.pair_count(x, y)) + " blocks, expected " + std::to_string(lambda);
                out.witness = {x, y};
                return out;
            }
        }
    }
    const BibdParams params{d.v(), blocks.size(), k, r, lambda};
    if (!params.satisfies_identities()) {
        out.failure = "counting identities fail";
        return out;
    }
    out.params = params;
    return out;
}

BibdParams disk_design_parameters(std::uint64_t p, std::uint64_t n) {
    if (n == 0 || p < 2 || (p - 1) % (2 * n) != 0)
        throw std::domain_error("2n must divide p-1 (p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")");
    const std::uint64_t k = 2 * n * n + 1;
    if ((p - 1) * k % (2 * n) != 0) throw std::domain_error("replication number is not integral");
    return {p, p * (p - 1) / (2 * n), k, (p - 1) * k / (2 * n), n * k};
}

Eigen::MatrixXi incidence_matrix(const Design& d) {
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(d.v()),
                                              static_cast<Eigen::Index>(d.blocks().size()));
    for (std::size_t j = 0; j < d.blocks().size(); ++j)
        for (Residue x : d.blocks()[j]) m(x, static_cast<Eigen::Index>(j)) = 1;
    return m;
}

bool satisfies_gram_identity(const Eigen::MatrixXi& incidence, const BibdParams& params) {
    const Eigen::Index v = incidence.rows();
    const Eigen::MatrixXi gram = incidence * incidence.transpose();
    const auto lambda = static_cast<int>(params.lambda);
    const Eigen::MatrixXi expected = Eigen::MatrixXi::Constant(v, v, lambda) +
                                     (static_cast<int>(params.r) - lambda) * Eigen::MatrixXi::Identity(v, v);
    return gram == expected;
}

std::string design_to_json(const Design& d, Residue p, Residue g, const std::optional<BibdParams>& params) {
    nlohmann::json j;
    j["v"] = d.v();
    j["phi"] = {{"p", p}, {"g", g}};
    j["blocks"] = d.blocks();
    if (params) {
        j["params"] = {{"v", params->v}, {"b", params->b}, {"k", params->k}, {"r", params->r},
                       {"lambda", params->lambda}};
    } else {
        j["params"] = nullptr;
    }
    return j.dump();
}

void write_incidence_csv(std::ostream& out, const Design& d) {
    const auto m = incidence_matrix(d);
    out << "point";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << ',' << j;
    out << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << i;
        for (Eigen::Index j = 0; j < m.cols(); ++j) out << ',' << m(i, j);
        out << '\n';
    }
}

}  // namespace circnear
