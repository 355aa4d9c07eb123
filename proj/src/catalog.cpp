#include "circnear/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "circnear/disks.hpp"

namespace circnear {

namespace {

using nlohmann::json;

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// The circularity bound is necessary, and order 2 never gives two blocks
// through a pair.
bool passes_prefilter(Residue p, std::size_t k) { return k >= 3 && k <= circularity_bound(p); }

std::vector<Residue> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<Residue> out;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n)
        if (is_prime(n)) out.push_back(static_cast<Residue>(n));
    return out;
}

std::vector<std::size_t> subgroup_orders(Residue p) {
    std::vector<std::size_t> out;
    for (std::size_t k = 2; k <= p - 1u; ++k)
        if ((p - 1u) % k == 0) out.push_back(k);
    return out;
}

}  // namespace

std::string ScanRecord::to_json_line() const {
    json j{{"p", p}, {"g", g}, {"k", k}, {"circular", circular}, {"even", even}, {"timestamp", timestamp}};
    j["non_group"] = non_group ? json(*non_group) : json(nullptr);
    j["disk_size"] = disk_size ? json(*disk_size) : json(nullptr);
    if (bibd) {
        j["bibd"] = {{"v", bibd->v}, {"b", bibd->b}, {"k", bibd->k}, {"r", bibd->r}, {"lambda", bibd->lambda}};
    } else {
        j["bibd"] = nullptr;
    }
    return j.dump();
}

ScanRecord ScanRecord::from_json_line(const std::string& line) {
    try {
        const json j = json::parse(line);
        ScanRecord r;
        r.p = j.at("p").get<Residue>();
        r.g = j.at("g").get<Residue>();
        r.k = j.at("k").get<std::size_t>();
        r.circular = j.at("circular").get<bool>();
        r.even = j.at("even").get<bool>();
        r.timestamp = j.value("timestamp", "");
        if (j.contains("non_group") && !j["non_group"].is_null()) r.non_group = j["non_group"].get<bool>();
        if (j.contains("disk_size") && !j["disk_size"].is_null()) r.disk_size = j["disk_size"].get<std::size_t>();
        if (j.contains("bibd") && !j["bibd"].is_null()) {
            const auto& b = j["bibd"];
            r.bibd = BibdParams{b.at("v").get<std::size_t>(), b.at("b").get<std::size_t>(),
                                b.at("k").get<std::size_t>(), b.at("r").get<std::size_t>(),
                                b.at("lambda").get<std::size_t>()};
        }
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed scan record: ") + e.what());
    }
}

std::optional<Residue> canonical_generator(const PrimeField& field, std::size_t k) {
    const Residue p = field.modulus();
    if (k == 0 || (p - 1u) % k != 0) return std::nullopt;
    for (Residue g = 1; g < p; ++g)
        if (field.mult_order(g) == k) return g;
    return std::nullopt;
}

ScanRecord scan_pair(Residue p, std::size_t k, bool verify_designs) {
    auto field = PrimeField::make(p);
    const auto g = canonical_generator(*field, k);
    if (!g || k < 2) throw std::domain_error("no subgroup of order " + std::to_string(k) + " in Z_" + std::to_string(p));
    const PhiGroup phi = PhiGroup::generated_by(field, *g);

    ScanRecord rec;
    rec.p = p;
    rec.g = *g;
    rec.k = k;
    rec.even = k % 2 == 0;
    rec.timestamp = utc_now();
    rec.circular = passes_prefilter(p, k) && is_circular(phi).circular;
    if (rec.circular && verify_designs) {
        const Disk unit = disk(phi, 1, 0);
        rec.disk_size = unit.points.size();
        PointSet punctured(unit.points.begin() + 1, unit.points.end());  // drop 0
        rec.non_group = !is_multiplicative_group(*field, punctured);
        const auto check = verify_bibd(disk_design(phi));
        rec.bibd = check.params;
    }
    return rec;
}

ScanCache::ScanCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto r = ScanRecord::from_json_line(line);
        if (keys_.insert({r.p, r.k}).second) records_.push_back(std::move(r));
    }
}

void ScanCache::append(const ScanRecord& r) {
    if (!keys_.insert({r.p, r.k}).second) return;
    if (path_.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path_.parent_path(), ec);
    }
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot write scan cache " + path_.string());
    out << r.to_json_line() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot write scan cache " + path_.string());
    records_.push_back(r);
}

ScanResult scan(const ScanOptions& options, ScanCache* cache) {
    if (options.p_min > options.p_max) throw std::invalid_argument("scan: p_min must not exceed p_max");

    std::vector<std::pair<Residue, std::size_t>> todo;
    std::vector<ScanRecord> cached;
    for (Residue p : primes_in(options.p_min, options.p_max)) {
        for (std::size_t k : subgroup_orders(p)) {
            if (options.order && *options.order != k) continue;
            if (cache && cache->contains(p, k)) {
                for (const auto& r : cache->records())
                    if (r.p == p && r.k == k) cached.push_back(r);
                continue;
            }
            todo.emplace_back(p, k);
        }
    }

    std::vector<ScanRecord> fresh(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < todo.size(); i = next++)
            fresh[i] = scan_pair(todo[i].first, todo[i].second, options.verify_designs);
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(todo.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    // Single writer, in (p, k) order.
    if (cache)
        for (const auto& r : fresh) cache->append(r);

    ScanResult result;
    result.computed = fresh.size();
    result.records = std::move(cached);
    result.records.insert(result.records.end(), fresh.begin(), fresh.end());
    std::sort(result.records.begin(), result.records.end(),
              [](const ScanRecord& a, const ScanRecord& b) { return std::pair(a.p, a.k) < std::pair(b.p, b.k); });
    return result;
}

std::vector<ConjectureRow> conjecture_rows(std::uint64_t p_min, std::uint64_t p_max, bool odd_only) {
    if (p_min > p_max) throw std::invalid_argument("conjecture: p_min must not exceed p_max");
    std::vector<ConjectureRow> rows;
    for (Residue p : primes_in(p_min, p_max)) {
        auto field = PrimeField::make(p);
        for (std::size_t k : subgroup_orders(p)) {
            if (odd_only && k % 2 == 0) continue;
            if (!passes_prefilter(p, k)) continue;
            const PhiGroup phi = PhiGroup::generated_by(field, *canonical_generator(*field, k));
            if (!is_circular(phi).circular) continue;

            const auto m = tangent_radius_set(phi, 1, 0);
            ConjectureRow row{p, phi.generator(), k, k / 2, m.classes.size(), false, true, false, 0};
            row.matches = row.m_size == 2 * row.n;
            for (Residue b : {Residue{1}, Residue(p - 1)})
                row.translation_invariant = row.translation_invariant && tangent_radius_set(phi, 1, b).classes == m.classes;
            const auto u = opposite_family_union(phi, m);
            row.union_formula_holds = u.points == disk_bruteforce(phi, 1, 0).points;
            row.overlapping_pairs = u.overlapping_pairs;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace circnear
