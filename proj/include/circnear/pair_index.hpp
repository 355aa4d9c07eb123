#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "circnear/field.hpp"

namespace circnear {

/// For every unordered pair {x, y} of points in [0, v), the ids of the blocks
/// containing both. Stored in CSR form over the upper triangle.
class PairBlockIndex {
public:
    PairBlockIndex(std::size_t v, const std::vector<std::vector<Residue>>& blocks) : v_(v) {
        const std::size_t pairs = v * (v - 1) / 2;
        offsets_.assign(pairs + 1, 0);
        for (const auto& block : blocks)
            for_each_pair(block, [&](std::size_t id) { ++offsets_[id + 1]; });
        for (std::size_t i = 0; i < pairs; ++i) offsets_[i + 1] += offsets_[i];
        ids_.resize(offsets_[pairs]);
        std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (std::uint32_t b = 0; b < blocks.size(); ++b)
            for_each_pair(blocks[b], [&](std::size_t id) { ids_[cursor[id]++] = b; });
    }

    std::size_t points() const noexcept { return v_; }

    /// Position of {x, y} (x != y) in the upper-triangular enumeration.
    std::size_t pair_id(Residue x, Residue y) const {
        if (x == y) throw std::domain_error("pair_index: points must be distinct");
        if (x > y) std::swap(x, y);
        return std::size_t{x} * v_ - std::size_t{x} * (x + 1) / 2 + (y - x - 1);
    }

    std::span<const std::uint32_t> blocks_through(Residue x, Residue y) const {
        const std::size_t id = pair_id(x, y);
        return {ids_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
    }

    std::size_t count(Residue x, Residue y) const {
        const std::size_t id = pair_id(x, y);
        return offsets_[id + 1] - offsets_[id];
    }

private:
    // Blocks are ascending point lists.
    template <class F>
    void for_each_pair(const std::vector<Residue>& block, F&& f) const {
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) f(pair_id(block[i], block[j]));
    }

    std::size_t v_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> ids_;
};

}  // namespace circnear
