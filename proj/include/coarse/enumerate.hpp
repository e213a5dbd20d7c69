// enumerate.hpp -- subset enumeration and sampling over window points.

#pragma once

#include "coarse/core.hpp"

#include <random>

namespace coarse {

/// All 2^n - 1 non-empty subsets of the given points (n capped at 20).
template <class P>
std::vector<HyperPoint<P>> all_nonempty_subsets(const std::vector<P>& pts) {
    if (pts.size() > 20) throw std::invalid_argument("all_nonempty_subsets: too many points");
    const std::uint32_t total = 1u << pts.size();
    std::vector<HyperPoint<P>> out;
    out.reserve(total - 1);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        std::vector<P> elems;
        for (size_t i = 0; i < pts.size(); ++i)
            if (mask & (1u << i)) elems.push_back(pts[i]);
        out.emplace_back(std::move(elems));
    }
    return out;
}

/// Deterministic sample of non-empty subsets (duplicates possible).
template <class P>
std::vector<HyperPoint<P>> sample_nonempty_subsets(const std::vector<P>& pts, int count,
                                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
    std::vector<HyperPoint<P>> out;
    out.reserve(static_cast<size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        std::vector<P> elems;
        for (const P& p : pts)
            if (coin(rng)) elems.push_back(p);
        if (elems.empty()) elems.push_back(pts[pick(rng)]);
        out.emplace_back(std::move(elems));
    }
    return out;
}

}  // namespace coarse
