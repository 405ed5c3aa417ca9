#pragma once

#include <vector>

#include "belief/logic.hpp"

namespace belief::detail {

// Minimum Hamming distance from every world to the (non-empty) source set.
// Full mode walks the hypercube breadth-first from all sources at once, so the
// cost is O(2^n * n) rather than quadratic in the world count.
inline std::vector<unsigned> distance_field(const world_set& src) {
    const auto& u = src.uni();
    const std::size_t count = u->world_count();
    const std::size_t n = u->atom_count();
    constexpr unsigned inf = ~0u;
    std::vector<unsigned> dist(count, inf);
    if (u->full_mode()) {
        std::vector<std::size_t> frontier;
        src.for_each([&](std::size_t id) {
            dist[id] = 0;
            frontier.push_back(id);
        });
        std::vector<std::size_t> next;
        unsigned d = 0;
        while (!frontier.empty()) {
            ++d;
            next.clear();
            for (std::size_t id : frontier) {
                for (std::size_t bit = 0; bit < n; ++bit) {
                    std::size_t nb = id ^ (std::size_t{1} << bit);
                    if (dist[nb] == inf) {
                        dist[nb] = d;
                        next.push_back(nb);
                    }
                }
            }
            frontier.swap(next);
        }
    } else {
        auto ids = src.ids();
        for (std::size_t id = 0; id < count; ++id) {
            unsigned best = inf;
            for (std::size_t s : ids) {
                unsigned h = u->hamming(id, s);
                if (h < best) best = h;
                if (!best) break;
            }
            dist[id] = best;
        }
    }
    return dist;
}

}  // namespace belief::detail
