#include "belief/metrics.hpp"

#include <limits>

#include "distance_field.hpp"

namespace belief {

unsigned dist_A(const world_set& k1, const world_set& k2) {
    if (k1.empty()) throw inconsistent_belief_set("dist_A (first set)");
    if (k2.empty()) throw inconsistent_belief_set("dist_A (second set)");
    auto dist = detail::distance_field(k1);
    unsigned best = std::numeric_limits<unsigned>::max();
    k2.for_each([&](std::size_t id) {
        if (dist[id] < best) best = dist[id];
    });
    return best;
}

world_set dist_B(const world_set& k1, const world_set& k2) {
    return (k1 - k2) | (k2 - k1);
}

sequence_verdict check_sequence(const std::vector<world_set>& seq, seq_condition cond) {
    if (seq.size() < 2) throw error("sequence conditions need at least two sets");
    const std::size_t l = seq.size();
    if (cond == seq_condition::DA)
        for (const auto& t : seq)
            if (t.empty()) throw inconsistent_belief_set("check_sequence(DA)");

    // dist_A is the only pair metric worth precomputing; one distance field per
    // source set covers all of its pairs.
    std::vector<std::vector<unsigned>> da;
    if (cond == seq_condition::DA) {
        da.resize(l);
        for (std::size_t i = 0; i < l; ++i) {
            auto field = detail::distance_field(seq[i]);
            da[i].assign(l, 0);
            for (std::size_t m = 0; m < l; ++m) {
                unsigned best = std::numeric_limits<unsigned>::max();
                seq[m].for_each([&](std::size_t id) {
                    if (field[id] < best) best = field[id];
                });
                da[i][m] = best;
            }
        }
    }

    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = i + 1; j < l; ++j) {
            for (std::size_t m = j + 1; m < l; ++m) {
                bool ok = true;
                switch (cond) {
                    case seq_condition::DA:
                        ok = da[i][m] >= da[j][m];
                        break;
                    case seq_condition::DB:
                        ok = dist_B(seq[i], seq[m]).count() >= dist_B(seq[j], seq[m]).count();
                        break;
                    case seq_condition::SD:
                        ok = dist_B(seq[j], seq[m]).subset_of(dist_B(seq[i], seq[m]));
                        break;
                }
                if (!ok) return {cond, false, std::array<std::size_t, 3>{i + 1, j + 1, m + 1}};
            }
        }
    }
    return {cond, true, std::nullopt};
}

std::vector<world_set> dalal_gradual(const world_set& k, const world_set& phi) {
    if (k.empty()) throw inconsistent_belief_set("dalal_gradual (belief set)");
    if (phi.empty()) throw inconsistent_belief_set("dalal_gradual (sentence)");
    auto dist = detail::distance_field(k);
    unsigned dstar = std::numeric_limits<unsigned>::max();
    phi.for_each([&](std::size_t id) {
        if (dist[id] < dstar) dstar = dist[id];
    });
    std::vector<world_set> shells;
    if (dstar <= 1) return shells;
    auto u = k.uni();
    shells.assign(dstar - 1, world_set(u));
    for (std::size_t id = 0; id < dist.size(); ++id)
        if (dist[id] >= 1 && dist[id] < dstar) shells[dist[id] - 1].add(id);
    return shells;
}

}  // namespace belief
