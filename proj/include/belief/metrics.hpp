#pragma once

#include <array>
#include <optional>
#include <vector>

#include "belief/logic.hpp"

namespace belief {

// Minimum Hamming distance over pairs of worlds from the two sets; both sets
// must be non-empty.
unsigned dist_A(const world_set& k1, const world_set& k2);

// Symmetric difference of the two model sets.
world_set dist_B(const world_set& k1, const world_set& k2);

enum class seq_condition { DA, DB, SD };

struct sequence_verdict {
    seq_condition condition;
    bool holds;
    // First violating triple in lexicographic order, 1-based, i < j < m.
    std::optional<std::array<std::size_t, 3>> violation;
};

// Quantifies over all i < j < m:
//   DA: dist_A(T_i,T_m) >= dist_A(T_j,T_m)   (all members must be consistent)
//   DB: |dist_B(T_i,T_m)| >= |dist_B(T_j,T_m)|
//   SD: dist_B(T_i,T_m) includes dist_B(T_j,T_m)
sequence_verdict check_sequence(const std::vector<world_set>& seq, seq_condition cond);

// Strict Hamming shells between K and the Dalal revision outcome: layer k
// holds every world at distance exactly k from K, for 0 < k < d* where d* is
// the distance of the closest phi-world.  Empty when d* <= 1.
std::vector<world_set> dalal_gradual(const world_set& k, const world_set& phi);

}  // namespace belief
