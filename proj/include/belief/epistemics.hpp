#pragma once

#include <cstdint>
#include <vector>

#include "belief/logic.hpp"

namespace belief {

// Total preorder over a universe's worlds as a rank per world id.  Ranks are
// always normalized: the set of used ranks is {0, ..., layer_count()-1}.
class ranking {
public:
    ranking() = default;  // detached; assign before use

    static ranking uniform(universe_ptr u);
    // layers[i] gets rank i; layers must partition the universe.
    static ranking from_layers(const std::vector<world_set>& layers);
    // Arbitrary rank values, compressed to contiguous ranks preserving order.
    static ranking from_ranks(universe_ptr u, std::vector<std::uint32_t> ranks);

    const universe_ptr& uni() const { return uni_; }
    std::uint32_t rank(std::size_t id) const { return ranks_[id]; }
    const std::vector<std::uint32_t>& ranks() const { return ranks_; }
    std::uint32_t layer_count() const { return layer_count_; }

    world_set layer(std::uint32_t k) const;
    std::vector<world_set> layers() const;

    // Rank-minimal subset of s; empty for empty s.
    world_set min_of(const world_set& s) const;

    bool operator==(const ranking& o) const;
    bool operator!=(const ranking& o) const { return !(*this == o); }

private:
    ranking(universe_ptr u, std::vector<std::uint32_t> ranks, std::uint32_t layer_count);

    universe_ptr uni_;
    std::vector<std::uint32_t> ranks_;
    std::uint32_t layer_count_ = 1;
};

struct epistemic_state {
    world_set belief;
    ranking order;
};

// True iff K is empty or the rank-0 layer equals K.
bool is_faithful(const ranking& rk, const world_set& k);

// Belief K at rank 0, everything else at rank 1 (uniform when K is empty or
// total).  The shape shared by initial states and full-meet posteriors.
epistemic_state two_layer_state(const world_set& k);

// [K*phi] = min([phi], ranking); empty iff phi is empty.
world_set revise_R(const epistemic_state& s, const world_set& phi);

// [K-phi] = [K] u min(M \ [phi], ranking); returns the belief unchanged when
// phi is the full universe.
world_set contract_C(const epistemic_state& s, const world_set& phi);

}  // namespace belief
