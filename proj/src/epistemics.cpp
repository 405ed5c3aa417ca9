#include "belief/epistemics.hpp"

#include <algorithm>
#include <limits>

namespace belief {

ranking::ranking(universe_ptr u, std::vector<std::uint32_t> ranks, std::uint32_t layer_count)
    : uni_(std::move(u)), ranks_(std::move(ranks)), layer_count_(layer_count) {}

ranking ranking::uniform(universe_ptr u) {
    std::vector<std::uint32_t> ranks(u->world_count(), 0);
    return ranking(std::move(u), std::move(ranks), 1);
}

ranking ranking::from_layers(const std::vector<world_set>& layers) {
    if (layers.empty()) throw not_a_partition("no layers");
    auto u = layers[0].uni();
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> ranks(u->world_count(), unset);
    for (std::size_t k = 0; k < layers.size(); ++k) {
        if (layers[k].uni() != u) throw error("layers belong to different universes");
        if (layers[k].empty()) throw not_a_partition("layer " + std::to_string(k) + " is empty");
        layers[k].for_each([&](std::size_t id) {
            if (ranks[id] != unset)
                throw not_a_partition("world " + u->world_label(id) + " appears in two layers");
            ranks[id] = static_cast<std::uint32_t>(k);
        });
    }
    for (std::size_t id = 0; id < ranks.size(); ++id)
        if (ranks[id] == unset)
            throw not_a_partition("world " + u->world_label(id) + " appears in no layer");
    return ranking(std::move(u), std::move(ranks), static_cast<std::uint32_t>(layers.size()));
}

ranking ranking::from_ranks(universe_ptr u, std::vector<std::uint32_t> ranks) {
    if (ranks.size() != u->world_count()) throw error("rank vector length must match world count");
    std::vector<std::uint32_t> used(ranks);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (auto& r : ranks)
        r = static_cast<std::uint32_t>(std::lower_bound(used.begin(), used.end(), r) - used.begin());
    auto n = static_cast<std::uint32_t>(used.size());
    return ranking(std::move(u), std::move(ranks), std::max<std::uint32_t>(n, 1));
}

world_set ranking::layer(std::uint32_t k) const {
    world_set s(uni_);
    for (std::size_t id = 0; id < ranks_.size(); ++id)
        if (ranks_[id] == k) s.add(id);
    return s;
}

std::vector<world_set> ranking::layers() const {
    std::vector<world_set> out(layer_count_, world_set(uni_));
    for (std::size_t id = 0; id < ranks_.size(); ++id) out[ranks_[id]].add(id);
    return out;
}

world_set ranking::min_of(const world_set& s) const {
    if (s.uni() != uni_) throw error("set belongs to a different universe");
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t best = unset;
    s.for_each([&](std::size_t id) { best = std::min(best, ranks_[id]); });
    world_set out(uni_);
    if (best == unset) return out;
    s.for_each([&](std::size_t id) {
        if (ranks_[id] == best) out.add(id);
    });
    return out;
}

bool ranking::operator==(const ranking& o) const {
    return uni_ == o.uni_ && ranks_ == o.ranks_;
}

bool is_faithful(const ranking& rk, const world_set& k) {
    if (rk.uni() != k.uni()) throw error("ranking and belief set universes differ");
    if (k.empty()) return true;
    bool ok = true;
    k.for_each([&](std::size_t id) { ok = ok && rk.rank(id) == 0; });
    if (!ok) return false;
    std::size_t zero = 0;
    for (auto r : rk.ranks()) zero += r == 0;
    return zero == k.count();
}

epistemic_state two_layer_state(const world_set& k) {
    auto u = k.uni();
    if (k.empty() || k.is_all()) return {k, ranking::uniform(u)};
    std::vector<std::uint32_t> ranks(u->world_count(), 1);
    k.for_each([&](std::size_t id) { ranks[id] = 0; });
    return {k, ranking::from_ranks(std::move(u), std::move(ranks))};
}

world_set revise_R(const epistemic_state& s, const world_set& phi) {
    return s.order.min_of(phi);
}

world_set contract_C(const epistemic_state& s, const world_set& phi) {
    if (phi.is_all()) return s.belief;
    return s.belief | s.order.min_of(~phi);
}

}  // namespace belief
